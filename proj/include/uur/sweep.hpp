// Copyright 2026 The uur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * θ sweeps of the clock/shift pair on cosθ|0⟩ - sinθ|d-1⟩, producing the
 * curve data for comparing the equalities and bounds.
 *
 * Columns: theta, lhs_sum, lhs_prod, rhs_uues, rhs_uuep_sq, lb_msuur,
 * lb_bpuur1, lb_bpuur2, lb_buur, lb_uurs_<n>..., lb_uurp_<n>...,
 * nonzero_term_count.
 *
 * Every lb_* column is a lower bound on the lhs_* column of the same form.
 * For the product form the UURP_n bound b on ΔUΔV is stored as max(b, 0)²,
 * the bound it implies on ΔU²ΔV². Product cells are empty when ΔUΔV is
 * degenerate.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uur/table.hpp"
#include "uur/uncertainty.hpp"

namespace uur {

struct SweepConfig {
    Index dim = 2;
    int theta_steps = 201;
    /// Empty selects {1, 2} clipped to d-1.
    std::vector<int> n_values;
    SignPolicy sign_policy = SignPolicy::Best;
    /// Tolerance for the row-wise equality checks.
    double eq_tol = tol::kEq;
};

struct SweepResult {
    Table table;
    /// Rows whose equality columns disagree with their LHS beyond eq_tol.
    std::size_t violations = 0;
    std::string violation_detail;
};

/// Validates the config; throws InvalidArgument.
void validate(const SweepConfig &config);

SweepResult run_sweep(const SweepConfig &config);

const char *sign_policy_name(SignPolicy policy);

} // namespace uur
