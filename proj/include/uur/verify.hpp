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
 * Randomized property suite: the equalities, bound validity, hierarchy,
 * subset oracle, basis and phase independence, checked on seeded Haar
 * instances. Every trial draws from its own seed stream, so results do not
 * depend on scheduling.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uur/linalg.hpp"

namespace uur {

struct VerifyConfig {
    std::vector<Index> dims{2, 3, 4, 5, 6, 7, 8};
    std::size_t trials = 1000;
    std::uint64_t seed = 7;
    double eq_tol = tol::kEq;
    double quotient_tol = tol::kQuotient;
};

struct PropertyResult {
    std::string name;
    double tolerance = 0.0;
    std::size_t checked = 0;
    std::size_t passed = 0;
    /// Largest residual seen; a check passes when residual <= tolerance.
    double worst = 0.0;

    [[nodiscard]] bool ok() const { return checked > 0 && passed == checked; }
};

struct VerifySummary {
    VerifyConfig config;
    std::vector<PropertyResult> properties;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const PropertyResult &property(const std::string &name) const;
    /// Deterministic multi-line report: one line per property.
    [[nodiscard]] std::string text() const;
};

void validate(const VerifyConfig &config);

VerifySummary run_verify(const VerifyConfig &config);

} // namespace uur
