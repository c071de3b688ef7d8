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
 * Large-dimension limit of the clock/shift pair. Writing U = e^{i s u} and
 * V = e^{i s v} with s = √(2π/d), the unitary variances, covariance and
 * perpendicular sums approach (2π/d)-scaled Hermitian counterparts on states
 * that are localized in both the clock and the shift eigenbases.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uur/operators.hpp"
#include "uur/table.hpp"
#include "uur/uncertainty.hpp"

namespace uur {

struct HermitianPair {
    Operator u;
    Operator v;
    double scale = 0.0;
    std::optional<DftPair> source;
};

/// u, v with clock = e^{i s u}, shift = e^{i s v}, s = √(2π/d), principal
/// branch. Even d puts a clock eigenphase on the branch cut and throws
/// ErrorCode::BranchAmbiguity.
HermitianPair hermitian_pair_from_dft(const DftPair &pair);

/// ⟨ψ|[u,v]|ψ⟩, purely imaginary for Hermitian u, v (checked).
Complex commutator_expectation(const Operator &u, const Operator &v, const PureState &psi);

/// Σ_k |⟨ψ⊥_k|u ∓ iv|ψ⟩|² ± i⟨[u,v]⟩; equals Δu² + Δv².
double hermitian_sum_equality(const Operator &u, const Operator &v, const PureState &psi,
                              const ComplementBasis &basis, SignChoice s);

/// (±½ i⟨[u,v]⟩) / (1 - ½ Σ_k |⟨ψ⊥_k|u/Δu ∓ iv/Δv|ψ⟩|²); equals ΔuΔv.
/// Throws DegenerateVariance for ΔuΔv <= tol::kDegenerate and
/// VanishingDenominator when |denominator| <= tol::kDegenerate.
double hermitian_product_equality(const Operator &u, const Operator &v, const PureState &psi,
                                  const ComplementBasis &basis, SignChoice s);

struct TruncatedRelations {
    /// |⟨ψ⊥|u ∓ iv|ψ⟩|² ± i⟨[u,v]⟩ <= Δu² + Δv²
    double sum_form = 0.0;
    /// Single-term quotient, a lower bound on ΔuΔv. Absent when the chosen
    /// sign makes the numerator ±½ i⟨[u,v]⟩ negative: the truncated
    /// denominator can then shrink toward zero and the quotient stops
    /// bounding ΔuΔv.
    std::optional<double> product_form;
};

TruncatedRelations hermitian_truncated_relations(const Operator &u, const Operator &v,
                                                 const PureState &psi, const CVector &perp,
                                                 SignChoice s);

/// Real Gaussian centered at index 0 with periodic distance and width
/// σ = 1.5·√(d/2π), a fixed squeeze relative to the width that balances
/// the clock and shift spreads. Both spreads shrink like d^{-1/2}.
PureState localized_state(Index dim);

struct QuantityError {
    std::string name;
    double unitary = 0.0;
    double hermitian_scaled = 0.0;
    double relative_error = 0.0;
};

struct ConvergenceRecord {
    Index dim = 0;
    double lhs_unitary = 0.0;          // ΔU² + ΔV²
    double lhs_scaled_hermitian = 0.0; // (2π/d)(Δu² + Δv²)
    double relative_error = 0.0;
    /// var_u, var_v, im_cov, perp_sum_upper, perp_sum_lower
    std::vector<QuantityError> quantities;
};

/// |a - b| / max(|a|, tol::kRelativeFloor)
double relative_error(double unitary, double hermitian_scaled);

/// Requires pair.source, the clock/shift pair the generators came from.
ConvergenceRecord convergence_record(const HermitianPair &pair, const PureState &psi,
                                     const ComplementBasis &basis);

struct ConvergenceStudy {
    std::vector<ConvergenceRecord> records;
    /// Dimensions skipped because of a branch-cut eigenphase.
    std::vector<Index> skipped;
};

/// Records for each dimension on localized_state(d). The complement basis for
/// perpendicular sums is random, seeded by mix_seed(seed, d).
ConvergenceStudy convergence_study(std::span<const Index> dims, std::uint64_t seed);

/// True when every tracked relative error strictly decreases between
/// consecutive records with dim >= threshold. `detail` names the first
/// offending quantity.
bool errors_decrease_after(std::span<const ConvergenceRecord> records, Index threshold,
                           std::string *detail = nullptr);

/// Columns: dim, lhs_unitary, lhs_scaled_hermitian, relative_error, then
/// <q>_unitary, <q>_hermitian_scaled, <q>_rel_error per tracked quantity.
Table convergence_table(const ConvergenceStudy &study, std::uint64_t seed);

/// Decay summary: first/last relative error per quantity and whether the
/// errors decrease strictly after `threshold`.
std::string convergence_summary(const ConvergenceStudy &study, std::uint64_t seed,
                                Index threshold = 9);

} // namespace uur
