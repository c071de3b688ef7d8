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
 * Variances, covariances, the sum and product uncertainty equalities for
 * pairs of operators on a pure state, their hierarchical truncations, and
 * the baseline unitary bounds they are compared against.
 *
 * Sign convention: every sum/product form carries a paired ±/∓. SignChoice
 * selects the upper pair (Plus: "+i" inside the bracket, "-Im Cov" outside)
 * or the lower pair (Minus); mixed selections are not representable.
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uur/linalg.hpp"

namespace uur {

struct VarianceValue {
    double value = 0.0;
};

struct CovarianceValue {
    Complex value{};
};

enum class SignChoice { Plus, Minus };

/// Sign applied inside the bracket: +1 for Plus, -1 for Minus.
constexpr double sign_factor(SignChoice s) {
    return s == SignChoice::Plus ? 1.0 : -1.0;
}

const char *sign_name(SignChoice s);

enum class BoundKind { MsuurSum, Bpuur1, Bpuur2, Buur, Uurs, Uurp, UuesRhs, UuepRhs };

struct BoundValue {
    BoundKind kind = BoundKind::UuesRhs;
    /// Number of kept perpendicular terms for Uurs/Uurp, 0 otherwise.
    int order = 0;
    double value = 0.0;
    std::optional<SignChoice> sign_used;
    /// Zero-based indices into the complement basis.
    std::optional<std::vector<int>> subset_used;

    /// e.g. "UURS_2", "BPUUR1", "UUES_RHS"
    [[nodiscard]] std::string label() const;
};

/// Choice between the two paired sign variants when a single value is wanted.
enum class SignPolicy { Best, Plus, Minus };

struct UncertaintyReport {
    VarianceValue dU2;
    VarianceValue dV2;
    CovarianceValue cov;
    double lhs_sum = 0.0;
    double lhs_prod = 0.0;
    /// Equality right-hand sides for both signs plus every bound. Product
    /// entries are absent when the variance product is degenerate.
    std::vector<BoundValue> bounds;
    /// Nonzero perpendicular summands in the sum equality for the sign the
    /// policy selects.
    int nonzero_term_count = 0;

    [[nodiscard]] const BoundValue *find(BoundKind kind, int order = 0,
                                         std::optional<SignChoice> sign = std::nullopt) const;
};

// --- variances -------------------------------------------------------------

/// ⟨O†O⟩ - |⟨O⟩|², clamped at zero against roundoff.
VarianceValue general_variance(const Operator &op, const PureState &psi);
/// 1 - |⟨U⟩|² for unitary U.
VarianceValue unitary_variance(const Operator &u, const PureState &psi);
/// ⟨A†B⟩ - ⟨A†⟩⟨B⟩
CovarianceValue covariance(const Operator &a, const Operator &b, const PureState &psi);

// --- equalities ------------------------------------------------------------

/// |⟨ψ|A† ± iB†|ψ⊥_k⟩|² for every basis vector.
std::vector<double> sum_terms(const Operator &a, const Operator &b, const PureState &psi,
                              const ComplementBasis &basis, SignChoice s);

/// |⟨ψ|A†ΔB ± iB†ΔA|ψ⊥_k⟩|² for every basis vector; requires ΔAΔB > 0.
std::vector<double> product_terms(const Operator &a, const Operator &b, const PureState &psi,
                                  const ComplementBasis &basis, SignChoice s);

/// Σ_k |⟨ψ|A† ± iB†|ψ⊥_k⟩|² ∓ 2 Im Cov(A,B); equals ΔA² + ΔB².
BoundValue sum_equality_rhs(const Operator &a, const Operator &b, const PureState &psi,
                            const ComplementBasis &basis, SignChoice s);

/// Σ_k |⟨ψ|A†ΔB ± iB†ΔA|ψ⊥_k⟩|² / (2ΔAΔB) ∓ Im Cov(A,B); equals ΔAΔB.
/// Throws ErrorCode::DegenerateVariance when ΔAΔB <= tol::kDegenerate.
BoundValue product_equality_rhs(const Operator &a, const Operator &b, const PureState &psi,
                                const ComplementBasis &basis, SignChoice s);

// --- hierarchical bounds ---------------------------------------------------

/// Indices of the n largest terms, ties to the lower index, sorted ascending.
std::vector<int> top_n_subset(std::span<const double> terms, int n);

/// UURS_n: best n perpendicular terms of the sum equality.
BoundValue hierarchical_sum_bound(const Operator &u, const Operator &v, const PureState &psi,
                                  const ComplementBasis &basis, int n, SignChoice s);

/// UURP_n: best n perpendicular terms of the product equality.
BoundValue hierarchical_product_bound(const Operator &u, const Operator &v, const PureState &psi,
                                      const ComplementBasis &basis, int n, SignChoice s);

/// Evaluates `bound(SignChoice)` for both signs and keeps the larger value;
/// ties go to Plus.
template <class BoundFn> BoundValue best_sign(BoundFn &&bound) {
    BoundValue plus = bound(SignChoice::Plus);
    BoundValue minus = bound(SignChoice::Minus);
    plus.sign_used = SignChoice::Plus;
    minus.sign_used = SignChoice::Minus;
    return minus.value > plus.value ? minus : plus;
}

/// Applies a SignPolicy to a sign-dependent bound.
template <class BoundFn> BoundValue apply_sign_policy(SignPolicy policy, BoundFn &&bound) {
    switch (policy) {
    case SignPolicy::Plus: {
        BoundValue b = bound(SignChoice::Plus);
        b.sign_used = SignChoice::Plus;
        return b;
    }
    case SignPolicy::Minus: {
        BoundValue b = bound(SignChoice::Minus);
        b.sign_used = SignChoice::Minus;
        return b;
    }
    case SignPolicy::Best:
        break;
    }
    return best_sign(bound);
}

// --- baseline bounds -------------------------------------------------------

/// 1 + |⟨U†V⟩|² - ⟨U†V⟩⟨U⟩⟨V†⟩ - ⟨V⟩⟨U†⟩⟨V†U⟩, a lower bound on ΔU² + ΔV².
BoundValue bpuur1_bound(const Operator &u, const Operator &v, const PureState &psi);

/// |⟨ψ|U† ± iV†|ψ⊥⟩|² ∓ 2 Im Cov(U,V) for a single unit vector ψ⊥ ⟂ ψ.
BoundValue bpuur2_bound(const Operator &u, const Operator &v, const PureState &psi,
                        const CVector &perp, SignChoice s);

/// |Cov(U,V)|², a lower bound on ΔU²ΔV².
BoundValue buur_bound(const Operator &u, const Operator &v, const PureState &psi);

struct MsuurCheck {
    /// (1+2K)ΔU²ΔV² + K²(ΔU²+ΔV²) - K². For K = +inf the relation divided
    /// by K² is reported instead: ΔU² + ΔV² - 1.
    double residual = 0.0;
    bool holds = false;
};

/// Checks the commuting-phase relation for UV = e^{iφ}VU with K = tan(|φ|/2).
/// Throws ErrorCode::NoCommutationPhase if the pair has no scalar phase or the
/// phase does not match K.
MsuurCheck msuur_check(const Operator &u, const Operator &v, const PureState &psi, double k);

/// min(x + y) over (1+2K)xy + K²(x+y) >= K², x,y in [0,1]: 2K/(1+2K).
/// K = +inf gives 1.
double msuur_sum_lower_bound(double k);

/// |⟨ψ|U|ψ⟩|
double visibility(const Operator &u, const PureState &psi);

/**
 * @brief Every variance, equality and bound for one (U, V, ψ, basis).
 *
 * Requires unitary U and V. Product-form entries are omitted when ΔUΔV is
 * degenerate. The Bpuur2 entry uses the best single basis vector, which makes
 * it coincide with UURS_1 on that basis. MsuurSum is present only when the
 * pair has a nontrivial scalar commutation phase.
 */
UncertaintyReport full_report(const Operator &u, const Operator &v, const PureState &psi,
                              const ComplementBasis &basis, std::span<const int> n_values,
                              SignPolicy policy = SignPolicy::Best);

} // namespace uur
