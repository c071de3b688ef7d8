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

#include "uur/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "uur/operators.hpp"

namespace uur {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_same_dim(const Operator &a, const Operator &b, const PureState &psi) {
    if (a.dim() != psi.dim() || b.dim() != psi.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operator and state dimensions differ");
    }
}

void require_anchor(const ComplementBasis &basis, const PureState &psi) {
    if (!basis.anchored_at(psi)) {
        throw Error(ErrorCode::AnchorMismatch, "complement basis is anchored at a different state");
    }
}

void require_unitary_pair(const Operator &u, const Operator &v) {
    if (!u.is_unitary() || !v.is_unitary()) {
        throw Error(ErrorCode::NotUnitary, "bound requires a pair of unitary operators");
    }
}

void require_order(int n, const ComplementBasis &basis) {
    if (n < 1 || n > static_cast<int>(basis.size())) {
        std::ostringstream msg;
        msg << "subset size n = " << n << " outside [1, " << basis.size() << "]";
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

double sqrt_product(double x, double y) {
    return std::sqrt(x) * std::sqrt(y);
}

// ΔAΔB with the degenerate case rejected.
std::pair<double, double> nondegenerate_deviations(const Operator &a, const Operator &b,
                                                   const PureState &psi) {
    const double da = std::sqrt(general_variance(a, psi).value);
    const double db = std::sqrt(general_variance(b, psi).value);
    if (da * db <= tol::kDegenerate) {
        std::ostringstream msg;
        msg << "variance product " << da * db << " is degenerate";
        throw Error(ErrorCode::DegenerateVariance, msg.str());
    }
    return {da, db};
}

// |(x)†b_k|² for every basis vector.
std::vector<double> overlaps_squared(const CVector &x, const ComplementBasis &basis) {
    std::vector<double> out;
    out.reserve(basis.size());
    for (const auto &b : basis.vectors()) {
        out.push_back(std::norm(x.dot(b)));
    }
    return out;
}

double sum_over(std::span<const double> terms, std::span<const int> subset) {
    double acc = 0.0;
    for (int k : subset) {
        acc += terms[static_cast<std::size_t>(k)];
    }
    return acc;
}

std::vector<int> all_indices(std::size_t n) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

} // namespace

const char *sign_name(SignChoice s) {
    return s == SignChoice::Plus ? "plus" : "minus";
}

std::string BoundValue::label() const {
    switch (kind) {
    case BoundKind::MsuurSum:
        return "MSUUR_SUM";
    case BoundKind::Bpuur1:
        return "BPUUR1";
    case BoundKind::Bpuur2:
        return "BPUUR2";
    case BoundKind::Buur:
        return "BUUR";
    case BoundKind::Uurs:
        return "UURS_" + std::to_string(order);
    case BoundKind::Uurp:
        return "UURP_" + std::to_string(order);
    case BoundKind::UuesRhs:
        return "UUES_RHS";
    case BoundKind::UuepRhs:
        return "UUEP_RHS";
    }
    return "UNKNOWN";
}

const BoundValue *UncertaintyReport::find(BoundKind kind, int order,
                                          std::optional<SignChoice> sign) const {
    for (const auto &b : bounds) {
        if (b.kind == kind && b.order == order && (!sign || b.sign_used == sign)) {
            return &b;
        }
    }
    return nullptr;
}

// --- variances -------------------------------------------------------------

VarianceValue general_variance(const Operator &op, const PureState &psi) {
    if (op.dim() != psi.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operator and state dimensions differ");
    }
    const CVector image = op.matrix() * psi.amplitudes();
    const double second = image.squaredNorm();
    const double first = std::norm(psi.amplitudes().dot(image));
    return {std::max(0.0, second - first)};
}

VarianceValue unitary_variance(const Operator &u, const PureState &psi) {
    if (!u.is_unitary()) {
        throw Error(ErrorCode::NotUnitary, "unitary_variance requires a unitary operator");
    }
    return {std::max(0.0, 1.0 - std::norm(expectation(u, psi)))};
}

CovarianceValue covariance(const Operator &a, const Operator &b, const PureState &psi) {
    require_same_dim(a, b, psi);
    const CVector &p = psi.amplitudes();
    const CVector ap = a.matrix() * p;
    const CVector bp = b.matrix() * p;
    // ⟨A†B⟩ = (Aψ)†(Bψ), ⟨A†⟩ = conj⟨A⟩
    const Complex adag_b = ap.dot(bp);
    const Complex mean_a = p.dot(ap);
    const Complex mean_b = p.dot(bp);
    return {adag_b - std::conj(mean_a) * mean_b};
}

// --- equalities ------------------------------------------------------------

std::vector<double> sum_terms(const Operator &a, const Operator &b, const PureState &psi,
                              const ComplementBasis &basis, SignChoice s) {
    require_same_dim(a, b, psi);
    require_anchor(basis, psi);
    const CVector &p = psi.amplitudes();
    // ⟨ψ|A† ± iB†|b⟩ = (Aψ ∓ iBψ)†b
    const CVector f = a.matrix() * p - sign_factor(s) * kI * (b.matrix() * p);
    return overlaps_squared(f, basis);
}

std::vector<double> product_terms(const Operator &a, const Operator &b, const PureState &psi,
                                  const ComplementBasis &basis, SignChoice s) {
    require_same_dim(a, b, psi);
    require_anchor(basis, psi);
    const auto [da, db] = nondegenerate_deviations(a, b, psi);
    const CVector &p = psi.amplitudes();
    // ⟨ψ|A†ΔB ± iB†ΔA|b⟩ = (ΔB·Aψ ∓ iΔA·Bψ)†b
    const CVector g = db * (a.matrix() * p) - sign_factor(s) * kI * da * (b.matrix() * p);
    return overlaps_squared(g, basis);
}

BoundValue sum_equality_rhs(const Operator &a, const Operator &b, const PureState &psi,
                            const ComplementBasis &basis, SignChoice s) {
    const auto terms = sum_terms(a, b, psi, basis, s);
    const double im_cov = covariance(a, b, psi).value.imag();
    const double value = sum_over(terms, all_indices(terms.size())) - sign_factor(s) * 2.0 * im_cov;
    return BoundValue{BoundKind::UuesRhs, 0, value, s, std::nullopt};
}

BoundValue product_equality_rhs(const Operator &a, const Operator &b, const PureState &psi,
                                const ComplementBasis &basis, SignChoice s) {
    const auto terms = product_terms(a, b, psi, basis, s);
    const auto [da, db] = nondegenerate_deviations(a, b, psi);
    const double im_cov = covariance(a, b, psi).value.imag();
    const double value = sum_over(terms, all_indices(terms.size())) / (2.0 * da * db) -
                         sign_factor(s) * im_cov;
    return BoundValue{BoundKind::UuepRhs, 0, value, s, std::nullopt};
}

// --- hierarchical bounds ---------------------------------------------------

std::vector<int> top_n_subset(std::span<const double> terms, int n) {
    std::vector<int> order = all_indices(terms.size());
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return terms[static_cast<std::size_t>(lhs)] > terms[static_cast<std::size_t>(rhs)];
    });
    order.resize(static_cast<std::size_t>(n));
    std::sort(order.begin(), order.end());
    return order;
}

BoundValue hierarchical_sum_bound(const Operator &u, const Operator &v, const PureState &psi,
                                  const ComplementBasis &basis, int n, SignChoice s) {
    require_unitary_pair(u, v);
    require_order(n, basis);
    const auto terms = sum_terms(u, v, psi, basis, s);
    auto subset = top_n_subset(terms, n);
    const double im_cov = covariance(u, v, psi).value.imag();
    const double value = sum_over(terms, subset) - sign_factor(s) * 2.0 * im_cov;
    return BoundValue{BoundKind::Uurs, n, value, s, std::move(subset)};
}

BoundValue hierarchical_product_bound(const Operator &u, const Operator &v, const PureState &psi,
                                      const ComplementBasis &basis, int n, SignChoice s) {
    require_unitary_pair(u, v);
    require_order(n, basis);
    const auto terms = product_terms(u, v, psi, basis, s);
    const auto [du, dv] = nondegenerate_deviations(u, v, psi);
    auto subset = top_n_subset(terms, n);
    const double im_cov = covariance(u, v, psi).value.imag();
    const double value = sum_over(terms, subset) / (2.0 * du * dv) - sign_factor(s) * im_cov;
    return BoundValue{BoundKind::Uurp, n, value, s, std::move(subset)};
}

// --- baseline bounds -------------------------------------------------------

BoundValue bpuur1_bound(const Operator &u, const Operator &v, const PureState &psi) {
    require_unitary_pair(u, v);
    require_same_dim(u, v, psi);
    const CMatrix &um = u.matrix();
    const CMatrix &vm = v.matrix();
    const Complex udag_v = expectation(CMatrix(um.adjoint() * vm), psi);
    const Complex vdag_u = expectation(CMatrix(vm.adjoint() * um), psi);
    const Complex mean_u = expectation(u, psi);
    const Complex mean_v = expectation(v, psi);
    const Complex mean_udag = std::conj(mean_u);
    const Complex mean_vdag = std::conj(mean_v);
    const Complex total = 1.0 + std::norm(udag_v) - udag_v * mean_u * mean_vdag -
                          mean_v * mean_udag * vdag_u;
    if (std::abs(total.imag()) > tol::kOrth) {
        std::ostringstream msg;
        msg << "BPUUR1 residual imaginary part " << total.imag() << " exceeds tolerance";
        throw Error(ErrorCode::Numerical, msg.str());
    }
    return BoundValue{BoundKind::Bpuur1, 0, total.real(), std::nullopt, std::nullopt};
}

BoundValue bpuur2_bound(const Operator &u, const Operator &v, const PureState &psi,
                        const CVector &perp, SignChoice s) {
    require_unitary_pair(u, v);
    require_same_dim(u, v, psi);
    if (perp.size() != psi.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "perpendicular vector has wrong dimension");
    }
    if (std::abs(perp.norm() - 1.0) > tol::kNorm ||
        std::abs(psi.amplitudes().dot(perp)) > tol::kOrth) {
        throw Error(ErrorCode::NotOrthonormal, "perpendicular vector must be a unit vector orthogonal to psi");
    }
    const CVector &p = psi.amplitudes();
    const CVector f = u.matrix() * p - sign_factor(s) * kI * (v.matrix() * p);
    const double im_cov = covariance(u, v, psi).value.imag();
    const double value = std::norm(f.dot(perp)) - sign_factor(s) * 2.0 * im_cov;
    return BoundValue{BoundKind::Bpuur2, 0, value, s, std::nullopt};
}

BoundValue buur_bound(const Operator &u, const Operator &v, const PureState &psi) {
    require_unitary_pair(u, v);
    return BoundValue{BoundKind::Buur, 0, std::norm(covariance(u, v, psi).value), std::nullopt,
                      std::nullopt};
}

MsuurCheck msuur_check(const Operator &u, const Operator &v, const PureState &psi, double k) {
    require_unitary_pair(u, v);
    require_same_dim(u, v, psi);
    if (std::isnan(k)) {
        throw Error(ErrorCode::InvalidArgument, "K must not be NaN");
    }
    const auto phi = commutation_phase(u, v);
    if (!phi) {
        throw Error(ErrorCode::NoCommutationPhase, "pair does not satisfy UV = e^{i phi} VU");
    }
    const double expected = std::isinf(k) ? std::numbers::pi : 2.0 * std::atan(std::abs(k));
    if (std::abs(std::abs(*phi) - expected) > tol::kBranch) {
        std::ostringstream msg;
        msg << "K = " << k << " does not match commutation phase " << *phi;
        throw Error(ErrorCode::NoCommutationPhase, msg.str());
    }
    const double x = unitary_variance(u, psi).value;
    const double y = unitary_variance(v, psi).value;
    MsuurCheck out;
    if (std::isinf(k)) {
        out.residual = x + y - 1.0;
    } else {
        out.residual = (1.0 + 2.0 * k) * x * y + k * k * (x + y) - k * k;
    }
    out.holds = out.residual >= -tol::kEq;
    return out;
}

double msuur_sum_lower_bound(double k) {
    if (!(k > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "K must be positive");
    }
    if (std::isinf(k)) {
        return 1.0;
    }
    return 2.0 * k / (1.0 + 2.0 * k);
}

double visibility(const Operator &u, const PureState &psi) {
    if (!u.is_unitary()) {
        throw Error(ErrorCode::NotUnitary, "visibility requires a unitary operator");
    }
    return std::abs(expectation(u, psi));
}

// --- report ----------------------------------------------------------------

UncertaintyReport full_report(const Operator &u, const Operator &v, const PureState &psi,
                              const ComplementBasis &basis, std::span<const int> n_values,
                              SignPolicy policy) {
    require_unitary_pair(u, v);
    require_same_dim(u, v, psi);
    require_anchor(basis, psi);
    for (int n : n_values) {
        require_order(n, basis);
    }

    UncertaintyReport report;
    report.dU2 = unitary_variance(u, psi);
    report.dV2 = unitary_variance(v, psi);
    report.cov = covariance(u, v, psi);
    report.lhs_sum = report.dU2.value + report.dV2.value;
    report.lhs_prod = report.dU2.value * report.dV2.value;
    const bool degenerate = sqrt_product(report.dU2.value, report.dV2.value) <= tol::kDegenerate;

    for (SignChoice s : {SignChoice::Plus, SignChoice::Minus}) {
        report.bounds.push_back(sum_equality_rhs(u, v, psi, basis, s));
    }
    if (!degenerate) {
        for (SignChoice s : {SignChoice::Plus, SignChoice::Minus}) {
            report.bounds.push_back(product_equality_rhs(u, v, psi, basis, s));
        }
    }

    report.bounds.push_back(bpuur1_bound(u, v, psi));
    report.bounds.push_back(buur_bound(u, v, psi));

    BoundValue bp2 = apply_sign_policy(policy, [&](SignChoice s) {
        BoundValue best{BoundKind::Bpuur2, 0, -std::numeric_limits<double>::infinity(), s, {}};
        for (std::size_t k = 0; k < basis.size(); ++k) {
            BoundValue candidate = bpuur2_bound(u, v, psi, basis[k], s);
            if (candidate.value > best.value) {
                best = candidate;
                best.subset_used = std::vector<int>{static_cast<int>(k)};
            }
        }
        return best;
    });
    report.bounds.push_back(std::move(bp2));

    if (const auto phi = commutation_phase(u, v); phi && std::abs(*phi) > tol::kBranch) {
        const double k = std::numbers::pi - std::abs(*phi) <= tol::kBranch
                             ? std::numeric_limits<double>::infinity()
                             : std::tan(std::abs(*phi) / 2.0);
        report.bounds.push_back(
            BoundValue{BoundKind::MsuurSum, 0, msuur_sum_lower_bound(k), std::nullopt, std::nullopt});
    }

    for (int n : n_values) {
        report.bounds.push_back(apply_sign_policy(
            policy, [&](SignChoice s) { return hierarchical_sum_bound(u, v, psi, basis, n, s); }));
    }
    if (!degenerate) {
        for (int n : n_values) {
            report.bounds.push_back(apply_sign_policy(policy, [&](SignChoice s) {
                return hierarchical_product_bound(u, v, psi, basis, n, s);
            }));
        }
    }

    SignChoice count_sign = SignChoice::Plus;
    if (policy == SignPolicy::Minus) {
        count_sign = SignChoice::Minus;
    } else if (policy == SignPolicy::Best) {
        const auto *plus = report.find(BoundKind::UuesRhs, 0, SignChoice::Plus);
        const auto *minus = report.find(BoundKind::UuesRhs, 0, SignChoice::Minus);
        count_sign = minus->value > plus->value ? SignChoice::Minus : SignChoice::Plus;
    }
    const auto terms = sum_terms(u, v, psi, basis, count_sign);
    report.nonzero_term_count = static_cast<int>(std::count_if(
        terms.begin(), terms.end(), [](double t) { return std::sqrt(t) >= tol::kZeroAmplitude; }));
    return report;
}

} // namespace uur
