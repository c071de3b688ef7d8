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

#include "uur/limit.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "parallel.hpp"

namespace uur {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_hermitian_pair(const Operator &u, const Operator &v, const PureState &psi) {
    if (!u.is_hermitian() || !v.is_hermitian()) {
        throw Error(ErrorCode::NotHermitian, "relation requires a pair of Hermitian operators");
    }
    if (u.dim() != psi.dim() || v.dim() != psi.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operator and state dimensions differ");
    }
}

// ±i⟨[u,v]⟩ as a real number.
double signed_commutator_term(const Operator &u, const Operator &v, const PureState &psi,
                              SignChoice s) {
    return sign_factor(s) * (kI * commutator_expectation(u, v, psi)).real();
}

std::pair<double, double> hermitian_deviations(const Operator &u, const Operator &v,
                                               const PureState &psi) {
    const double du = std::sqrt(general_variance(u, psi).value);
    const double dv = std::sqrt(general_variance(v, psi).value);
    if (du * dv <= tol::kDegenerate) {
        throw Error(ErrorCode::DegenerateVariance, "Hermitian variance product is degenerate");
    }
    return {du, dv};
}

// (u/Δu ∓ iv/Δv)ψ
CVector normalized_combination(const Operator &u, const Operator &v, const PureState &psi,
                               double du, double dv, SignChoice s) {
    const CVector &p = psi.amplitudes();
    return (u.matrix() * p) / du - sign_factor(s) * kI * (v.matrix() * p) / dv;
}

} // namespace

HermitianPair hermitian_pair_from_dft(const DftPair &pair) {
    const double scale = std::sqrt(2.0 * std::numbers::pi / static_cast<double>(pair.dim));
    Operator u = principal_log_generator(pair.clock, scale);
    Operator v = principal_log_generator(pair.shift, scale);
    return HermitianPair{std::move(u), std::move(v), scale, pair};
}

Complex commutator_expectation(const Operator &u, const Operator &v, const PureState &psi) {
    require_hermitian_pair(u, v, psi);
    const CVector &p = psi.amplitudes();
    const CVector up = u.matrix() * p;
    const CVector vp = v.matrix() * p;
    // ⟨uv⟩ - ⟨vu⟩ = (uψ)†(vψ) - conj(...)
    const Complex uv = up.dot(vp);
    const Complex comm = uv - std::conj(uv);
    if (std::abs(comm.real()) > tol::kOrth * std::max(1.0, std::abs(comm))) {
        throw Error(ErrorCode::Numerical, "commutator expectation is not purely imaginary");
    }
    return {0.0, comm.imag()};
}

double hermitian_sum_equality(const Operator &u, const Operator &v, const PureState &psi,
                              const ComplementBasis &basis, SignChoice s) {
    require_hermitian_pair(u, v, psi);
    // sum_terms gives |⟨ψ|u ± iv|b⟩|² = |⟨b|u ∓ iv|ψ⟩|² for Hermitian u, v
    const auto terms = sum_terms(u, v, psi, basis, s);
    const double total = std::accumulate(terms.begin(), terms.end(), 0.0);
    return total + signed_commutator_term(u, v, psi, s);
}

double hermitian_product_equality(const Operator &u, const Operator &v, const PureState &psi,
                                  const ComplementBasis &basis, SignChoice s) {
    require_hermitian_pair(u, v, psi);
    if (!basis.anchored_at(psi)) {
        throw Error(ErrorCode::AnchorMismatch, "complement basis is anchored at a different state");
    }
    const auto [du, dv] = hermitian_deviations(u, v, psi);
    const CVector g = normalized_combination(u, v, psi, du, dv, s);
    double total = 0.0;
    for (const auto &b : basis.vectors()) {
        total += std::norm(b.dot(g));
    }
    const double denominator = 1.0 - 0.5 * total;
    if (std::abs(denominator) <= tol::kDegenerate) {
        throw Error(ErrorCode::VanishingDenominator, "product equality denominator vanishes");
    }
    return 0.5 * signed_commutator_term(u, v, psi, s) / denominator;
}

TruncatedRelations hermitian_truncated_relations(const Operator &u, const Operator &v,
                                                 const PureState &psi, const CVector &perp,
                                                 SignChoice s) {
    require_hermitian_pair(u, v, psi);
    if (perp.size() != psi.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "perpendicular vector has wrong dimension");
    }
    if (std::abs(perp.norm() - 1.0) > tol::kNorm ||
        std::abs(psi.amplitudes().dot(perp)) > tol::kOrth) {
        throw Error(ErrorCode::NotOrthonormal, "perpendicular vector must be a unit vector orthogonal to psi");
    }
    const CVector &p = psi.amplitudes();
    const CVector f = u.matrix() * p - sign_factor(s) * kI * (v.matrix() * p);
    const double commutator = signed_commutator_term(u, v, psi, s);

    TruncatedRelations out;
    out.sum_form = std::norm(perp.dot(f)) + commutator;

    const auto [du, dv] = hermitian_deviations(u, v, psi);
    const double numerator = 0.5 * commutator;
    if (numerator >= 0.0) {
        const CVector g = normalized_combination(u, v, psi, du, dv, s);
        const double denominator = 1.0 - 0.5 * std::norm(perp.dot(g));
        if (std::abs(denominator) <= tol::kDegenerate) {
            throw Error(ErrorCode::VanishingDenominator, "truncated product denominator vanishes");
        }
        out.product_form = numerator / denominator;
    }
    return out;
}

PureState localized_state(Index dim) {
    if (dim < 2) {
        throw Error(ErrorCode::InvalidArgument, "dimension must be at least 2");
    }
    const double d = static_cast<double>(dim);
    const double sigma = 1.5 * std::sqrt(d / (2.0 * std::numbers::pi));
    CVector amps(dim);
    for (Index k = 0; k < dim; ++k) {
        // periodic distance to index 0, in (-d/2, d/2]
        double x = static_cast<double>(k);
        if (x > d / 2.0) {
            x -= d;
        }
        amps(k) = std::exp(-x * x / (4.0 * sigma * sigma));
    }
    return PureState::normalized(std::move(amps));
}

double relative_error(double unitary, double hermitian_scaled) {
    return std::abs(unitary - hermitian_scaled) / std::max(std::abs(unitary), tol::kRelativeFloor);
}

ConvergenceRecord convergence_record(const HermitianPair &pair, const PureState &psi,
                                     const ComplementBasis &basis) {
    if (!pair.source) {
        throw Error(ErrorCode::InvalidArgument, "convergence record needs the source clock/shift pair");
    }
    const Operator &clock = pair.source->clock;
    const Operator &shift = pair.source->shift;
    const double s2 = pair.scale * pair.scale;
    const double d = static_cast<double>(psi.dim());

    auto quantity = [](std::string name, double unitary, double scaled) {
        return QuantityError{std::move(name), unitary, scaled, relative_error(unitary, scaled)};
    };

    ConvergenceRecord rec;
    rec.dim = psi.dim();
    const double var_U = unitary_variance(clock, psi).value;
    const double var_V = unitary_variance(shift, psi).value;
    const double var_u = general_variance(pair.u, psi).value;
    const double var_v = general_variance(pair.v, psi).value;
    rec.lhs_unitary = var_U + var_V;
    rec.lhs_scaled_hermitian = s2 * (var_u + var_v);
    rec.relative_error = relative_error(rec.lhs_unitary, rec.lhs_scaled_hermitian);

    rec.quantities.push_back(quantity("var_u", var_U, s2 * var_u));
    rec.quantities.push_back(quantity("var_v", var_V, s2 * var_v));

    const double im_cov = covariance(clock, shift, psi).value.imag();
    const Complex comm = commutator_expectation(pair.u, pair.v, psi);
    rec.quantities.push_back(
        quantity("im_cov", im_cov, (std::numbers::pi / d * (-kI) * comm).real()));

    const char *names[] = {"perp_sum_upper", "perp_sum_lower"};
    int i = 0;
    for (SignChoice s : {SignChoice::Plus, SignChoice::Minus}) {
        const auto tu = sum_terms(clock, shift, psi, basis, s);
        const auto th = sum_terms(pair.u, pair.v, psi, basis, s);
        const double su = std::accumulate(tu.begin(), tu.end(), 0.0);
        const double sh = std::accumulate(th.begin(), th.end(), 0.0);
        rec.quantities.push_back(quantity(names[i++], su, s2 * sh));
    }
    return rec;
}

ConvergenceStudy convergence_study(std::span<const Index> dims, std::uint64_t seed) {
    std::vector<std::optional<ConvergenceRecord>> slots(dims.size());
    detail::parallel_chunks(dims.size(), dims.size(), [&](std::size_t begin, std::size_t end,
                                                          std::size_t) {
        for (std::size_t i = begin; i < end; ++i) {
            const Index d = dims[i];
            try {
                const DftPair pair = dft_pair(d);
                const HermitianPair herm = hermitian_pair_from_dft(pair);
                const PureState psi = localized_state(d);
                const ComplementBasis basis =
                    random_complement(psi, mix_seed(seed, static_cast<std::uint64_t>(d)));
                slots[i] = convergence_record(herm, psi, basis);
            } catch (const Error &e) {
                if (e.code() != ErrorCode::BranchAmbiguity) {
                    throw;
                }
            }
        }
    });
    ConvergenceStudy study;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (slots[i]) {
            study.records.push_back(std::move(*slots[i]));
        } else {
            study.skipped.push_back(dims[i]);
        }
    }
    return study;
}

bool errors_decrease_after(std::span<const ConvergenceRecord> records, Index threshold,
                           std::string *detail) {
    const ConvergenceRecord *prev = nullptr;
    for (const auto &rec : records) {
        if (rec.dim < threshold) {
            continue;
        }
        if (prev != nullptr) {
            if (!(rec.relative_error < prev->relative_error)) {
                if (detail) {
                    std::ostringstream msg;
                    msg << "lhs: d=" << prev->dim << " -> d=" << rec.dim;
                    *detail = msg.str();
                }
                return false;
            }
            for (std::size_t q = 0; q < rec.quantities.size(); ++q) {
                if (!(rec.quantities[q].relative_error < prev->quantities[q].relative_error)) {
                    if (detail) {
                        std::ostringstream msg;
                        msg << rec.quantities[q].name << ": d=" << prev->dim << " -> d=" << rec.dim;
                        *detail = msg.str();
                    }
                    return false;
                }
            }
        }
        prev = &rec;
    }
    return true;
}

Table convergence_table(const ConvergenceStudy &study, std::uint64_t seed) {
    Table table;
    table.columns = {"dim", "lhs_unitary", "lhs_scaled_hermitian", "relative_error"};
    if (!study.records.empty()) {
        for (const auto &q : study.records.front().quantities) {
            table.columns.push_back(q.name + "_unitary");
            table.columns.push_back(q.name + "_hermitian_scaled");
            table.columns.push_back(q.name + "_rel_error");
        }
    }
    for (const auto &rec : study.records) {
        std::vector<Cell> row{static_cast<double>(rec.dim), rec.lhs_unitary,
                              rec.lhs_scaled_hermitian, rec.relative_error};
        for (const auto &q : rec.quantities) {
            row.push_back(q.unitary);
            row.push_back(q.hermitian_scaled);
            row.push_back(q.relative_error);
        }
        table.rows.push_back(std::move(row));
    }
    table.meta["seed"] = seed;
    table.meta["skipped_dims"] = study.skipped;
    table.meta["state_family"] = "periodic gaussian at index 0, width 1.5*sqrt(d/(2*pi))";
    return table;
}

std::string convergence_summary(const ConvergenceStudy &study, std::uint64_t seed,
                                Index threshold) {
    std::ostringstream out;
    out << "limit: " << study.records.size() << " dimensions evaluated, seed=" << seed << "\n";
    if (!study.skipped.empty()) {
        out << "  skipped (eigenphase on branch cut):";
        for (Index d : study.skipped) {
            out << ' ' << d;
        }
        out << "\n";
    }
    std::vector<const ConvergenceRecord *> tail;
    for (const auto &rec : study.records) {
        if (rec.dim >= threshold) {
            tail.push_back(&rec);
        }
    }
    auto line = [&](const std::string &name, auto &&error_of) {
        bool decreasing = true;
        for (std::size_t i = 1; i < tail.size(); ++i) {
            decreasing = decreasing && error_of(*tail[i]) < error_of(*tail[i - 1]);
        }
        char buf[200];
        if (tail.empty()) {
            std::snprintf(buf, sizeof buf, "  %-16s no dimensions >= %td\n", name.c_str(),
                          static_cast<std::ptrdiff_t>(threshold));
        } else {
            std::snprintf(buf, sizeof buf,
                          "  %-16s rel_err %.3e (d=%td) -> %.3e (d=%td)  decreasing: %s\n",
                          name.c_str(), error_of(*tail.front()),
                          static_cast<std::ptrdiff_t>(tail.front()->dim), error_of(*tail.back()),
                          static_cast<std::ptrdiff_t>(tail.back()->dim),
                          decreasing ? "yes" : "no");
        }
        out << buf;
    };
    line("lhs_sum", [](const ConvergenceRecord &r) { return r.relative_error; });
    if (!study.records.empty()) {
        for (std::size_t q = 0; q < study.records.front().quantities.size(); ++q) {
            line(study.records.front().quantities[q].name,
                 [q](const ConvergenceRecord &r) { return r.quantities[q].relative_error; });
        }
    }
    std::string detail;
    const bool ok = errors_decrease_after(study.records, threshold, &detail);
    out << "result: " << (ok ? "PASS" : "FAIL (" + detail + ")") << "\n";
    return out.str();
}

} // namespace uur
