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

#include "uur/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "parallel.hpp"
#include "uur/limit.hpp"
#include "uur/operators.hpp"
#include "uur/subset_oracle.hpp"
#include "uur/uncertainty.hpp"

namespace uur {

namespace {

enum Prop : std::size_t {
    kVariancePaths,
    kCovarianceSymmetry,
    kProjectorIdentity,
    kUuesEquality,
    kUuepEquality,
    kGeneralSum,
    kGeneralProduct,
    kHermitianSum,
    kHermitianProduct,
    kBasisIndependence,
    kHierarchy,
    kSubsetOracle,
    kBoundValidity,
    kPhaseInvariance,
    kMsuurValidity,
    kPropCount,
};

constexpr std::array<const char *, kPropCount> kNames = {
    "variance_paths_agree", "covariance_symmetry",  "projector_identity",
    "uues_equality",        "uuep_equality",        "general_sum_equality",
    "general_product_equality", "hermitian_sum_equality", "hermitian_product_equality",
    "basis_independence",   "hierarchy_monotone",   "subset_oracle",
    "bound_validity",       "phase_invariance",     "msuur_validity",
};

struct Tally {
    std::array<std::size_t, kPropCount> checked{};
    std::array<std::size_t, kPropCount> passed{};
    std::array<double, kPropCount> worst{};

    void merge(const Tally &o) {
        for (std::size_t i = 0; i < kPropCount; ++i) {
            checked[i] += o.checked[i];
            passed[i] += o.passed[i];
            worst[i] = std::max(worst[i], o.worst[i]);
        }
    }
};

class TrialChecker {
  public:
    TrialChecker(const VerifyConfig &config, Tally &tally) : config_(config), tally_(tally) {}

    void record(Prop p, double residual) {
        const double tol = tolerance(p, config_);
        ++tally_.checked[p];
        // NaN residuals fail
        if (residual <= tol) {
            ++tally_.passed[p];
        }
        if (std::isnan(residual)) {
            residual = std::numeric_limits<double>::infinity();
        }
        tally_.worst[p] = std::max(tally_.worst[p], residual);
    }

    static double tolerance(Prop p, const VerifyConfig &config) {
        switch (p) {
        case kHermitianProduct:
            return config.quotient_tol;
        case kSubsetOracle:
            return 0.0;
        default:
            return config.eq_tol;
        }
    }

  private:
    const VerifyConfig &config_;
    Tally &tally_;
};

double positive_part(double x) {
    return std::max(0.0, x);
}

void run_trial(Index d, std::size_t trial, const VerifyConfig &config, const DftPair &dft,
               TrialChecker &check) {
    const auto stream = [&](std::uint64_t component) {
        return mix_seed(config.seed, static_cast<std::uint64_t>(d), trial, component);
    };
    const Operator u = random_unitary(d, stream(0));
    const Operator v = random_unitary(d, stream(1));
    const PureState psi = random_pure_state(d, stream(2));
    const ComplementBasis basis = random_complement(psi, stream(3));
    const ComplementBasis other = random_complement(psi, stream(4));
    const Operator a = random_general(d, stream(5));
    const Operator b = random_general(d, stream(6));
    const Operator hu = random_hermitian(d, stream(7));
    const Operator hv = random_hermitian(d, stream(8));
    const double alpha =
        2.0 * std::numbers::pi * static_cast<double>(stream(9) >> 11) * 0x1.0p-53;

    const double dU2 = unitary_variance(u, psi).value;
    const double dV2 = unitary_variance(v, psi).value;
    const double lhs_sum = dU2 + dV2;
    const double lhs_prod = std::sqrt(dU2) * std::sqrt(dV2);
    const bool nondegenerate = lhs_prod > tol::kDegenerate;
    const CovarianceValue cov = covariance(u, v, psi);

    check.record(kVariancePaths, std::max(std::abs(general_variance(u, psi).value - dU2),
                                          std::abs(general_variance(v, psi).value - dV2)));

    {
        const Complex self = covariance(u, u, psi).value;
        const Complex ab = covariance(a, b, psi).value;
        const Complex ba = covariance(b, a, psi).value;
        check.record(kCovarianceSymmetry,
                     std::max({std::abs(self.imag()), std::abs(self.real() - dU2),
                               std::abs(ab - std::conj(ba))}));
    }

    for (SignChoice s : {SignChoice::Plus, SignChoice::Minus}) {
        // Σ_k |⟨ψ⊥_k|f⟩|² = ‖f‖² - |⟨ψ|f⟩|² for f = (U ∓ iV)ψ, every term >= 0
        const auto terms = sum_terms(u, v, psi, basis, s);
        const CVector &p = psi.amplitudes();
        const CVector f = u.matrix() * p - sign_factor(s) * Complex(0.0, 1.0) * (v.matrix() * p);
        double total = 0.0;
        double negative = 0.0;
        for (double t : terms) {
            total += t;
            negative = std::max(negative, -t);
        }
        const double projector = f.squaredNorm() - std::norm(p.dot(f));
        check.record(kProjectorIdentity, std::max(negative, std::abs(total - projector)));

        const double uues = sum_equality_rhs(u, v, psi, basis, s).value;
        check.record(kUuesEquality, std::abs(uues - lhs_sum));
        check.record(kBasisIndependence,
                     std::abs(uues - sum_equality_rhs(u, v, psi, other, s).value));
        if (nondegenerate) {
            const double uuep = product_equality_rhs(u, v, psi, basis, s).value;
            check.record(kUuepEquality, std::abs(uuep - lhs_prod));
            check.record(kBasisIndependence,
                         std::abs(uuep - product_equality_rhs(u, v, psi, other, s).value));
        }

        const double dA2 = general_variance(a, psi).value;
        const double dB2 = general_variance(b, psi).value;
        check.record(kGeneralSum, std::abs(sum_equality_rhs(a, b, psi, basis, s).value - dA2 - dB2));
        if (std::sqrt(dA2) * std::sqrt(dB2) > tol::kDegenerate) {
            check.record(kGeneralProduct, std::abs(product_equality_rhs(a, b, psi, basis, s).value -
                                                   std::sqrt(dA2) * std::sqrt(dB2)));
        }

        const double du2 = general_variance(hu, psi).value;
        const double dv2 = general_variance(hv, psi).value;
        check.record(kHermitianSum,
                     std::abs(hermitian_sum_equality(hu, hv, psi, basis, s) - du2 - dv2));
        try {
            check.record(kHermitianProduct,
                         std::abs(hermitian_product_equality(hu, hv, psi, basis, s) -
                                  std::sqrt(du2) * std::sqrt(dv2)));
        } catch (const Error &e) {
            if (e.code() != ErrorCode::VanishingDenominator &&
                e.code() != ErrorCode::DegenerateVariance) {
                throw;
            }
        }

        // hierarchy and subset oracle
        const int top = static_cast<int>(d) - 1;
        double hier = 0.0;
        double prev_s = -std::numeric_limits<double>::infinity();
        double prev_p = -std::numeric_limits<double>::infinity();
        std::vector<double> pterms;
        if (nondegenerate) {
            pterms = product_terms(u, v, psi, basis, s);
        }
        for (int n = 1; n <= top; ++n) {
            const BoundValue bs = hierarchical_sum_bound(u, v, psi, basis, n, s);
            hier = std::max(hier, positive_part(prev_s - bs.value));
            prev_s = bs.value;
            const SubsetMaximum oracle = brute_force_subset_max(terms, n);
            const double im = cov.value.imag();
            const bool same = oracle.subset == *bs.subset_used &&
                              oracle.sum - sign_factor(s) * 2.0 * im == bs.value;
            check.record(kSubsetOracle, same ? 0.0 : 1.0);
            if (nondegenerate) {
                const BoundValue bp = hierarchical_product_bound(u, v, psi, basis, n, s);
                hier = std::max(hier, positive_part(prev_p - bp.value));
                prev_p = bp.value;
                const SubsetMaximum poracle = brute_force_subset_max(pterms, n);
                check.record(kSubsetOracle, poracle.subset == *bp.subset_used ? 0.0 : 1.0);
            }
        }
        hier = std::max(hier, std::abs(prev_s - lhs_sum));
        if (nondegenerate) {
            hier = std::max(hier, std::abs(prev_p - lhs_prod));
        }
        check.record(kHierarchy, hier);

        double bp2 = 0.0;
        for (const auto &perp : basis.vectors()) {
            bp2 = std::max(bp2, positive_part(bpuur2_bound(u, v, psi, perp, s).value - lhs_sum));
        }
        check.record(kBoundValidity, bp2);
    }

    check.record(kBoundValidity,
                 std::max(positive_part(buur_bound(u, v, psi).value - dU2 * dV2),
                          positive_part(bpuur1_bound(u, v, psi).value - lhs_sum)));

    {
        const PureState rotated = psi.with_phase(alpha);
        double diff = std::max({std::abs(unitary_variance(u, rotated).value - dU2),
                                std::abs(unitary_variance(v, rotated).value - dV2),
                                std::abs(std::abs(covariance(u, v, rotated).value) -
                                         std::abs(cov.value)),
                                std::abs(bpuur1_bound(u, v, rotated).value -
                                         bpuur1_bound(u, v, psi).value),
                                std::abs(buur_bound(u, v, rotated).value -
                                         buur_bound(u, v, psi).value)});
        for (SignChoice s : {SignChoice::Plus, SignChoice::Minus}) {
            const auto t0 = sum_terms(u, v, psi, basis, s);
            const auto t1 = sum_terms(u, v, rotated, basis, s);
            for (std::size_t k = 0; k < t0.size(); ++k) {
                diff = std::max(diff, std::abs(t0[k] - t1[k]));
            }
            diff = std::max(diff, std::abs(sum_equality_rhs(u, v, rotated, basis, s).value -
                                           sum_equality_rhs(u, v, psi, basis, s).value));
        }
        check.record(kPhaseInvariance, diff);
    }

    {
        const double k = d == 2 ? std::numeric_limits<double>::infinity()
                                : std::tan(std::numbers::pi / static_cast<double>(d));
        const MsuurCheck ms = msuur_check(dft.clock, dft.shift, psi, k);
        check.record(kMsuurValidity, positive_part(-ms.residual));
    }
}

} // namespace

void validate(const VerifyConfig &config) {
    if (config.trials < 1) {
        throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    }
    if (config.dims.empty()) {
        throw Error(ErrorCode::InvalidArgument, "at least one dimension is required");
    }
    for (Index d : config.dims) {
        if (d < 2) {
            throw Error(ErrorCode::InvalidArgument, "dimensions must be at least 2");
        }
    }
    if (!(config.eq_tol > 0.0) || !(config.quotient_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
    }
}

VerifySummary run_verify(const VerifyConfig &config) {
    validate(config);
    Tally total;
    for (Index d : config.dims) {
        const DftPair dft = dft_pair(d);
        const std::size_t chunks = std::min<std::size_t>(config.trials, 64);
        std::vector<Tally> partial(chunks);
        detail::parallel_chunks(config.trials, chunks,
                                [&](std::size_t begin, std::size_t end, std::size_t c) {
                                    TrialChecker check(config, partial[c]);
                                    for (std::size_t t = begin; t < end; ++t) {
                                        run_trial(d, t, config, dft, check);
                                    }
                                });
        for (const auto &p : partial) {
            total.merge(p);
        }
    }

    VerifySummary summary;
    summary.config = config;
    for (std::size_t i = 0; i < kPropCount; ++i) {
        PropertyResult r;
        r.name = kNames[i];
        r.tolerance = TrialChecker::tolerance(static_cast<Prop>(i), config);
        r.checked = total.checked[i];
        r.passed = total.passed[i];
        r.worst = total.worst[i];
        summary.properties.push_back(std::move(r));
    }
    return summary;
}

bool VerifySummary::passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult &p) { return p.ok(); });
}

const PropertyResult &VerifySummary::property(const std::string &name) const {
    for (const auto &p : properties) {
        if (p.name == name) {
            return p;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no property named '" + name + "'");
}

std::string VerifySummary::text() const {
    std::ostringstream out;
    out << "verify: dims=";
    for (std::size_t i = 0; i < config.dims.size(); ++i) {
        out << (i ? "," : "") << config.dims[i];
    }
    out << " trials=" << config.trials << " seed=" << config.seed << "\n";
    char line[160];
    for (const auto &p : properties) {
        std::snprintf(line, sizeof line, "  %-28s %-4s %9zu/%-9zu worst=%.3e tol=%.1e\n",
                      p.name.c_str(), p.ok() ? "ok" : "FAIL", p.passed, p.checked, p.worst,
                      p.tolerance);
        out << line;
    }
    out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace uur
