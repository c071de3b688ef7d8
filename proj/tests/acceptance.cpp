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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Tolerances are fixed here, not tuned.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "uur/limit.hpp"
#include "uur/operators.hpp"
#include "uur/subset_oracle.hpp"
#include "uur/sweep.hpp"
#include "uur/uncertainty.hpp"
#include "uur/verify.hpp"

using namespace uur;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Tracks the worst value of some residual and whether it stayed in bounds.
struct Worst {
    double value = 0.0;
    std::string where;
    bool ok = true;

    void see(double residual, double tol, const std::string &at) {
        if (std::isnan(residual) || residual > tol) {
            ok = false;
        }
        if (std::isnan(residual) || residual > value) {
            value = residual;
            where = at;
        }
    }
};

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

const Table &sweep_for(Index d) {
    static std::vector<std::pair<Index, Table>> cache;
    for (const auto &[dim, table] : cache) {
        if (dim == d) {
            return table;
        }
    }
    SweepConfig config;
    config.dim = d;
    config.theta_steps = 201;
    config.n_values = d >= 3 ? std::vector<int>{1, 2} : std::vector<int>{1};
    cache.emplace_back(d, run_sweep(config).table);
    return cache.back().second;
}

// 1. Equality certification
Outcome criterion1() {
    VerifyConfig config;
    config.dims = {2, 3, 4, 5, 6, 7, 8};
    config.trials = 10000;
    config.seed = 7;
    const auto start = std::chrono::steady_clock::now();
    const VerifySummary summary = run_verify(config);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    struct Gate {
        const char *property;
        double tol;
    };
    const Gate gates[] = {
        {"uues_equality", 1e-10},           {"general_sum_equality", 1e-10},
        {"hermitian_sum_equality", 1e-10},  {"uuep_equality", 1e-8},
        {"general_product_equality", 1e-8}, {"hermitian_product_equality", 1e-8},
    };
    Outcome out;
    std::string failed;
    for (const Gate &g : gates) {
        const PropertyResult &p = summary.property(g.property);
        if (p.checked == 0 || !(p.worst <= g.tol)) {
            out.pass = false;
            failed += fmt(" %s worst=%.3e>%.0e (%zu/%zu within)", g.property, p.worst, g.tol,
                          p.passed, p.checked);
        }
    }
    if (seconds >= 60.0) {
        out.pass = false;
    }
    out.detail = fmt("10^4 trials/d, d=2..8, seed 7, %.1fs", seconds) + failed;
    return out;
}

// 2. Qubit saturation
Outcome criterion2() {
    const Table &t = sweep_for(2);
    const DftPair pauli = dft_pair(2);
    Worst sum, vis, bp1, buur;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double theta = *t.at(i, "theta");
        const std::string at = fmt("theta=%.4f", theta);
        sum.see(std::abs(*t.at(i, "lhs_sum") - 1.0), 1e-12, at);
        const PureState psi = example_state(2, theta);
        const double vu = visibility(pauli.clock, psi);
        const double vv = visibility(pauli.shift, psi);
        vis.see(std::abs(vu * vu + vv * vv - 1.0), 1e-12, at);
        bp1.see(std::abs(*t.at(i, "lb_bpuur1") - *t.at(i, "lhs_sum")), 1e-12, at);
        buur.see(std::abs(*t.at(i, "lb_buur") - *t.at(i, "lhs_prod")), 1e-12, at);
    }
    return {sum.ok && vis.ok && bp1.ok && buur.ok && t.rows.size() == 201,
            fmt("201 points; max dev sum=%.1e vis=%.1e bpuur1=%.1e buur=%.1e", sum.value,
                vis.value, bp1.value, buur.value)};
}

// 3. Hierarchy
Outcome criterion3() {
    constexpr double kTol = 1e-10;
    Worst mono, reach;
    std::size_t oracle_mismatch = 0;
    std::size_t oracle_checks = 0;
    for (Index d = 3; d <= 6; ++d) {
        for (std::uint64_t trial = 0; trial < 1000; ++trial) {
            const auto seed = [&](std::uint64_t c) {
                return mix_seed(2024, static_cast<std::uint64_t>(d), trial, c);
            };
            const Operator u = random_unitary(d, seed(0));
            const Operator v = random_unitary(d, seed(1));
            const PureState psi = random_pure_state(d, seed(2));
            const ComplementBasis basis = random_complement(psi, seed(3));
            const double du2 = unitary_variance(u, psi).value;
            const double dv2 = unitary_variance(v, psi).value;
            const bool nondegenerate = std::sqrt(du2) * std::sqrt(dv2) > tol::kDegenerate;
            const std::string at = fmt("d=%td trial=%llu", static_cast<std::ptrdiff_t>(d),
                                       static_cast<unsigned long long>(trial));
            for (SignChoice s : {SignChoice::Plus, SignChoice::Minus}) {
                const auto sterms = sum_terms(u, v, psi, basis, s);
                const auto pterms =
                    nondegenerate ? product_terms(u, v, psi, basis, s) : std::vector<double>{};
                double prev_s = -std::numeric_limits<double>::infinity();
                double prev_p = prev_s;
                for (int n = 1; n <= d - 1; ++n) {
                    const BoundValue bs = hierarchical_sum_bound(u, v, psi, basis, n, s);
                    mono.see(prev_s - bs.value, kTol, at);
                    prev_s = bs.value;
                    const SubsetMaximum os = brute_force_subset_max(sterms, n);
                    ++oracle_checks;
                    if (os.subset != *bs.subset_used) {
                        ++oracle_mismatch;
                    }
                    if (nondegenerate) {
                        const BoundValue bp = hierarchical_product_bound(u, v, psi, basis, n, s);
                        mono.see(prev_p - bp.value, kTol, at);
                        prev_p = bp.value;
                        const SubsetMaximum op = brute_force_subset_max(pterms, n);
                        ++oracle_checks;
                        if (op.subset != *bp.subset_used) {
                            ++oracle_mismatch;
                        }
                    }
                }
                reach.see(std::abs(prev_s - (du2 + dv2)), kTol, at);
                if (nondegenerate) {
                    reach.see(std::abs(prev_p - std::sqrt(du2) * std::sqrt(dv2)), kTol, at);
                }
            }
        }
    }
    return {mono.ok && reach.ok && oracle_mismatch == 0,
            fmt("10^3 instances/d, d=3..6; max decrease=%.1e, |UUR(d-1)-LHS|<=%.1e, "
                "subset oracle mismatches %zu/%zu",
                mono.value, reach.value, oracle_mismatch, oracle_checks)};
}

// 4. Sum-bound dominance on the DFT sweeps
Outcome criterion4() {
    constexpr double kSlack = 1e-9;
    Worst over_ms, under_bp, mono;
    bool exists = false;
    std::string exists_at;
    std::size_t bp_violations = 0;
    for (Index d = 3; d <= 6; ++d) {
        const Table &t = sweep_for(d);
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const std::string at = fmt("d=%td theta=%.4f", static_cast<std::ptrdiff_t>(d), *t.at(i, "theta"));
            const double s1 = *t.at(i, "lb_uurs_1");
            const double s2 = *t.at(i, "lb_uurs_2");
            const double bp1 = *t.at(i, "lb_bpuur1");
            over_ms.see(*t.at(i, "lb_msuur") - s1, kSlack, at);
            under_bp.see(s1 - bp1, kSlack, at);
            if (s1 - bp1 > kSlack) {
                ++bp_violations;
            }
            mono.see(s1 - s2, kSlack, at);
            if (!exists && s2 > bp1 + kSlack) {
                exists = true;
                exists_at = at;
            }
        }
    }
    std::string detail =
        fmt("UURS1>=MSUUR %s (worst %.1e); UURS1<=BPUUR1 %s (%zu/804 rows over, worst %.3e at %s); "
            "UURS2>=UURS1 %s; UURS2>BPUUR1 somewhere %s",
            over_ms.ok ? "ok" : "FAIL", over_ms.value, under_bp.ok ? "ok" : "FAIL",
            bp_violations, under_bp.value, under_bp.where.c_str(), mono.ok ? "ok" : "FAIL",
            exists ? ("yes, " + exists_at).c_str() : "no");
    return {over_ms.ok && under_bp.ok && mono.ok && exists, detail};
}

// 5. Product-bound dominance on the DFT sweeps
Outcome criterion5() {
    constexpr double kSlack = 1e-9;
    Worst buur, mono, eq;
    std::size_t nondegenerate_rows = 0;
    for (Index d = 3; d <= 6; ++d) {
        const Table &t = sweep_for(d);
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const std::string at = fmt("d=%td theta=%.4f", static_cast<std::ptrdiff_t>(d), *t.at(i, "theta"));
            const Cell p1 = t.at(i, "lb_uurp_1");
            const Cell p2 = t.at(i, "lb_uurp_2");
            const Cell rhs = t.at(i, "rhs_uuep_sq");
            if (!p1 || !p2 || !rhs) {
                continue;
            }
            ++nondegenerate_rows;
            buur.see(*t.at(i, "lb_buur") - *p1, kSlack, at);
            mono.see(*p1 - *p2, kSlack, at);
            eq.see(std::abs(*rhs - *t.at(i, "lhs_prod")), kSlack, at);
        }
    }
    return {buur.ok && mono.ok && eq.ok && nondegenerate_rows > 0,
            fmt("%zu nondegenerate rows; worst BUUR-UURP1=%.1e, UURP1-UURP2=%.1e, "
                "|UUEP^2-LHS|=%.1e",
                nondegenerate_rows, buur.value, mono.value, eq.value)};
}

// 6. MSUUR validity and the commutation phase
Outcome criterion6() {
    double min_residual = std::numeric_limits<double>::infinity();
    double phase_err = 0.0;
    bool ok = true;
    for (Index d = 3; d <= 6; ++d) {
        const DftPair pair = dft_pair(d);
        const auto phi = commutation_phase(pair.clock, pair.shift);
        if (!phi) {
            ok = false;
            continue;
        }
        phase_err = std::max(phase_err, std::abs(*phi - 2 * pi / static_cast<double>(d)));
        const double k = std::tan(pi / static_cast<double>(d));
        const Table &t = sweep_for(d);
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const PureState psi = example_state(d, *t.at(i, "theta"));
            min_residual = std::min(min_residual, msuur_check(pair.clock, pair.shift, psi, k).residual);
        }
    }
    ok = ok && min_residual >= -1e-10 && phase_err <= 1e-12;
    return {ok, fmt("min residual %.3e over 804 rows; max |phi-2pi/d| %.1e", min_residual, phase_err)};
}

// 7. High-dimensional limit
Outcome criterion7() {
    std::vector<Index> dims;
    for (Index d = 9; d <= 99; d += 2) {
        dims.push_back(d);
    }
    const ConvergenceStudy study = convergence_study(dims, 7);
    std::string why;
    const bool decreasing = study.skipped.empty() && errors_decrease_after(study.records, 9, &why);
    const double limit = msuur_sum_lower_bound(1e6);
    const bool limit_ok = std::abs(limit - 1.0) <= 1e-5;
    std::string detail = fmt("%zu odd d in 9..99, %zu skipped; strictly decreasing: %s", study.records.size(),
                             study.skipped.size(), decreasing ? "yes" : ("no, " + why).c_str());
    if (!study.records.empty()) {
        detail += fmt(" (lhs rel err %.2e -> %.2e)", study.records.front().relative_error,
                      study.records.back().relative_error);
    }
    detail += fmt("; MSUUR(K=1e6)=%.8f", limit);
    return {decreasing && limit_ok, detail};
}

// 8. Basis independence
Outcome criterion8() {
    Worst diff;
    std::size_t compared = 0;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        const auto seed = [&](std::uint64_t c) { return mix_seed(88, trial, c); };
        const Index d = 2 + static_cast<Index>(seed(0) % 7);
        const double theta = pi / 2 * static_cast<double>(seed(1) >> 11) * 0x1.0p-53;
        const Operator u = random_unitary(d, seed(2));
        const Operator v = random_unitary(d, seed(3));
        const PureState psi = example_state(d, theta);
        const ComplementBasis canon = canonical_complement(d, theta);
        const ComplementBasis rnd = random_complement(psi, seed(4));
        const bool nondegenerate = std::sqrt(unitary_variance(u, psi).value) *
                                       std::sqrt(unitary_variance(v, psi).value) >
                                   tol::kDegenerate;
        const std::string at = fmt("trial=%llu d=%td", static_cast<unsigned long long>(trial),
                                   static_cast<std::ptrdiff_t>(d));
        for (SignChoice s : {SignChoice::Plus, SignChoice::Minus}) {
            diff.see(std::abs(sum_equality_rhs(u, v, psi, canon, s).value -
                              sum_equality_rhs(u, v, psi, rnd, s).value),
                     1e-10, at);
            ++compared;
            if (nondegenerate) {
                diff.see(std::abs(product_equality_rhs(u, v, psi, canon, s).value -
                                  product_equality_rhs(u, v, psi, rnd, s).value),
                         1e-10, at);
                ++compared;
            }
        }
    }
    return {diff.ok, fmt("10^3 instances, %zu RHS pairs; max |canonical - random| %.1e", compared, diff.value)};
}

} // namespace

int main() {
    const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7, criterion8};
    int failures = 0;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("criterion %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %d of %zu criteria failed\n", failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
