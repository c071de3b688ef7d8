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

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "uur/uur.h"

using std::numbers::pi;

extern "C" int uur_c_header_smoke(void);

TEST_CASE("header compiles as C") {
    CHECK(uur_c_header_smoke() == 0);
}

TEST_CASE("status strings and last error") {
    CHECK(std::string(uur_version()) == "0.1.0");
    CHECK(std::string(uur_status_string(UUR_OK)) == "ok");
    CHECK(std::string(uur_status_string(UUR_ERR_BRANCH_AMBIGUITY)) == "branch ambiguity");
    const double bad[4] = {1.0, 0.0, 1.0, 0.0};
    uur_state *s = nullptr;
    CHECK(uur_state_create(bad, 2, &s) == UUR_ERR_NOT_NORMALIZED);
    CHECK(s == nullptr);
    CHECK(std::strlen(uur_last_error()) > 0);
    CHECK(uur_state_create(nullptr, 2, &s) == UUR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("qubit pair through the C interface") {
    uur_operator *z = nullptr;
    uur_operator *x = nullptr;
    REQUIRE(uur_dft_pair(2, &z, &x) == UUR_OK);
    CHECK(uur_operator_dim(z) == 2);
    CHECK(uur_operator_get_kind(z) == UUR_OPERATOR_UNITARY);
    double entries[8];
    REQUIRE(uur_operator_entries(x, entries, 8) == UUR_OK);
    CHECK(entries[2] == 1.0); // (0,1) real part
    CHECK(entries[0] == 0.0);

    double phi = 0.0;
    REQUIRE(uur_commutation_phase(z, x, &phi) == UUR_OK);
    CHECK(std::abs(phi - pi) < 1e-12);

    const double theta = pi / 8;
    uur_state *psi = nullptr;
    REQUIRE(uur_state_example(2, theta, &psi) == UUR_OK);
    double amps[4];
    REQUIRE(uur_state_amplitudes(psi, amps, 4) == UUR_OK);
    CHECK(std::abs(amps[0] - std::cos(theta)) < 1e-15);
    CHECK(std::abs(amps[2] + std::sin(theta)) < 1e-15);
    CHECK(uur_state_amplitudes(psi, amps, 3) == UUR_ERR_INVALID_ARGUMENT);

    uur_basis *basis = nullptr;
    REQUIRE(uur_basis_canonical(2, theta, &basis) == UUR_OK);
    CHECK(uur_basis_size(basis) == 1);

    double var = 0.0;
    REQUIRE(uur_variance(z, psi, &var) == UUR_OK);
    CHECK(std::abs(var - 0.5) < 1e-15);
    double vis = 0.0;
    REQUIRE(uur_visibility(z, psi, &vis) == UUR_OK);
    CHECK(std::abs(vis * vis - 0.5) < 1e-15);

    double sum = 0.0, prod = 0.0, bp1 = 0.0, buur = 0.0;
    REQUIRE(uur_sum_equality_rhs(z, x, psi, basis, UUR_SIGN_PLUS, &sum) == UUR_OK);
    REQUIRE(uur_product_equality_rhs(z, x, psi, basis, UUR_SIGN_MINUS, &prod) == UUR_OK);
    REQUIRE(uur_bpuur1_bound(z, x, psi, &bp1) == UUR_OK);
    REQUIRE(uur_buur_bound(z, x, psi, &buur) == UUR_OK);
    CHECK(std::abs(sum - 1.0) < 1e-14);
    CHECK(std::abs(prod - 0.5) < 1e-14);
    CHECK(std::abs(bp1 - 1.0) < 1e-14);
    CHECK(std::abs(buur - 0.25) < 1e-14);

    double h = 0.0;
    int subset = -1;
    REQUIRE(uur_hierarchical_sum_bound(z, x, psi, basis, 1, UUR_SIGN_PLUS, &h, &subset) == UUR_OK);
    CHECK(std::abs(h - 1.0) < 1e-14);
    CHECK(subset == 0);
    CHECK(uur_hierarchical_sum_bound(z, x, psi, basis, 2, UUR_SIGN_PLUS, &h, nullptr) ==
          UUR_ERR_INVALID_ARGUMENT);

    double residual = -1.0;
    int holds = 0;
    REQUIRE(uur_msuur_check(z, x, psi, INFINITY, &residual, &holds) == UUR_OK);
    CHECK(std::abs(residual) < 1e-14);
    CHECK(holds == 1);
    double lb = 0.0;
    REQUIRE(uur_msuur_sum_lower_bound(1.0, &lb) == UUR_OK);
    CHECK(std::abs(lb - 2.0 / 3.0) < 1e-15);
    CHECK(uur_msuur_sum_lower_bound(-1.0, &lb) == UUR_ERR_INVALID_ARGUMENT);

    CHECK(uur_principal_log(z, 1.0, nullptr) == UUR_ERR_INVALID_ARGUMENT);
    uur_operator *gen = nullptr;
    CHECK(uur_principal_log(z, 1.0, &gen) == UUR_ERR_BRANCH_AMBIGUITY);

    const int ns[] = {1};
    uur_report *report = nullptr;
    REQUIRE(uur_report_create(z, x, psi, basis, ns, 1, UUR_POLICY_BEST, &report) == UUR_OK);
    CHECK(std::abs(uur_report_lhs_sum(report) - 1.0) < 1e-14);
    CHECK(std::abs(uur_report_lhs_prod(report) - 0.25) < 1e-14);
    double v = 0.0;
    REQUIRE(uur_report_bound(report, "UURS_1", UUR_SIGN_PLUS, &v) == UUR_OK);
    CHECK(std::abs(v - 1.0) < 1e-14);
    REQUIRE(uur_report_bound(report, "UUEP_RHS", UUR_SIGN_MINUS, &v) == UUR_OK);
    CHECK(std::abs(v - 0.5) < 1e-14);
    CHECK(uur_report_bound(report, "UURS_7", UUR_SIGN_PLUS, &v) == UUR_ERR_ABSENT);

    uur_report_destroy(report);
    uur_basis_destroy(basis);
    uur_state_destroy(psi);
    uur_operator_destroy(z);
    uur_operator_destroy(x);
    uur_operator_destroy(nullptr);
}

TEST_CASE("general and Hermitian operators") {
    // Hermitian Pauli z and x as row-major interleaved entries
    const double zh[8] = {1, 0, 0, 0, 0, 0, -1, 0};
    const double xh[8] = {0, 0, 1, 0, 1, 0, 0, 0};
    uur_operator *u = nullptr;
    uur_operator *w = nullptr;
    REQUIRE(uur_operator_create(zh, 2, UUR_OPERATOR_HERMITIAN, &u) == UUR_OK);
    REQUIRE(uur_operator_create(xh, 2, UUR_OPERATOR_HERMITIAN, &w) == UUR_OK);
    const double notherm[8] = {0, 0, 1, 0, 0, 0, 0, 0};
    uur_operator *bad = nullptr;
    CHECK(uur_operator_create(notherm, 2, UUR_OPERATOR_HERMITIAN, &bad) == UUR_ERR_NOT_HERMITIAN);
    CHECK(uur_operator_create(notherm, 2, UUR_OPERATOR_UNITARY, &bad) == UUR_ERR_NOT_UNITARY);

    const double zero[4] = {1, 0, 0, 0};
    uur_state *psi = nullptr;
    REQUIRE(uur_state_create(zero, 2, &psi) == UUR_OK);
    uur_basis *basis = nullptr;
    REQUIRE(uur_basis_complete(psi, nullptr, 0, &basis) == UUR_OK);
    double vec[4];
    REQUIRE(uur_basis_vector(basis, 0, vec, 4) == UUR_OK);
    CHECK(std::abs(std::hypot(vec[2], vec[3]) - 1.0) < 1e-15);
    CHECK(uur_basis_vector(basis, 1, vec, 4) == UUR_ERR_INVALID_ARGUMENT);

    double hs = 0.0;
    REQUIRE(uur_hermitian_sum_equality(u, w, psi, basis, UUR_SIGN_PLUS, &hs) == UUR_OK);
    CHECK(std::abs(hs - 1.0) < 1e-15);
    double hp = 0.0;
    CHECK(uur_hermitian_product_equality(u, w, psi, basis, UUR_SIGN_PLUS, &hp) == UUR_ERR_DEGENERATE);

    double re = 0.0, im = 0.0;
    REQUIRE(uur_expectation(u, psi, &re, &im) == UUR_OK);
    CHECK(re == 1.0);
    REQUIRE(uur_covariance(u, w, psi, &re, &im) == UUR_OK);
    CHECK(std::abs(re) + std::abs(im) < 1e-15);

    uur_state *other = nullptr;
    REQUIRE(uur_state_random(2, 5, &other) == UUR_OK);
    CHECK(uur_sum_equality_rhs(u, w, other, basis, UUR_SIGN_PLUS, &hs) == UUR_ERR_ANCHOR_MISMATCH);
    uur_basis *rb = nullptr;
    REQUIRE(uur_basis_random(other, 3, &rb) == UUR_OK);
    CHECK(uur_basis_size(rb) == 1);

    uur_basis_destroy(rb);
    uur_state_destroy(other);
    uur_basis_destroy(basis);
    uur_state_destroy(psi);
    uur_operator_destroy(u);
    uur_operator_destroy(w);
}

TEST_CASE("random unitaries: equalities and BPUUR2") {
    uur_operator *u = nullptr;
    uur_operator *v = nullptr;
    uur_state *psi = nullptr;
    uur_basis *basis = nullptr;
    REQUIRE(uur_operator_random_unitary(4, 1, &u) == UUR_OK);
    REQUIRE(uur_operator_random_unitary(4, 2, &v) == UUR_OK);
    REQUIRE(uur_state_random(4, 3, &psi) == UUR_OK);
    REQUIRE(uur_basis_random(psi, 4, &basis) == UUR_OK);
    double du = 0.0, dv = 0.0, rhs = 0.0;
    REQUIRE(uur_variance(u, psi, &du) == UUR_OK);
    REQUIRE(uur_variance(v, psi, &dv) == UUR_OK);
    REQUIRE(uur_sum_equality_rhs(u, v, psi, basis, UUR_SIGN_MINUS, &rhs) == UUR_OK);
    CHECK(std::abs(rhs - du - dv) < 1e-10);
    double p = 0.0;
    REQUIRE(uur_hierarchical_product_bound(u, v, psi, basis, 3, UUR_SIGN_PLUS, &p, nullptr) == UUR_OK);
    CHECK(std::abs(p - std::sqrt(du * dv)) < 1e-10);

    double perp[8];
    REQUIRE(uur_basis_vector(basis, 0, perp, 8) == UUR_OK);
    double b2 = 0.0, h1 = 0.0;
    REQUIRE(uur_bpuur2_bound(u, v, psi, perp, UUR_SIGN_PLUS, &b2) == UUR_OK);
    REQUIRE(uur_hierarchical_sum_bound(u, v, psi, basis, 1, UUR_SIGN_PLUS, &h1, nullptr) == UUR_OK);
    CHECK(b2 <= h1 + 1e-14);
    double phi = 0.0;
    CHECK(uur_commutation_phase(u, v, &phi) == UUR_ERR_NO_COMMUTATION_PHASE);

    uur_basis_destroy(basis);
    uur_state_destroy(psi);
    uur_operator_destroy(u);
    uur_operator_destroy(v);
}

TEST_CASE("sweep, verify and limit through the C interface") {
    const int ns[] = {1, 2};
    uur_sweep_config cfg{};
    cfg.dim = 3;
    cfg.theta_steps = 21;
    cfg.n_values = ns;
    cfg.n_count = 2;
    cfg.sign_policy = UUR_POLICY_BEST;
    uur_table *table = nullptr;
    std::size_t violations = 99;
    REQUIRE(uur_sweep_run(&cfg, &table, &violations) == UUR_OK);
    CHECK(violations == 0);
    CHECK(uur_table_rows(table) == 21);
    CHECK(std::string(uur_table_column_name(table, 0)) == "theta");
    CHECK(uur_table_column_name(table, 1000) == nullptr);
    double cell = 0.0;
    int present = 0;
    REQUIRE(uur_table_cell(table, 0, 4, &cell, &present) == UUR_OK); // rhs_uuep_sq at theta = 0
    CHECK(present == 0);
    REQUIRE(uur_table_cell(table, 20, 0, &cell, &present) == UUR_OK);
    CHECK(present == 1);
    CHECK(cell == pi / 2);
    char *csv = nullptr;
    REQUIRE(uur_table_serialize(table, UUR_FORMAT_CSV, &csv) == UUR_OK);
    CHECK(std::string(csv).rfind("theta,lhs_sum", 0) == 0);
    uur_string_free(csv);
    CHECK(uur_table_write(table, UUR_FORMAT_JSON, "/nonexistent-dir/x.json") == UUR_ERR_IO);
    uur_table_destroy(table);

    const int bad_n[] = {3};
    cfg.n_values = bad_n;
    cfg.n_count = 1;
    CHECK(uur_sweep_run(&cfg, &table, &violations) == UUR_ERR_INVALID_ARGUMENT);

    const std::size_t dims[] = {2, 3};
    uur_verify_config vc{};
    vc.dims = dims;
    vc.n_dims = 2;
    vc.trials = 20;
    vc.seed = 7;
    uur_summary *summary = nullptr;
    REQUIRE(uur_verify_run(&vc, &summary) == UUR_OK);
    CHECK(uur_summary_passed(summary) == 1);
    const std::string text = uur_summary_text(summary);
    uur_summary_destroy(summary);
    REQUIRE(uur_verify_run(&vc, &summary) == UUR_OK);
    CHECK(text == uur_summary_text(summary));
    uur_summary_destroy(summary);
    vc.trials = 0;
    CHECK(uur_verify_run(&vc, &summary) == UUR_ERR_INVALID_ARGUMENT);

    const std::size_t ld[] = {9, 11, 13, 15};
    uur_table *lt = nullptr;
    uur_summary *ls = nullptr;
    REQUIRE(uur_limit_run(ld, 4, 7, &lt, &ls) == UUR_OK);
    CHECK(uur_table_rows(lt) == 4);
    CHECK(uur_summary_passed(ls) == 1);
    uur_table_destroy(lt);
    uur_summary_destroy(ls);
    const std::size_t even[] = {4, 6};
    CHECK(uur_limit_run(even, 2, 7, &lt, &ls) == UUR_ERR_BRANCH_AMBIGUITY);
    CHECK(uur_limit_run(ld, 0, 7, &lt, &ls) == UUR_ERR_INVALID_ARGUMENT);
}
