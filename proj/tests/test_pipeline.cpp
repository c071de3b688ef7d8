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
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "uur/operators.hpp"
#include "uur/sweep.hpp"
#include "uur/table.hpp"
#include "uur/verify.hpp"

using namespace uur;
using std::numbers::pi;

TEST_CASE("CSV and JSON round trips") {
    Table t;
    t.columns = {"a", "b", "c"};
    t.rows = {{0.1, std::nullopt, 1.0 / 3.0},
              {-2.5e-300, 6.02214076e23, std::numeric_limits<double>::denorm_min()},
              {0.0, -0.0, std::nextafter(1.0, 2.0)}};
    t.meta["note"] = "x";

    const std::string csv = to_csv(t);
    CHECK(csv.rfind("a,b,c\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(csv.find("0.10000000000000001,,") != std::string::npos);
    Table back = table_from_csv(csv);
    CHECK(back.columns == t.columns);
    CHECK(back.rows == t.rows);
    CHECK(std::signbit(*back.rows[2][1]));

    const Table j = table_from_json(to_json(t));
    CHECK(j == t);
    CHECK(to_json(t)["rows"][0]["b"].is_null());
    const Table reparsed = table_from_json(nlohmann::ordered_json::parse(serialize(t, TableFormat::Json)));
    CHECK(reparsed == t);

    CHECK_THROWS_AS(table_from_csv("a,b\n1\n"), Error);
    CHECK_THROWS_AS(table_from_csv("a\nnope\n"), Error);
    CHECK_THROWS_AS((void)t.column("missing"), Error);
}

TEST_CASE("write_table") {
    Table t;
    t.columns = {"x"};
    t.rows = {{1.5}};
    const auto dir = std::filesystem::temp_directory_path() / "uur_table_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "t.csv";
    write_table(t, TableFormat::Csv, path);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "x\n1.5\n");
    try {
        write_table(t, TableFormat::Csv, dir / "no_such_dir" / "t.csv");
        FAIL("expected an I/O error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::Io);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("sweep configuration is validated") {
    SweepConfig c;
    c.theta_steps = 1;
    CHECK_THROWS_AS(validate(c), Error);
    c = SweepConfig{};
    c.dim = 3;
    c.n_values = {3};
    CHECK_THROWS_AS(validate(c), Error);
    c.n_values = {0};
    CHECK_THROWS_AS(validate(c), Error);
    c.n_values = {1, 2};
    CHECK_NOTHROW(validate(c));
    c.eq_tol = 0.0;
    CHECK_THROWS_AS(validate(c), Error);
}

TEST_CASE("qubit sweep coincidences") {
    SweepConfig c;
    c.dim = 2;
    c.theta_steps = 101;
    const SweepResult r = run_sweep(c);
    CHECK(r.violations == 0);
    const Table &t = r.table;
    REQUIRE(t.rows.size() == 101);
    CHECK(*t.at(0, "theta") == 0.0);
    CHECK(*t.at(100, "theta") == pi / 2);
    CHECK(t.meta["n_values"] == nlohmann::ordered_json::array({1}));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double theta = *t.at(i, "theta");
        CHECK(std::abs(theta - pi / 2 * static_cast<double>(i) / 100.0) < 1e-15);
        CHECK(std::abs(*t.at(i, "lhs_sum") - 1.0) < 1e-12);
        CHECK(std::abs(*t.at(i, "lb_bpuur1") - *t.at(i, "lhs_sum")) < 1e-12);
        CHECK(std::abs(*t.at(i, "lb_buur") - *t.at(i, "lhs_prod")) < 1e-12);
        CHECK(*t.at(i, "lb_msuur") == 1.0);
        const double s = std::sin(2 * theta);
        const double co = std::cos(2 * theta);
        CHECK(std::abs(*t.at(i, "lhs_prod") - s * s * co * co) < 1e-12);
    }
    // degenerate ends carry empty product cells
    CHECK_FALSE(t.at(0, "rhs_uuep_sq").has_value());
    CHECK_FALSE(t.at(0, "lb_uurp_1").has_value());
    CHECK_FALSE(t.at(100, "rhs_uuep_sq").has_value());
    CHECK_FALSE(t.at(50, "rhs_uuep_sq").has_value()); // theta = pi/4: sigma_x eigenstate
    CHECK(t.at(25, "rhs_uuep_sq").has_value());
}

TEST_CASE("DFT sweeps: row invariants and serialization") {
    for (Index d : {3, 4}) {
        SweepConfig c;
        c.dim = d;
        c.theta_steps = 41;
        const SweepResult r = run_sweep(c);
        CHECK(r.violations == 0);
        const Table &t = r.table;
        CHECK(t.columns.front() == "theta");
        CHECK(t.columns.back() == "nonzero_term_count");
        const double lb = 2 * std::tan(pi / d) / (1 + 2 * std::tan(pi / d));
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            CHECK(std::abs(*t.at(i, "rhs_uues") - *t.at(i, "lhs_sum")) <= 1e-10);
            if (t.at(i, "rhs_uuep_sq")) {
                CHECK(std::abs(*t.at(i, "rhs_uuep_sq") - *t.at(i, "lhs_prod")) <= 1e-10);
            }
            CHECK(std::abs(*t.at(i, "lb_msuur") - lb) < 1e-15);
            CHECK(*t.at(i, "lb_uurs_2") >= *t.at(i, "lb_uurs_1") - 1e-12);
        }
        // CSV and JSON carry the same numbers
        const Table from_csv = table_from_csv(to_csv(t));
        const Table from_json = table_from_json(nlohmann::ordered_json::parse(serialize(t, TableFormat::Json)));
        CHECK(from_csv.rows == t.rows);
        CHECK(from_json == t);
    }
}

TEST_CASE("sweep output does not depend on the sign policy for equality columns") {
    SweepConfig best;
    best.dim = 5;
    best.theta_steps = 11;
    SweepConfig plus = best;
    plus.sign_policy = SignPolicy::Plus;
    const Table a = run_sweep(best).table;
    const Table b = run_sweep(plus).table;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(*a.at(i, "lhs_sum") == *b.at(i, "lhs_sum"));
        CHECK(*a.at(i, "lb_uurs_1") >= *b.at(i, "lb_uurs_1"));
    }
    CHECK(to_csv(run_sweep(best).table) == to_csv(a));
}

TEST_CASE("verify suite") {
    VerifyConfig c;
    c.dims = {2, 3, 4};
    c.trials = 200;
    const VerifySummary s = run_verify(c);
    CHECK(s.passed());
    CHECK(s.properties.size() == 15);
    for (const PropertyResult &p : s.properties) {
        CAPTURE(p.name);
        CHECK(p.ok());
        CHECK(p.worst <= p.tolerance);
    }
    CHECK(s.property("uues_equality").worst < 1e-10);
    CHECK(s.property("subset_oracle").worst == 0.0);
    CHECK(run_verify(c).text() == s.text());
    CHECK(s.text().find("result: PASS") != std::string::npos);
    CHECK_THROWS_AS((void)s.property("nope"), Error);

    VerifyConfig bad = c;
    bad.trials = 0;
    CHECK_THROWS_AS(run_verify(bad), Error);
    bad = c;
    bad.dims.clear();
    CHECK_THROWS_AS(run_verify(bad), Error);
    bad = c;
    bad.dims = {1};
    CHECK_THROWS_AS(run_verify(bad), Error);
}

TEST_CASE("verify detects a broken tolerance") {
    // An absurdly tight tolerance must surface as a failure, not pass silently.
    VerifyConfig c;
    c.dims = {5};
    c.trials = 50;
    c.eq_tol = 1e-30;
    const VerifySummary s = run_verify(c);
    CHECK_FALSE(s.passed());
    CHECK_FALSE(s.property("uues_equality").ok());
    CHECK(s.text().find("result: FAIL") != std::string::npos);
}
