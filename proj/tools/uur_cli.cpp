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

// Command line front end. Talks to libuur exclusively through uur.h.

#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uur/uur.h"

namespace {

enum Exit : int { kOk = 0, kPropertyFailure = 1, kArgumentError = 2, kIoError = 3 };

int exit_for(uur_status status) {
    switch (status) {
    case UUR_OK:
        return kOk;
    case UUR_ERR_IO:
        return kIoError;
    case UUR_ERR_INTERNAL:
    case UUR_ERR_NUMERICAL:
        return kPropertyFailure;
    default:
        return kArgumentError;
    }
}

int report_failure(const char *what, uur_status status) {
    std::fprintf(stderr, "uur %s: %s: %s\n", what, uur_status_string(status), uur_last_error());
    return exit_for(status);
}

const std::map<std::string, uur_sign_policy> kSignNames{
    {"best", UUR_POLICY_BEST}, {"plus", UUR_POLICY_PLUS}, {"minus", UUR_POLICY_MINUS}};
const std::map<std::string, uur_format> kFormatNames{{"csv", UUR_FORMAT_CSV},
                                                     {"json", UUR_FORMAT_JSON}};

struct VerifyArgs {
    std::vector<std::size_t> dims{2, 3, 4, 5, 6, 7, 8};
    std::size_t trials = 1000;
    std::uint64_t seed = 7;
    double tol = 0.0;
};

struct SweepArgs {
    std::size_t dim = 2;
    int theta_steps = 201;
    std::vector<int> n_values;
    uur_sign_policy sign = UUR_POLICY_BEST;
    uur_format format = UUR_FORMAT_CSV;
    std::string output = "-";
    double tol = 0.0;
};

struct LimitArgs {
    std::vector<std::size_t> dims;
    std::uint64_t seed = 7;
    uur_format format = UUR_FORMAT_CSV;
    std::string output = "-";
};

int run_verify(const VerifyArgs &args) {
    if (args.trials == 0 || args.dims.empty()) {
        std::fprintf(stderr, "uur verify: --trials must be >= 1 and --dims non-empty\n");
        return kArgumentError;
    }
    uur_verify_config cfg{};
    cfg.dims = args.dims.data();
    cfg.n_dims = args.dims.size();
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.eq_tol = args.tol;
    uur_summary *summary = nullptr;
    const uur_status status = uur_verify_run(&cfg, &summary);
    if (status != UUR_OK) {
        return report_failure("verify", status);
    }
    std::fputs(uur_summary_text(summary), stdout);
    const bool passed = uur_summary_passed(summary) != 0;
    uur_summary_destroy(summary);
    return passed ? kOk : kPropertyFailure;
}

int run_sweep(const SweepArgs &args) {
    uur_sweep_config cfg{};
    cfg.dim = args.dim;
    cfg.theta_steps = args.theta_steps;
    cfg.n_values = args.n_values.empty() ? nullptr : args.n_values.data();
    cfg.n_count = args.n_values.size();
    cfg.sign_policy = args.sign;
    cfg.eq_tol = args.tol;
    uur_table *table = nullptr;
    std::size_t violations = 0;
    uur_status status = uur_sweep_run(&cfg, &table, &violations);
    if (status != UUR_OK) {
        return report_failure("sweep", status);
    }
    std::string detail;
    if (violations > 0) {
        detail = uur_last_error();
    }
    status = uur_table_write(table, args.format, args.output.c_str());
    uur_table_destroy(table);
    if (status != UUR_OK) {
        return report_failure("sweep", status);
    }
    if (violations > 0) {
        std::fprintf(stderr, "uur sweep: %zu row(s) violate the equality columns: %s\n", violations,
                     detail.c_str());
        return kPropertyFailure;
    }
    return kOk;
}

int run_limit(const LimitArgs &args) {
    std::vector<std::size_t> dims = args.dims;
    if (dims.empty()) {
        for (std::size_t d = 9; d <= 99; d += 2) {
            dims.push_back(d);
        }
    }
    uur_table *table = nullptr;
    uur_summary *summary = nullptr;
    uur_status status = uur_limit_run(dims.data(), dims.size(), args.seed, &table, &summary);
    if (status != UUR_OK) {
        return report_failure("limit", status);
    }
    status = uur_table_write(table, args.format, args.output.c_str());
    uur_table_destroy(table);
    // The decay summary goes to stderr when the table itself occupies stdout.
    std::FILE *sink = args.output == "-" ? stderr : stdout;
    std::fputs(uur_summary_text(summary), sink);
    const bool passed = uur_summary_passed(summary) != 0;
    uur_summary_destroy(summary);
    if (status != UUR_OK) {
        return report_failure("limit", status);
    }
    return passed ? kOk : kPropertyFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Unitary uncertainty relations: verification, sweeps and limit experiments"};
    app.set_version_flag("--version", std::string(uur_version()));
    app.require_subcommand(1);

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run the randomized property suite");
    verify_cmd->add_option("--dims", verify.dims, "Dimensions to test")->delimiter(',');
    verify_cmd->add_option("--trials", verify.trials, "Random instances per dimension");
    verify_cmd->add_option("--seed", verify.seed, "Base seed");
    verify_cmd->add_option("--tol", verify.tol, "Override the equality tolerance")
        ->check(CLI::PositiveNumber);

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Emit bound curves over the example state family");
    sweep_cmd->add_option("--dim", sweep.dim, "Hilbert space dimension");
    sweep_cmd->add_option("--theta-steps", sweep.theta_steps, "Grid points on [0, pi/2]");
    sweep_cmd->add_option("--n", sweep.n_values, "Hierarchy order (repeatable)")
        ->take_all()
        ->delimiter(',');
    sweep_cmd->add_option("--sign", sweep.sign, "Sign policy")
        ->transform(CLI::CheckedTransformer(kSignNames, CLI::ignore_case));
    sweep_cmd->add_option("--format", sweep.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    sweep_cmd->add_option("--output", sweep.output, "Output path, '-' for stdout");
    sweep_cmd->add_option("--tol", sweep.tol, "Override the equality tolerance")
        ->check(CLI::PositiveNumber);

    LimitArgs limit;
    auto *limit_cmd = app.add_subcommand("limit", "Convergence of clock/shift toward generators");
    auto *limit_dims =
        limit_cmd->add_option("--dims", limit.dims, "Dimensions (default: odd 9..99)")
            ->delimiter(',');
    limit_cmd->add_option("--seed", limit.seed, "Seed for the complement bases");
    limit_cmd->add_option("--format", limit.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    limit_cmd->add_option("--output", limit.output, "Output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kArgumentError;
    }

    if (verify_cmd->parsed()) {
        return run_verify(verify);
    }
    if (sweep_cmd->parsed()) {
        return run_sweep(sweep);
    }
    if (limit_dims->count() > 0 && limit.dims.empty()) {
        std::fprintf(stderr, "uur limit: --dims must not be empty\n");
        return kArgumentError;
    }
    return run_limit(limit);
}
