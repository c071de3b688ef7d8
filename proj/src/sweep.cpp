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

#include "uur/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "parallel.hpp"
#include "uur/operators.hpp"

namespace uur {

namespace {

std::vector<int> effective_n_values(const SweepConfig &config) {
    if (!config.n_values.empty()) {
        return config.n_values;
    }
    std::vector<int> out;
    for (int n = 1; n <= 2 && n <= config.dim - 1; ++n) {
        out.push_back(n);
    }
    return out;
}

double theta_at(int i, int steps) {
    if (i == steps - 1) {
        return std::numbers::pi / 2;
    }
    return (std::numbers::pi / 2) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

Cell value_of(const BoundValue *b) {
    return b ? Cell{b->value} : Cell{};
}

Cell squared_nonnegative(const BoundValue *b) {
    if (!b) {
        return {};
    }
    const double clipped = std::max(b->value, 0.0);
    return clipped * clipped;
}

} // namespace

const char *sign_policy_name(SignPolicy policy) {
    switch (policy) {
    case SignPolicy::Best:
        return "best";
    case SignPolicy::Plus:
        return "plus";
    case SignPolicy::Minus:
        return "minus";
    }
    return "best";
}

void validate(const SweepConfig &config) {
    if (config.dim < 2) {
        throw Error(ErrorCode::InvalidArgument, "dim must be at least 2");
    }
    if (config.theta_steps < 2) {
        throw Error(ErrorCode::InvalidArgument, "theta_steps must be at least 2");
    }
    for (int n : config.n_values) {
        if (n < 1 || n > config.dim - 1) {
            std::ostringstream msg;
            msg << "n = " << n << " outside [1, " << config.dim - 1 << "]";
            throw Error(ErrorCode::InvalidArgument, msg.str());
        }
    }
    if (!(config.eq_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    }
}

SweepResult run_sweep(const SweepConfig &config) {
    validate(config);
    const std::vector<int> n_values = effective_n_values(config);
    const DftPair pair = dft_pair(config.dim);

    Table table;
    table.columns = {"theta",     "lhs_sum",   "lhs_prod",  "rhs_uues", "rhs_uuep_sq",
                     "lb_msuur",  "lb_bpuur1", "lb_bpuur2", "lb_buur"};
    for (int n : n_values) {
        table.columns.push_back("lb_uurs_" + std::to_string(n));
    }
    for (int n : n_values) {
        table.columns.push_back("lb_uurp_" + std::to_string(n));
    }
    table.columns.push_back("nonzero_term_count");
    table.meta["dim"] = config.dim;
    table.meta["theta_steps"] = config.theta_steps;
    table.meta["n_values"] = n_values;
    table.meta["sign_policy"] = sign_policy_name(config.sign_policy);

    const auto steps = static_cast<std::size_t>(config.theta_steps);
    table.rows.resize(steps);
    detail::parallel_chunks(steps, steps, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t i = begin; i < end; ++i) {
            const double theta = theta_at(static_cast<int>(i), config.theta_steps);
            const PureState psi = example_state(config.dim, theta);
            const ComplementBasis basis = canonical_complement(config.dim, theta);
            const UncertaintyReport rep =
                full_report(pair.clock, pair.shift, psi, basis, n_values, config.sign_policy);

            auto equality = [&](BoundKind kind) -> const BoundValue * {
                switch (config.sign_policy) {
                case SignPolicy::Plus:
                    return rep.find(kind, 0, SignChoice::Plus);
                case SignPolicy::Minus:
                    return rep.find(kind, 0, SignChoice::Minus);
                case SignPolicy::Best:
                    break;
                }
                const BoundValue *plus = rep.find(kind, 0, SignChoice::Plus);
                const BoundValue *minus = rep.find(kind, 0, SignChoice::Minus);
                if (!plus || !minus) {
                    return nullptr;
                }
                return minus->value > plus->value ? minus : plus;
            };

            std::vector<Cell> row;
            row.reserve(table.columns.size());
            row.push_back(theta);
            row.push_back(rep.lhs_sum);
            row.push_back(rep.lhs_prod);
            row.push_back(value_of(equality(BoundKind::UuesRhs)));
            row.push_back(squared_nonnegative(equality(BoundKind::UuepRhs)));
            row.push_back(value_of(rep.find(BoundKind::MsuurSum)));
            row.push_back(value_of(rep.find(BoundKind::Bpuur1)));
            row.push_back(value_of(rep.find(BoundKind::Bpuur2)));
            row.push_back(value_of(rep.find(BoundKind::Buur)));
            for (int n : n_values) {
                row.push_back(value_of(rep.find(BoundKind::Uurs, n)));
            }
            for (int n : n_values) {
                row.push_back(squared_nonnegative(rep.find(BoundKind::Uurp, n)));
            }
            row.push_back(static_cast<double>(rep.nonzero_term_count));
            table.rows[i] = std::move(row);
        }
    });

    SweepResult result{std::move(table), 0, {}};
    const Table &t = result.table;
    const std::size_t c_sum = t.column("lhs_sum");
    const std::size_t c_prod = t.column("lhs_prod");
    const std::size_t c_uues = t.column("rhs_uues");
    const std::size_t c_uuep = t.column("rhs_uuep_sq");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto &row = t.rows[i];
        const double sum_err = std::abs(*row[c_uues] - *row[c_sum]);
        const double prod_err = row[c_uuep] ? std::abs(*row[c_uuep] - *row[c_prod]) : 0.0;
        if (sum_err > config.eq_tol || prod_err > config.eq_tol) {
            if (result.violations == 0) {
                std::ostringstream msg;
                msg << "row " << i << " (theta=" << *row[0] << "): |rhs_uues - lhs_sum| = "
                    << sum_err << ", |rhs_uuep_sq - lhs_prod| = " << prod_err;
                result.violation_detail = msg.str();
            }
            ++result.violations;
        }
    }
    return result;
}

} // namespace uur
