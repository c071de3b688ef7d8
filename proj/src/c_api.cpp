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

#include "uur/uur.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "uur/limit.hpp"
#include "uur/operators.hpp"
#include "uur/sweep.hpp"
#include "uur/table.hpp"
#include "uur/uncertainty.hpp"
#include "uur/verify.hpp"

struct uur_state {
    uur::PureState value;
};

struct uur_operator {
    uur::Operator value;
};

struct uur_basis {
    uur::ComplementBasis value;
};

struct uur_report {
    uur::UncertaintyReport value;
};

struct uur_table {
    uur::Table value;
};

struct uur_summary {
    std::string text;
    bool passed = false;
};

namespace {

thread_local std::string g_last_error;

uur_status to_status(uur::ErrorCode code) {
    using uur::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument:
        return UUR_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch:
        return UUR_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotNormalized:
        return UUR_ERR_NOT_NORMALIZED;
    case ErrorCode::NotUnitary:
        return UUR_ERR_NOT_UNITARY;
    case ErrorCode::NotHermitian:
        return UUR_ERR_NOT_HERMITIAN;
    case ErrorCode::NotOrthonormal:
        return UUR_ERR_NOT_ORTHONORMAL;
    case ErrorCode::AnchorMismatch:
        return UUR_ERR_ANCHOR_MISMATCH;
    case ErrorCode::DegenerateVariance:
        return UUR_ERR_DEGENERATE;
    case ErrorCode::VanishingDenominator:
        return UUR_ERR_VANISHING_DENOMINATOR;
    case ErrorCode::BranchAmbiguity:
        return UUR_ERR_BRANCH_AMBIGUITY;
    case ErrorCode::NoCommutationPhase:
        return UUR_ERR_NO_COMMUTATION_PHASE;
    case ErrorCode::Numerical:
        return UUR_ERR_NUMERICAL;
    case ErrorCode::Io:
        return UUR_ERR_IO;
    }
    return UUR_ERR_INTERNAL;
}

uur_status fail(uur_status status, const char *message) {
    g_last_error = message;
    return status;
}

// Runs body, translating exceptions into status codes.
template <class Body> uur_status guarded(Body &&body) {
    try {
        return body();
    } catch (const uur::Error &e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(UUR_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(UUR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(UUR_ERR_INTERNAL, "unknown exception");
    }
}

#define UUR_REQUIRE(cond, what)                                                                    \
    do {                                                                                           \
        if (!(cond)) {                                                                             \
            return fail(UUR_ERR_INVALID_ARGUMENT, what);                                           \
        }                                                                                          \
    } while (0)

uur::CVector read_vector(const double *data, std::size_t dim) {
    uur::CVector v(static_cast<uur::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        v(static_cast<uur::Index>(i)) = {data[2 * i], data[2 * i + 1]};
    }
    return v;
}

uur_status write_vector(const uur::CVector &v, double *out, std::size_t len) {
    const auto n = static_cast<std::size_t>(v.size());
    if (out == nullptr || len < 2 * n) {
        return fail(UUR_ERR_INVALID_ARGUMENT, "output buffer too small");
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[2 * i] = v(static_cast<uur::Index>(i)).real();
        out[2 * i + 1] = v(static_cast<uur::Index>(i)).imag();
    }
    return UUR_OK;
}

uur::SignChoice to_sign(uur_sign s) {
    return s == UUR_SIGN_MINUS ? uur::SignChoice::Minus : uur::SignChoice::Plus;
}

std::optional<uur::SignPolicy> to_policy(uur_sign_policy p) {
    switch (p) {
    case UUR_POLICY_BEST:
        return uur::SignPolicy::Best;
    case UUR_POLICY_PLUS:
        return uur::SignPolicy::Plus;
    case UUR_POLICY_MINUS:
        return uur::SignPolicy::Minus;
    }
    return std::nullopt;
}

void copy_subset(const uur::BoundValue &b, int *subset_out) {
    if (subset_out && b.subset_used) {
        std::copy(b.subset_used->begin(), b.subset_used->end(), subset_out);
    }
}

} // namespace

extern "C" {

const char *uur_version(void) {
    return "0.1.0";
}

const char *uur_status_string(uur_status status) {
    switch (status) {
    case UUR_OK:
        return "ok";
    case UUR_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case UUR_ERR_DIMENSION_MISMATCH:
        return "dimension mismatch";
    case UUR_ERR_NOT_NORMALIZED:
        return "not normalized";
    case UUR_ERR_NOT_UNITARY:
        return "not unitary";
    case UUR_ERR_NOT_HERMITIAN:
        return "not hermitian";
    case UUR_ERR_NOT_ORTHONORMAL:
        return "not orthonormal";
    case UUR_ERR_ANCHOR_MISMATCH:
        return "basis anchor mismatch";
    case UUR_ERR_DEGENERATE:
        return "degenerate variance";
    case UUR_ERR_VANISHING_DENOMINATOR:
        return "vanishing denominator";
    case UUR_ERR_BRANCH_AMBIGUITY:
        return "branch ambiguity";
    case UUR_ERR_NO_COMMUTATION_PHASE:
        return "no scalar commutation phase";
    case UUR_ERR_NUMERICAL:
        return "numerical failure";
    case UUR_ERR_IO:
        return "i/o error";
    case UUR_ERR_ABSENT:
        return "absent";
    case UUR_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *uur_last_error(void) {
    return g_last_error.c_str();
}

// ---- states ----------------------------------------------------------------

uur_status uur_state_create(const double *amplitudes, size_t dim, uur_state **out) {
    UUR_REQUIRE(amplitudes && out, "null argument");
    return guarded([&] {
        *out = new uur_state{uur::PureState(read_vector(amplitudes, dim))};
        return UUR_OK;
    });
}

uur_status uur_state_example(size_t dim, double theta, uur_state **out) {
    UUR_REQUIRE(out, "null argument");
    return guarded([&] {
        *out = new uur_state{uur::example_state(static_cast<uur::Index>(dim), theta)};
        return UUR_OK;
    });
}

uur_status uur_state_random(size_t dim, uint64_t seed, uur_state **out) {
    UUR_REQUIRE(out, "null argument");
    return guarded([&] {
        *out = new uur_state{uur::random_pure_state(static_cast<uur::Index>(dim), seed)};
        return UUR_OK;
    });
}

void uur_state_destroy(uur_state *state) {
    delete state;
}

size_t uur_state_dim(const uur_state *state) {
    return state ? static_cast<size_t>(state->value.dim()) : 0;
}

uur_status uur_state_amplitudes(const uur_state *state, double *out, size_t len) {
    UUR_REQUIRE(state, "null argument");
    return write_vector(state->value.amplitudes(), out, len);
}

// ---- operators -------------------------------------------------------------

uur_status uur_operator_create(const double *entries, size_t dim, uur_operator_kind kind,
                               uur_operator **out) {
    UUR_REQUIRE(entries && out, "null argument");
    UUR_REQUIRE(dim >= 1, "dimension must be positive");
    return guarded([&] {
        const auto d = static_cast<uur::Index>(dim);
        uur::CMatrix m(d, d);
        for (uur::Index i = 0; i < d; ++i) {
            for (uur::Index j = 0; j < d; ++j) {
                const std::size_t at = 2 * static_cast<std::size_t>(i * d + j);
                m(i, j) = {entries[at], entries[at + 1]};
            }
        }
        switch (kind) {
        case UUR_OPERATOR_UNITARY:
            *out = new uur_operator{uur::Operator::unitary(std::move(m))};
            break;
        case UUR_OPERATOR_HERMITIAN:
            *out = new uur_operator{uur::Operator::hermitian(std::move(m))};
            break;
        case UUR_OPERATOR_GENERAL:
            *out = new uur_operator{uur::Operator::general(std::move(m))};
            break;
        default:
            return fail(UUR_ERR_INVALID_ARGUMENT, "unknown operator kind");
        }
        return UUR_OK;
    });
}

uur_status uur_operator_random_unitary(size_t dim, uint64_t seed, uur_operator **out) {
    UUR_REQUIRE(out, "null argument");
    return guarded([&] {
        *out = new uur_operator{uur::random_unitary(static_cast<uur::Index>(dim), seed)};
        return UUR_OK;
    });
}

uur_status uur_dft_pair(size_t dim, uur_operator **clock, uur_operator **shift) {
    UUR_REQUIRE(clock && shift, "null argument");
    return guarded([&] {
        uur::DftPair pair = uur::dft_pair(static_cast<uur::Index>(dim));
        *clock = new uur_operator{std::move(pair.clock)};
        *shift = new uur_operator{std::move(pair.shift)};
        return UUR_OK;
    });
}

void uur_operator_destroy(uur_operator *op) {
    delete op;
}

size_t uur_operator_dim(const uur_operator *op) {
    return op ? static_cast<size_t>(op->value.dim()) : 0;
}

uur_operator_kind uur_operator_get_kind(const uur_operator *op) {
    if (!op) {
        return UUR_OPERATOR_GENERAL;
    }
    switch (op->value.kind()) {
    case uur::OperatorKind::Unitary:
        return UUR_OPERATOR_UNITARY;
    case uur::OperatorKind::Hermitian:
        return UUR_OPERATOR_HERMITIAN;
    case uur::OperatorKind::General:
        break;
    }
    return UUR_OPERATOR_GENERAL;
}

uur_status uur_operator_entries(const uur_operator *op, double *out, size_t len) {
    UUR_REQUIRE(op && out, "null argument");
    const uur::CMatrix &m = op->value.matrix();
    const auto d = m.rows();
    UUR_REQUIRE(len >= 2 * static_cast<size_t>(d * d), "output buffer too small");
    for (uur::Index i = 0; i < d; ++i) {
        for (uur::Index j = 0; j < d; ++j) {
            const std::size_t at = 2 * static_cast<std::size_t>(i * d + j);
            out[at] = m(i, j).real();
            out[at + 1] = m(i, j).imag();
        }
    }
    return UUR_OK;
}

uur_status uur_commutation_phase(const uur_operator *u, const uur_operator *v, double *phi) {
    UUR_REQUIRE(u && v && phi, "null argument");
    return guarded([&] {
        const auto result = uur::commutation_phase(u->value, v->value);
        if (!result) {
            return fail(UUR_ERR_NO_COMMUTATION_PHASE, "UVU^dag V^dag is not a scalar phase");
        }
        *phi = *result;
        return UUR_OK;
    });
}

uur_status uur_principal_log(const uur_operator *u, double scale, uur_operator **out) {
    UUR_REQUIRE(u && out, "null argument");
    return guarded([&] {
        *out = new uur_operator{uur::principal_log_generator(u->value, scale)};
        return UUR_OK;
    });
}

// ---- bases -----------------------------------------------------------------

uur_status uur_basis_complete(const uur_state *psi, const double *seeds, size_t n_seeds,
                              uur_basis **out) {
    UUR_REQUIRE(psi && out, "null argument");
    UUR_REQUIRE(seeds || n_seeds == 0, "null seed buffer");
    return guarded([&] {
        const auto d = static_cast<std::size_t>(psi->value.dim());
        std::vector<uur::CVector> seed_vectors;
        for (std::size_t k = 0; k < n_seeds; ++k) {
            seed_vectors.push_back(read_vector(seeds + 2 * d * k, d));
        }
        *out = new uur_basis{uur::complete_complement(psi->value, seed_vectors)};
        return UUR_OK;
    });
}

uur_status uur_basis_random(const uur_state *psi, uint64_t seed, uur_basis **out) {
    UUR_REQUIRE(psi && out, "null argument");
    return guarded([&] {
        *out = new uur_basis{uur::random_complement(psi->value, seed)};
        return UUR_OK;
    });
}

uur_status uur_basis_canonical(size_t dim, double theta, uur_basis **out) {
    UUR_REQUIRE(out, "null argument");
    return guarded([&] {
        *out = new uur_basis{uur::canonical_complement(static_cast<uur::Index>(dim), theta)};
        return UUR_OK;
    });
}

void uur_basis_destroy(uur_basis *basis) {
    delete basis;
}

size_t uur_basis_size(const uur_basis *basis) {
    return basis ? basis->value.size() : 0;
}

uur_status uur_basis_vector(const uur_basis *basis, size_t k, double *out, size_t len) {
    UUR_REQUIRE(basis, "null argument");
    UUR_REQUIRE(k < basis->value.size(), "basis index out of range");
    return write_vector(basis->value[k], out, len);
}

// ---- scalar quantities -----------------------------------------------------

uur_status uur_expectation(const uur_operator *op, const uur_state *psi, double *re, double *im) {
    UUR_REQUIRE(op && psi && re && im, "null argument");
    return guarded([&] {
        const uur::Complex z = uur::expectation(op->value, psi->value);
        *re = z.real();
        *im = z.imag();
        return UUR_OK;
    });
}

uur_status uur_variance(const uur_operator *op, const uur_state *psi, double *out) {
    UUR_REQUIRE(op && psi && out, "null argument");
    return guarded([&] {
        *out = uur::general_variance(op->value, psi->value).value;
        return UUR_OK;
    });
}

uur_status uur_covariance(const uur_operator *a, const uur_operator *b, const uur_state *psi,
                          double *re, double *im) {
    UUR_REQUIRE(a && b && psi && re && im, "null argument");
    return guarded([&] {
        const uur::Complex z = uur::covariance(a->value, b->value, psi->value).value;
        *re = z.real();
        *im = z.imag();
        return UUR_OK;
    });
}

uur_status uur_visibility(const uur_operator *u, const uur_state *psi, double *out) {
    UUR_REQUIRE(u && psi && out, "null argument");
    return guarded([&] {
        *out = uur::visibility(u->value, psi->value);
        return UUR_OK;
    });
}

uur_status uur_sum_equality_rhs(const uur_operator *a, const uur_operator *b, const uur_state *psi,
                                const uur_basis *basis, uur_sign sign, double *out) {
    UUR_REQUIRE(a && b && psi && basis && out, "null argument");
    return guarded([&] {
        *out = uur::sum_equality_rhs(a->value, b->value, psi->value, basis->value, to_sign(sign))
                   .value;
        return UUR_OK;
    });
}

uur_status uur_product_equality_rhs(const uur_operator *a, const uur_operator *b,
                                    const uur_state *psi, const uur_basis *basis, uur_sign sign,
                                    double *out) {
    UUR_REQUIRE(a && b && psi && basis && out, "null argument");
    return guarded([&] {
        *out = uur::product_equality_rhs(a->value, b->value, psi->value, basis->value,
                                         to_sign(sign))
                   .value;
        return UUR_OK;
    });
}

uur_status uur_hierarchical_sum_bound(const uur_operator *u, const uur_operator *v,
                                      const uur_state *psi, const uur_basis *basis, int n,
                                      uur_sign sign, double *out, int *subset_out) {
    UUR_REQUIRE(u && v && psi && basis && out, "null argument");
    return guarded([&] {
        const uur::BoundValue b = uur::hierarchical_sum_bound(u->value, v->value, psi->value,
                                                              basis->value, n, to_sign(sign));
        *out = b.value;
        copy_subset(b, subset_out);
        return UUR_OK;
    });
}

uur_status uur_hierarchical_product_bound(const uur_operator *u, const uur_operator *v,
                                          const uur_state *psi, const uur_basis *basis, int n,
                                          uur_sign sign, double *out, int *subset_out) {
    UUR_REQUIRE(u && v && psi && basis && out, "null argument");
    return guarded([&] {
        const uur::BoundValue b = uur::hierarchical_product_bound(u->value, v->value, psi->value,
                                                                  basis->value, n, to_sign(sign));
        *out = b.value;
        copy_subset(b, subset_out);
        return UUR_OK;
    });
}

uur_status uur_bpuur1_bound(const uur_operator *u, const uur_operator *v, const uur_state *psi,
                            double *out) {
    UUR_REQUIRE(u && v && psi && out, "null argument");
    return guarded([&] {
        *out = uur::bpuur1_bound(u->value, v->value, psi->value).value;
        return UUR_OK;
    });
}

uur_status uur_bpuur2_bound(const uur_operator *u, const uur_operator *v, const uur_state *psi,
                            const double *perp, uur_sign sign, double *out) {
    UUR_REQUIRE(u && v && psi && perp && out, "null argument");
    return guarded([&] {
        const uur::CVector p = read_vector(perp, static_cast<std::size_t>(psi->value.dim()));
        *out = uur::bpuur2_bound(u->value, v->value, psi->value, p, to_sign(sign)).value;
        return UUR_OK;
    });
}

uur_status uur_buur_bound(const uur_operator *u, const uur_operator *v, const uur_state *psi,
                          double *out) {
    UUR_REQUIRE(u && v && psi && out, "null argument");
    return guarded([&] {
        *out = uur::buur_bound(u->value, v->value, psi->value).value;
        return UUR_OK;
    });
}

uur_status uur_msuur_check(const uur_operator *u, const uur_operator *v, const uur_state *psi,
                           double k, double *residual, int *holds) {
    UUR_REQUIRE(u && v && psi && residual, "null argument");
    return guarded([&] {
        const uur::MsuurCheck check = uur::msuur_check(u->value, v->value, psi->value, k);
        *residual = check.residual;
        if (holds) {
            *holds = check.holds ? 1 : 0;
        }
        return UUR_OK;
    });
}

uur_status uur_msuur_sum_lower_bound(double k, double *out) {
    UUR_REQUIRE(out, "null argument");
    return guarded([&] {
        *out = uur::msuur_sum_lower_bound(k);
        return UUR_OK;
    });
}

uur_status uur_hermitian_sum_equality(const uur_operator *u, const uur_operator *v,
                                      const uur_state *psi, const uur_basis *basis, uur_sign sign,
                                      double *out) {
    UUR_REQUIRE(u && v && psi && basis && out, "null argument");
    return guarded([&] {
        *out = uur::hermitian_sum_equality(u->value, v->value, psi->value, basis->value,
                                           to_sign(sign));
        return UUR_OK;
    });
}

uur_status uur_hermitian_product_equality(const uur_operator *u, const uur_operator *v,
                                          const uur_state *psi, const uur_basis *basis,
                                          uur_sign sign, double *out) {
    UUR_REQUIRE(u && v && psi && basis && out, "null argument");
    return guarded([&] {
        *out = uur::hermitian_product_equality(u->value, v->value, psi->value, basis->value,
                                               to_sign(sign));
        return UUR_OK;
    });
}

// ---- reports ---------------------------------------------------------------

uur_status uur_report_create(const uur_operator *u, const uur_operator *v, const uur_state *psi,
                             const uur_basis *basis, const int *n_values, size_t n_count,
                             uur_sign_policy policy, uur_report **out) {
    UUR_REQUIRE(u && v && psi && basis && out, "null argument");
    UUR_REQUIRE(n_values || n_count == 0, "null n_values buffer");
    const auto p = to_policy(policy);
    UUR_REQUIRE(p, "unknown sign policy");
    return guarded([&] {
        const std::span<const int> ns(n_values, n_count);
        *out = new uur_report{uur::full_report(u->value, v->value, psi->value, basis->value, ns, *p)};
        return UUR_OK;
    });
}

void uur_report_destroy(uur_report *report) {
    delete report;
}

double uur_report_lhs_sum(const uur_report *report) {
    return report ? report->value.lhs_sum : 0.0;
}

double uur_report_lhs_prod(const uur_report *report) {
    return report ? report->value.lhs_prod : 0.0;
}

uur_status uur_report_bound(const uur_report *report, const char *label, uur_sign sign,
                            double *out) {
    UUR_REQUIRE(report && label && out, "null argument");
    for (const auto &b : report->value.bounds) {
        if (b.label() != label) {
            continue;
        }
        const bool equality =
            b.kind == uur::BoundKind::UuesRhs || b.kind == uur::BoundKind::UuepRhs;
        if (equality && b.sign_used != to_sign(sign)) {
            continue;
        }
        *out = b.value;
        return UUR_OK;
    }
    return fail(UUR_ERR_ABSENT, "report has no such bound");
}

// ---- tables ----------------------------------------------------------------

void uur_table_destroy(uur_table *table) {
    delete table;
}

size_t uur_table_rows(const uur_table *table) {
    return table ? table->value.rows.size() : 0;
}

size_t uur_table_columns(const uur_table *table) {
    return table ? table->value.columns.size() : 0;
}

const char *uur_table_column_name(const uur_table *table, size_t col) {
    if (!table || col >= table->value.columns.size()) {
        return nullptr;
    }
    return table->value.columns[col].c_str();
}

uur_status uur_table_cell(const uur_table *table, size_t row, size_t col, double *value,
                          int *present) {
    UUR_REQUIRE(table && value && present, "null argument");
    UUR_REQUIRE(row < table->value.rows.size() && col < table->value.columns.size(),
                "cell out of range");
    const uur::Cell &cell = table->value.rows[row][col];
    *present = cell ? 1 : 0;
    if (cell) {
        *value = *cell;
    }
    return UUR_OK;
}

uur_status uur_table_write(const uur_table *table, uur_format format, const char *path) {
    UUR_REQUIRE(table && path, "null argument");
    return guarded([&] {
        uur::write_table(table->value,
                         format == UUR_FORMAT_JSON ? uur::TableFormat::Json : uur::TableFormat::Csv,
                         path);
        return UUR_OK;
    });
}

uur_status uur_table_serialize(const uur_table *table, uur_format format, char **out) {
    UUR_REQUIRE(table && out, "null argument");
    return guarded([&] {
        const std::string text = uur::serialize(
            table->value, format == UUR_FORMAT_JSON ? uur::TableFormat::Json : uur::TableFormat::Csv);
        char *buf = static_cast<char *>(std::malloc(text.size() + 1));
        if (!buf) {
            throw std::bad_alloc();
        }
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
        return UUR_OK;
    });
}

void uur_string_free(char *text) {
    std::free(text);
}

// ---- experiments -----------------------------------------------------------

uur_status uur_sweep_run(const uur_sweep_config *config, uur_table **out, size_t *violations) {
    UUR_REQUIRE(config && out, "null argument");
    UUR_REQUIRE(config->n_values || config->n_count == 0, "null n_values buffer");
    const auto policy = to_policy(config->sign_policy);
    UUR_REQUIRE(policy, "unknown sign policy");
    return guarded([&] {
        uur::SweepConfig cfg;
        cfg.dim = static_cast<uur::Index>(config->dim);
        cfg.theta_steps = config->theta_steps;
        cfg.n_values.assign(config->n_values, config->n_values + config->n_count);
        cfg.sign_policy = *policy;
        if (config->eq_tol > 0.0) {
            cfg.eq_tol = config->eq_tol;
        }
        uur::SweepResult result = uur::run_sweep(cfg);
        if (violations) {
            *violations = result.violations;
        }
        if (result.violations > 0) {
            g_last_error = result.violation_detail;
        }
        *out = new uur_table{std::move(result.table)};
        return UUR_OK;
    });
}

uur_status uur_verify_run(const uur_verify_config *config, uur_summary **out) {
    UUR_REQUIRE(config && out, "null argument");
    UUR_REQUIRE(config->dims || config->n_dims == 0, "null dims buffer");
    return guarded([&] {
        uur::VerifyConfig cfg;
        cfg.dims.assign(config->dims, config->dims + config->n_dims);
        cfg.trials = config->trials;
        cfg.seed = config->seed;
        if (config->eq_tol > 0.0) {
            cfg.eq_tol = config->eq_tol;
        }
        if (config->quotient_tol > 0.0) {
            cfg.quotient_tol = config->quotient_tol;
        }
        const uur::VerifySummary summary = uur::run_verify(cfg);
        *out = new uur_summary{summary.text(), summary.passed()};
        return UUR_OK;
    });
}

uur_status uur_limit_run(const size_t *dims, size_t n_dims, uint64_t seed, uur_table **table,
                         uur_summary **summary) {
    UUR_REQUIRE(table && summary, "null argument");
    UUR_REQUIRE(dims && n_dims > 0, "at least one dimension is required");
    return guarded([&] {
        std::vector<uur::Index> ds;
        for (size_t i = 0; i < n_dims; ++i) {
            UUR_REQUIRE(dims[i] >= 2, "dimensions must be at least 2");
            ds.push_back(static_cast<uur::Index>(dims[i]));
        }
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        const uur::ConvergenceStudy study = uur::convergence_study(ds, seed);
        if (study.records.empty()) {
            return fail(UUR_ERR_BRANCH_AMBIGUITY,
                        "every requested dimension has an eigenphase on the branch cut");
        }
        std::string detail;
        const bool ok = uur::errors_decrease_after(study.records, 9, &detail);
        *table = new uur_table{uur::convergence_table(study, seed)};
        *summary = new uur_summary{uur::convergence_summary(study, seed), ok};
        return UUR_OK;
    });
}

void uur_summary_destroy(uur_summary *summary) {
    delete summary;
}

const char *uur_summary_text(const uur_summary *summary) {
    return summary ? summary->text.c_str() : "";
}

int uur_summary_passed(const uur_summary *summary) {
    return summary && summary->passed ? 1 : 0;
}

} // extern "C"
