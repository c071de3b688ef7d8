/* Copyright 2026 The uur Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

/*
 * C interface to libuur.
 *
 * Objects are opaque handles created by uur_*_create-style functions and
 * released with the matching uur_*_destroy (which accept NULL). Every
 * fallible call returns a uur_status; on failure a description is available
 * from uur_last_error() on the calling thread until the next failing call.
 *
 * Complex numbers cross the boundary as interleaved (re, im) double pairs.
 * Matrices are row major.
 */

#ifndef UUR_UUR_H
#define UUR_UUR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(UUR_BUILDING_LIBRARY)
#    define UUR_API __declspec(dllexport)
#  else
#    define UUR_API __declspec(dllimport)
#  endif
#else
#  define UUR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uur_status {
    UUR_OK = 0,
    UUR_ERR_INVALID_ARGUMENT = 1,
    UUR_ERR_DIMENSION_MISMATCH = 2,
    UUR_ERR_NOT_NORMALIZED = 3,
    UUR_ERR_NOT_UNITARY = 4,
    UUR_ERR_NOT_HERMITIAN = 5,
    UUR_ERR_NOT_ORTHONORMAL = 6,
    UUR_ERR_ANCHOR_MISMATCH = 7,
    UUR_ERR_DEGENERATE = 8,
    UUR_ERR_VANISHING_DENOMINATOR = 9,
    UUR_ERR_BRANCH_AMBIGUITY = 10,
    UUR_ERR_NO_COMMUTATION_PHASE = 11,
    UUR_ERR_NUMERICAL = 12,
    UUR_ERR_IO = 13,
    /* A report lookup named a bound that the report does not contain. */
    UUR_ERR_ABSENT = 14,
    UUR_ERR_INTERNAL = 15
} uur_status;

typedef enum uur_operator_kind {
    UUR_OPERATOR_GENERAL = 0,
    UUR_OPERATOR_UNITARY = 1,
    UUR_OPERATOR_HERMITIAN = 2
} uur_operator_kind;

typedef enum uur_sign { UUR_SIGN_PLUS = 0, UUR_SIGN_MINUS = 1 } uur_sign;

typedef enum uur_sign_policy {
    UUR_POLICY_BEST = 0,
    UUR_POLICY_PLUS = 1,
    UUR_POLICY_MINUS = 2
} uur_sign_policy;

typedef enum uur_format { UUR_FORMAT_CSV = 0, UUR_FORMAT_JSON = 1 } uur_format;

typedef struct uur_state uur_state;
typedef struct uur_operator uur_operator;
typedef struct uur_basis uur_basis;
typedef struct uur_report uur_report;
typedef struct uur_table uur_table;
typedef struct uur_summary uur_summary;

UUR_API const char *uur_version(void);
UUR_API const char *uur_status_string(uur_status status);
UUR_API const char *uur_last_error(void);

/* ---- states ------------------------------------------------------------ */

/* amplitudes: 2*dim doubles, must have unit norm. */
UUR_API uur_status uur_state_create(const double *amplitudes, size_t dim, uur_state **out);
UUR_API uur_status uur_state_example(size_t dim, double theta, uur_state **out);
UUR_API uur_status uur_state_random(size_t dim, uint64_t seed, uur_state **out);
UUR_API void uur_state_destroy(uur_state *state);
UUR_API size_t uur_state_dim(const uur_state *state);
/* Copies 2*dim doubles into out; len is the capacity of out in doubles. */
UUR_API uur_status uur_state_amplitudes(const uur_state *state, double *out, size_t len);

/* ---- operators --------------------------------------------------------- */

/* entries: 2*dim*dim doubles, row major. */
UUR_API uur_status uur_operator_create(const double *entries, size_t dim, uur_operator_kind kind,
                                       uur_operator **out);
UUR_API uur_status uur_operator_random_unitary(size_t dim, uint64_t seed, uur_operator **out);
UUR_API uur_status uur_dft_pair(size_t dim, uur_operator **clock, uur_operator **shift);
UUR_API void uur_operator_destroy(uur_operator *op);
UUR_API size_t uur_operator_dim(const uur_operator *op);
UUR_API uur_operator_kind uur_operator_get_kind(const uur_operator *op);
UUR_API uur_status uur_operator_entries(const uur_operator *op, double *out, size_t len);
/* φ in (-π, π] with UV = e^{iφ}VU; UUR_ERR_NO_COMMUTATION_PHASE otherwise. */
UUR_API uur_status uur_commutation_phase(const uur_operator *u, const uur_operator *v,
                                         double *phi);
/* Hermitian h with exp(i*scale*h) = u on the principal branch. */
UUR_API uur_status uur_principal_log(const uur_operator *u, double scale, uur_operator **out);

/* ---- complement bases -------------------------------------------------- */

/* seeds: n_seeds vectors of 2*dim doubles each, may be NULL when n_seeds = 0. */
UUR_API uur_status uur_basis_complete(const uur_state *psi, const double *seeds, size_t n_seeds,
                                      uur_basis **out);
UUR_API uur_status uur_basis_random(const uur_state *psi, uint64_t seed, uur_basis **out);
UUR_API uur_status uur_basis_canonical(size_t dim, double theta, uur_basis **out);
UUR_API void uur_basis_destroy(uur_basis *basis);
UUR_API size_t uur_basis_size(const uur_basis *basis);
UUR_API uur_status uur_basis_vector(const uur_basis *basis, size_t k, double *out, size_t len);

/* ---- scalar quantities ------------------------------------------------- */

UUR_API uur_status uur_expectation(const uur_operator *op, const uur_state *psi, double *re,
                                   double *im);
UUR_API uur_status uur_variance(const uur_operator *op, const uur_state *psi, double *out);
UUR_API uur_status uur_covariance(const uur_operator *a, const uur_operator *b,
                                  const uur_state *psi, double *re, double *im);
UUR_API uur_status uur_visibility(const uur_operator *u, const uur_state *psi, double *out);

UUR_API uur_status uur_sum_equality_rhs(const uur_operator *a, const uur_operator *b,
                                        const uur_state *psi, const uur_basis *basis,
                                        uur_sign sign, double *out);
UUR_API uur_status uur_product_equality_rhs(const uur_operator *a, const uur_operator *b,
                                            const uur_state *psi, const uur_basis *basis,
                                            uur_sign sign, double *out);
/* subset_out, if non-NULL, receives n zero-based basis indices. */
UUR_API uur_status uur_hierarchical_sum_bound(const uur_operator *u, const uur_operator *v,
                                              const uur_state *psi, const uur_basis *basis,
                                              int n, uur_sign sign, double *out, int *subset_out);
UUR_API uur_status uur_hierarchical_product_bound(const uur_operator *u, const uur_operator *v,
                                                  const uur_state *psi, const uur_basis *basis,
                                                  int n, uur_sign sign, double *out,
                                                  int *subset_out);
UUR_API uur_status uur_bpuur1_bound(const uur_operator *u, const uur_operator *v,
                                    const uur_state *psi, double *out);
UUR_API uur_status uur_bpuur2_bound(const uur_operator *u, const uur_operator *v,
                                    const uur_state *psi, const double *perp, uur_sign sign,
                                    double *out);
UUR_API uur_status uur_buur_bound(const uur_operator *u, const uur_operator *v,
                                  const uur_state *psi, double *out);
/* K may be +INFINITY. holds is set to 1 when residual >= -1e-10. */
UUR_API uur_status uur_msuur_check(const uur_operator *u, const uur_operator *v,
                                   const uur_state *psi, double k, double *residual, int *holds);
UUR_API uur_status uur_msuur_sum_lower_bound(double k, double *out);

/* Hermitian equalities; u and v must be Hermitian operators. */
UUR_API uur_status uur_hermitian_sum_equality(const uur_operator *u, const uur_operator *v,
                                              const uur_state *psi, const uur_basis *basis,
                                              uur_sign sign, double *out);
UUR_API uur_status uur_hermitian_product_equality(const uur_operator *u, const uur_operator *v,
                                                  const uur_state *psi, const uur_basis *basis,
                                                  uur_sign sign, double *out);

/* ---- reports ----------------------------------------------------------- */

UUR_API uur_status uur_report_create(const uur_operator *u, const uur_operator *v,
                                     const uur_state *psi, const uur_basis *basis,
                                     const int *n_values, size_t n_count, uur_sign_policy policy,
                                     uur_report **out);
UUR_API void uur_report_destroy(uur_report *report);
UUR_API double uur_report_lhs_sum(const uur_report *report);
UUR_API double uur_report_lhs_prod(const uur_report *report);
/* Labels as produced by the library, e.g. "UURS_2", "BPUUR1". For
   "UUES_RHS" and "UUEP_RHS" the sign selects which of the two is returned;
   it is ignored otherwise. UUR_ERR_ABSENT for degenerate product entries. */
UUR_API uur_status uur_report_bound(const uur_report *report, const char *label, uur_sign sign,
                                    double *out);

/* ---- tables ------------------------------------------------------------ */

UUR_API void uur_table_destroy(uur_table *table);
UUR_API size_t uur_table_rows(const uur_table *table);
UUR_API size_t uur_table_columns(const uur_table *table);
UUR_API const char *uur_table_column_name(const uur_table *table, size_t col);
/* present is set to 0 for empty cells (value untouched). */
UUR_API uur_status uur_table_cell(const uur_table *table, size_t row, size_t col, double *value,
                                  int *present);
/* path "-" writes to stdout. */
UUR_API uur_status uur_table_write(const uur_table *table, uur_format format, const char *path);
/* Returns a malloc'd NUL-terminated string; release with uur_string_free. */
UUR_API uur_status uur_table_serialize(const uur_table *table, uur_format format, char **out);
UUR_API void uur_string_free(char *text);

/* ---- experiments ------------------------------------------------------- */

typedef struct uur_sweep_config {
    size_t dim;
    int theta_steps;
    const int *n_values; /* NULL or n_count entries; empty selects {1, 2} */
    size_t n_count;
    uur_sign_policy sign_policy;
    double eq_tol; /* <= 0 selects the default 1e-10 */
} uur_sweep_config;

/* On success *violations holds the number of rows failing the equality
   columns' invariants (the table is still returned). */
UUR_API uur_status uur_sweep_run(const uur_sweep_config *config, uur_table **out,
                                 size_t *violations);

typedef struct uur_verify_config {
    const size_t *dims;
    size_t n_dims;
    size_t trials;
    uint64_t seed;
    double eq_tol;       /* <= 0 selects 1e-10 */
    double quotient_tol; /* <= 0 selects 1e-8 */
} uur_verify_config;

UUR_API uur_status uur_verify_run(const uur_verify_config *config, uur_summary **out);

/* Convergence of the clock/shift pair toward its Hermitian generators.
   Branch-cut dimensions (even d) are skipped and listed in the summary. */
UUR_API uur_status uur_limit_run(const size_t *dims, size_t n_dims, uint64_t seed,
                                 uur_table **table, uur_summary **summary);

UUR_API void uur_summary_destroy(uur_summary *summary);
UUR_API const char *uur_summary_text(const uur_summary *summary);
UUR_API int uur_summary_passed(const uur_summary *summary);

#ifdef __cplusplus
}
#endif

#endif /* UUR_UUR_H */
