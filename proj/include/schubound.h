/* schubound: exact lower bounds for real solutions of osculating Schubert
 * problems. C interface to the shared library: opaque handles, status codes,
 * JSON for structured results. All big integers cross the boundary as decimal
 * strings inside JSON; sb_*_get_i64 accessors fail with SB_ERROR_OVERFLOW
 * when a value does not fit.
 *
 * Every function returning sb_status leaves an explanation retrievable via
 * sb_last_error() (thread-local) when the status is not SB_OK. Strings
 * returned through char** out-parameters are heap-allocated; release them
 * with sb_string_free().
 */
#ifndef SCHUBOUND_H
#define SCHUBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SB_API __declspec(dllexport)
#else
#define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
    SB_OK = 0,
    SB_ERROR_BAD_INPUT = 1,       /* malformed arguments, parse failures */
    SB_ERROR_INVALID_PROBLEM = 2, /* well-formed input violating a problem invariant */
    SB_ERROR_CHECK_FAILED = 3,    /* a requested verification did not pass */
    SB_ERROR_OVERFLOW = 4,        /* value does not fit the requested width */
    SB_ERROR_INTERNAL = 5
} sb_status;

typedef struct sb_problem sb_problem; /* osculating Schubert problem */
typedef struct sb_report sb_report;   /* bound report for one problem */
typedef struct sb_class sb_class;     /* conjugacy class of a product of symmetric groups */

SB_API const char* sb_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
SB_API const char* sb_last_error(void);

SB_API void sb_string_free(char* s);

/* ---- problems ------------------------------------------------------- */

/* d <= 0 derives the minimal admissible d from the weight condition once
 * the partition data is complete (at validation/computation time). */
SB_API sb_status sb_problem_create(int32_t n, int32_t d, int32_t c, sb_problem** out);
SB_API void sb_problem_free(sb_problem* p);

/* Appends `repeat` copies of the partition (weakly decreasing parts). */
SB_API sb_status sb_problem_add_lambda(sb_problem* p, const int32_t* parts,
                                       size_t len, int32_t repeat);
SB_API sb_status sb_problem_set_nu(sb_problem* p, const int32_t* parts, size_t len);

/* Problem-file document; c_lo and c_hi receive the c range (equal for a
 * single c). Unknown keys are rejected. */
SB_API sb_status sb_problem_parse_json(const char* text, sb_problem** out,
                                       int32_t* c_lo, int32_t* c_hi);
SB_API sb_status sb_problem_to_json(const sb_problem* p, char** out);

/* SB_OK when all invariants hold; SB_ERROR_INVALID_PROBLEM otherwise, with
 * the violated invariants listed in *violations_json (array of strings). */
SB_API sb_status sb_problem_validate(const sb_problem* p, char** violations_json);

/* ---- bounds --------------------------------------------------------- */

/* Computes the signed coefficient a, the lower bound |a|, the complex count
 * and applicable competing bounds. verify != 0 additionally recomputes the
 * values along independent routes; disagreement yields
 * SB_ERROR_CHECK_FAILED (the report is still produced). */
SB_API sb_status sb_bound_compute(const sb_problem* p, int verify, sb_report** out);
SB_API void sb_report_free(sb_report* r);

SB_API sb_status sb_report_to_json(const sb_report* r, char** out);

/* field: "a", "lower_bound", "complex_count", "white_bound", "hhs_bound".
 * Optional fields that are absent yield SB_ERROR_BAD_INPUT. */
SB_API sb_status sb_report_get_i64(const sb_report* r, const char* field, int64_t* out);

/* Signed a for every c in [c_lo, c_hi], as a JSON document. The worker count
 * (SCHUBOUND_THREADS) never changes the bytes produced. */
SB_API sb_status sb_bound_table_json(const sb_problem* p, int32_t c_lo, int32_t c_hi,
                                     char** out);

/* Canonical text of the polynomial whose x^(mu+delta) coefficient is a:
 * Vandermonde times the (exact, unpruned) Schur product at the problem's c. */
SB_API sb_status sb_bound_poly_text(const sb_problem* p, char** out);

/* ---- characters ------------------------------------------------------ */

SB_API sb_status sb_class_create(sb_class** out);
SB_API void sb_class_free(sb_class* cls);

/* One block: partition lambda repeated k times, permuted by a permutation
 * of cycle type `cycles` (must sum to k). */
SB_API sb_status sb_class_add_factor(sb_class* cls, const int32_t* lambda_parts,
                                     size_t lambda_len, int32_t k,
                                     const int32_t* cycles, size_t cycles_len);

/* Character of the class on the multiplicity space of L_mu inside the tensor
 * product, as JSON: {"value": "...", "weight_mismatch": bool, ...}. With
 * verify != 0 the independent routes are included and compared
 * (SB_ERROR_CHECK_FAILED on disagreement). */
SB_API sb_status sb_character_json(const sb_class* cls, const int32_t* mu_parts,
                                   size_t mu_len, int32_t n, int verify, char** out);

/* ---- closed-form competing bounds ------------------------------------ */

SB_API sb_status sb_white_bound(int32_t m, int32_t p, int64_t* out);
SB_API sb_status sb_hhs_count_r(int32_t k, int32_t n, int32_t s, int64_t* out);
SB_API sb_status sb_hhs_bound(int32_t k, int32_t n, int32_t c, int64_t* out);

/* ---- verification suites --------------------------------------------- */

/* suite: "paper-tables", "frobenius", "oracles", "dualities",
 * "counterexample", "all". options_json (may be NULL): {"k": int,
 * "instances": int, "seed": int}. Returns SB_OK when every check passes,
 * SB_ERROR_CHECK_FAILED otherwise; *summary_json describes each check. */
SB_API sb_status sb_verify(const char* suite, const char* options_json,
                           char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* SCHUBOUND_H */
