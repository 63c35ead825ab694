/* charsum - character sums, finite-field hypergeometric series, and
 * hyperelliptic point counts over small finite fields.
 *
 * C interface to the shared library. A field F_q (q = p^r, p an odd prime)
 * is held behind an opaque handle; elements of F_q are passed as integer
 * codes in [0, q), where code = c0 + c1*p + ... + c_{r-1}*p^{r-1} for the
 * coefficient vector (c0, ..., c_{r-1}) of the element, constant term
 * first. Prime-field elements are therefore just their residues.
 *
 * Every function returns CS_OK on success. On failure, cs_last_error()
 * returns a thread-local message and the return value names the condition.
 */
#ifndef CHARSUM_H
#define CHARSUM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
    CS_OK = 0,
    /* verification ran but at least one identity instance failed */
    CS_VERIFY_FAILED = 1,
    CS_ERR_COMPOSITE_OR_EVEN_P = 10,
    CS_ERR_FIELD_TOO_LARGE = 11,
    CS_ERR_DIVISION_BY_ZERO = 12,
    CS_ERR_MIXED_FIELDS = 13,
    CS_ERR_LOG_OF_ZERO = 14,
    CS_ERR_BAD_MODULUS = 15,
    CS_ERR_ORDER_DOES_NOT_DIVIDE = 16,
    CS_ERR_ZERO_PARAMETER = 17,
    CS_ERR_EQUAL_PARAMETERS = 18,
    CS_ERR_BAD_RESIDUE_CLASS = 19,
    CS_ERR_DEGENERATE_DISCRIMINANT = 20,
    CS_ERR_BAD_LAMBDA = 21,
    CS_ERR_SINGULAR_LAMBDA = 22,
    CS_ERR_SINGULAR_MODEL = 23,
    CS_ERR_EVEN_DEGREE_MODEL = 24,
    CS_ERR_NON_INTEGRAL_RESULT = 25,
    CS_ERR_UNSUPPORTED_GENUS = 26,
    CS_ERR_UNSUPPORTED_FAMILY = 27,
    CS_ERR_NO_REPRESENTATION = 28,
    CS_ERR_SNAP_FAILED = 29,
    CS_ERR_INVALID_ARGUMENT = 30,
    CS_ERR_INTERNAL = 31
} cs_status;

/* Name of a status code, e.g. "BadModulus"; stable across versions. */
const char* cs_status_name(cs_status s);

/* Thread-local message describing the most recent failure. */
const char* cs_last_error(void);

/* ---- fields ---------------------------------------------------------- */

typedef struct cs_field cs_field;

/* Builds F_{p^r}. q is capped at 10^6 by default; the CHARSUM_MAX_Q
 * environment variable overrides the cap. */
cs_status cs_field_create(int64_t p, int32_t r, cs_field** out);
void cs_field_destroy(cs_field* f);

int64_t cs_field_p(const cs_field* f);
int32_t cs_field_r(const cs_field* f);
int64_t cs_field_q(const cs_field* f);
int64_t cs_field_generator(const cs_field* f); /* element code */

/* ---- character sums --------------------------------------------------- */

enum { CS_FLAVOR_PSI = 0, CS_FLAVOR_PHI = 1 };

/* sum over x in F_q of phi(x^m + a) phi(x^n + b), with an extra phi(x)
 * factor for CS_FLAVOR_PHI. Exact integer. */
cs_status cs_pair_sum(const cs_field* f, int64_t m, int64_t n, int64_t a_code, int64_t b_code,
                      int flavor, int64_t* out);

/* psi_n(a) (flavor CS_FLAVOR_PSI) or phi_n(a) (CS_FLAVOR_PHI). */
cs_status cs_jacobsthal(const cs_field* f, int64_t n, int64_t a_code, int flavor, int64_t* out);

/* ---- hypergeometric series -------------------------------------------- */

/* Gaussian hypergeometric series with characters given by their exponents
 * modulo q-1 (ntop = nbot + 1). Returns the complex value and an absolute
 * error bound. */
cs_status cs_hyper(const cs_field* f, const int64_t* top_exps, size_t ntop,
                   const int64_t* bottom_exps, size_t nbot, int64_t x_code, double* re,
                   double* im, double* err);

/* ---- curves ------------------------------------------------------------ */

enum { CS_TRACE_LEGENDRE = 0, CS_TRACE_CLAUSEN = 1 };

/* Frobenius trace of y^2 = x(x-1)(x-lambda) resp. y^2 = (x-1)(x^2+lambda). */
cs_status cs_trace(const cs_field* f, int kind, int64_t lambda_code, int64_t* out);

/* Number of projective points of y^2 = f(x) for monic f given by its
 * coefficient codes (constant first, nf = deg f + 1, leading code 1).
 * genus/infinity_points may be NULL; they are reported only when
 * deg f >= 3. */
cs_status cs_count_points(const cs_field* f, const int64_t* f_codes, size_t nf, int64_t* count,
                          int32_t* genus, int32_t* infinity_points);

/* Jacobian order of y^2 = f(x) over F_p (odd-degree monic squarefree f of
 * degree 5 or 7, codes < p) from point counts over F_p..F_{p^g}, plus an
 * annihilation check on `trials` random divisors. */
cs_status cs_jacobian(int64_t p, const int64_t* f_codes, size_t nf, int32_t trials, uint64_t seed,
                      int64_t* order, int32_t* annihilation_failures);

/* ---- quadratic-form representations ------------------------------------ */

/* form: "two_squares" (p = c4^2 + d4^2, c4 = -1 mod 4),
 *       "two_squares_xodd" (p = x^2 + y^2, x odd, signs open),
 *       "a2_3b2" (p = a3^2 + 3 b3^2, a3 = -1 mod 3),
 *       "a2_2b2" (p = a8^2 + 2 b8^2, a8 = -1 mod 4). */
cs_status cs_represent(int64_t p, const char* form, int64_t* first_signed, int64_t* second_abs,
                       int32_t* sign_ambiguous);

/* ---- verification sweeps and tables ------------------------------------ */

/* config_json keys: identities (array of names or ["all"]), q_min, q_max,
 * seed, samples, exhaustive, tolerance, threads, timing, corrupt.
 * On return *report_json holds the full JSON report (free with
 * cs_string_free). Returns CS_OK when all identities pass and
 * CS_VERIFY_FAILED when any instance fails. */
cs_status cs_verify(const char* config_json, char** report_json);

/* Newline-separated list of registry identity names. */
cs_status cs_identity_list(char** out);

/* spec_json keys: family ("count_mm" | "count_psi24" | "jacobsthal"),
 * p, r, m, n, format ("csv" | "json"). */
cs_status cs_table(const char* spec_json, char** out);

void cs_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CHARSUM_H */
