#ifndef JORDAN_STRATA_H
#define JORDAN_STRATA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define JS_OK 0

#define JS_ERR_NULL_POINTER 1

#define JS_ERR_INVALID_ARGUMENT 2

#define JS_ERR_SOLVE 3

#define JS_ERR_CERTIFICATE 4

#define JS_ERR_PANIC 5

#define JS_KIND_TWO_PARAM 0

#define JS_KIND_A_TYPE 1

#define JS_KIND_B_TYPE 2

#define JS_KIND_FIXED_Q 3

#define JS_LEMMA_GA 0

#define JS_LEMMA_GB 1

/**
 * A valid sign certificate.
 */
typedef struct JsCertificate JsCertificate;

/**
 * A solved minimax member.
 */
typedef struct JsMinimax JsMinimax;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *js_last_error(void);

/**
 * `sin(x)/x`, with 1 at 0.
 *
 * # Safety
 * `out` must be null or valid for a write.
 */
int32_t js_sinc(double x, double *out);

/**
 * `sinc x - 2/pi - p (pi^q - (2x)^q)` on `(0, pi/2)`. For A- and B-type
 * families `p` is ignored; for fixed-q families `q` must be 1, 2, 3 or 4.
 *
 * # Safety
 * `out` must be null or valid for a write.
 */
int32_t js_phi(uint32_t kind, double p, double q, double x, double *out);

/**
 * Supremum of `|phi|` over `(0, pi/2)`.
 *
 * # Safety
 * `out` must be null or valid for a write.
 */
int32_t js_sup_deviation(uint32_t kind, double p, double q, size_t grid_n, double tol, double *out);

/**
 * Solves for the minimax member of an A-type (`JS_KIND_A_TYPE`), B-type
 * (`JS_KIND_B_TYPE`) or fixed-q (`JS_KIND_FIXED_Q`, with `fixed_q` in 1..=4)
 * family. `fixed_q` is ignored for the other kinds.
 *
 * # Safety
 * `out` must be null or valid for a write. The handle written there must
 * be released with `js_minimax_free`.
 */
int32_t js_minimax_solve(uint32_t kind, uint32_t fixed_q, double tol, JsMinimax **out);

/**
 * The optimal parameter: `q` for A/B-type families, `p` for fixed-q. NaN
 * for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle from `js_minimax_solve`.
 */
double js_minimax_param(const JsMinimax *h);

/**
 * The minimax error.
 *
 * # Safety
 * `h` must be null or a live handle from `js_minimax_solve`.
 */
double js_minimax_deviation(const JsMinimax *h);

/**
 * Coefficient `p` of the solved member.
 *
 * # Safety
 * `h` must be null or a live handle from `js_minimax_solve`.
 */
double js_minimax_coefficient(const JsMinimax *h);

/**
 * Exponent `q` of the solved member.
 *
 * # Safety
 * `h` must be null or a live handle from `js_minimax_solve`.
 */
double js_minimax_exponent(const JsMinimax *h);

/**
 * Gap between the two equalised magnitudes.
 *
 * # Safety
 * `h` must be null or a live handle from `js_minimax_solve`.
 */
double js_minimax_residual(const JsMinimax *h);

/**
 * # Safety
 * `h` must be null or a handle from `js_minimax_solve` not yet freed.
 */
void js_minimax_free(JsMinimax *h);

/**
 * Certifies one of the two polynomial lemmas (`JS_LEMMA_GA`, `JS_LEMMA_GB`)
 * on the interval `(lo_num/lo_den, hi_num/hi_den)`; the default used
 * elsewhere is `(0, 8/5)`. A failed certificate
 * returns `JS_ERR_CERTIFICATE` and writes a null handle.
 *
 * # Safety
 * `out` must be null or valid for a write. The handle written there must
 * be released with `js_certificate_free`.
 */
int32_t js_certify(uint32_t lemma,
                   int64_t lo_num,
                   int64_t lo_den,
                   int64_t hi_num,
                   int64_t hi_den,
                   JsCertificate **out);

/**
 * Canonical text of the certificate, owned by the handle. Null for a null
 * handle.
 *
 * # Safety
 * `h` must be null or a live handle from `js_certify`.
 */
const char *js_certificate_text(const JsCertificate *h);

/**
 * The certified polynomial as text, owned by the handle.
 *
 * # Safety
 * `h` must be null or a live handle from `js_certify`.
 */
const char *js_certificate_polynomial(const JsCertificate *h);

/**
 * Sturm root count on the interval (0 for every valid certificate).
 *
 * # Safety
 * `h` must be null or a live handle from `js_certify`.
 */
size_t js_certificate_root_count(const JsCertificate *h);

/**
 * # Safety
 * `h` must be null or a handle from `js_certify` not yet freed.
 */
void js_certificate_free(JsCertificate *h);

/**
 * Library version, static storage.
 */
const char *js_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JORDAN_STRATA_H */
