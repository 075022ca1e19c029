#ifndef MZV_H
#define MZV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MzvProductKind {
  MZV_PRODUCT_KIND_HARMONIC = 0,
  MZV_PRODUCT_KIND_STAR = 1,
} MzvProductKind;

// Status codes returned by every fallible entry point.
typedef enum MzvStatus {
  MZV_STATUS_OK = 0,
  MZV_STATUS_NULL_POINTER = 1,
  MZV_STATUS_INVALID_ARGUMENT = 2,
  MZV_STATUS_INADMISSIBLE = 3,
  MZV_STATUS_NOT_MULTIPLE = 4,
  MZV_STATUS_PANIC = 5,
} MzvStatus;

typedef enum MzvZetaKind {
  MZV_ZETA_KIND_MZV = 0,
  MZV_ZETA_KIND_MZSV = 1,
  MZV_ZETA_KIND_HURWITZ_MZV = 2,
  MZV_ZETA_KIND_HURWITZ_MZSV = 3,
  // Multiple t-value; the shift argument is ignored.
  MZV_ZETA_KIND_T = 4,
  // Multiple t-star value; the shift argument is ignored.
  MZV_ZETA_KIND_T_STAR = 5,
} MzvZetaKind;

// Opaque word polynomial.
typedef struct MzvPoly MzvPoly;

typedef struct MzvEvalResult {
  double value;
  double tail_bound;
} MzvEvalResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next call into this library on the same thread.
const char *mzv_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void mzv_string_free(char *s);

// Releases a polynomial handle. NULL is ignored.
//
// # Safety
// `p` must come from this library and not have been freed already.
void mzv_poly_free(struct MzvPoly *p);

// Creates `1 * z_{parts[0]} ... z_{parts[len-1]}`; `len == 0` gives the unit.
//
// # Safety
// `parts` must point to `len` readable values; `out` must be writable.
enum MzvStatus mzv_poly_from_word(const uint32_t *parts, size_t len, struct MzvPoly **out);

// `z_n` multiplied with itself `k` times by the product recursion.
//
// # Safety
// `out` must be writable.
enum MzvStatus mzv_power(uint32_t n, uint32_t k, enum MzvProductKind kind, struct MzvPoly **out);

// The multinomial closed form of the same power.
//
// # Safety
// `out` must be writable.
enum MzvStatus mzv_expand_closed_form(uint32_t n,
                                      uint32_t k,
                                      enum MzvProductKind kind,
                                      struct MzvPoly **out);

// Bilinear product of two polynomials.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum MzvStatus mzv_poly_product(const struct MzvPoly *a,
                                const struct MzvPoly *b,
                                enum MzvProductKind kind,
                                struct MzvPoly **out);

// Positional product of a word with `z_n`; every subscript must be a
// multiple of `n`.
//
// # Safety
// `parts` must point to `len` readable values; `out` must be writable.
enum MzvStatus mzv_lemma1_step(const uint32_t *parts,
                               size_t len,
                               uint32_t n,
                               enum MzvProductKind kind,
                               struct MzvPoly **out);

// Number of nonzero terms.
//
// # Safety
// `p` must be a live handle or NULL (which yields 0).
size_t mzv_poly_term_count(const struct MzvPoly *p);

// Term-by-term equality.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum MzvStatus mzv_poly_equal(const struct MzvPoly *a, const struct MzvPoly *b, bool *out);

// Text rendering such as `2*z2 z2 + 1*z4`. Free with [`mzv_string_free`].
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum MzvStatus mzv_poly_to_text(const struct MzvPoly *p, char **out);

// JSON list of `{"word": [...], "coeff": {"num": "...", "den": "..."}}`
// records in canonical order. Free with [`mzv_string_free`].
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum MzvStatus mzv_poly_to_json(const struct MzvPoly *p, char **out);

// Evaluates one composition by truncated nested summation.
//
// # Safety
// `parts` must point to `len` readable values; `out` must be writable.
enum MzvStatus mzv_eval(const uint32_t *parts,
                        size_t len,
                        enum MzvZetaKind kind,
                        uint64_t truncation,
                        double shift,
                        struct MzvEvalResult *out);

// Linear evaluation of a polynomial. Only the four zeta kinds are accepted.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum MzvStatus mzv_eval_poly(const struct MzvPoly *p,
                             enum MzvZetaKind kind,
                             uint64_t truncation,
                             double shift,
                             struct MzvEvalResult *out);

// Fubini number `F(k)` as a decimal string. Free with [`mzv_string_free`].
//
// # Safety
// `out` must be writable.
enum MzvStatus mzv_fubini(uint32_t k, char **out);

// Checks `F(k)` against the Delannoy-weighted split at `ell`. Writes
// whether both sides agree; `lhs_out` / `rhs_out` may be NULL, otherwise
// they receive decimal strings to free with [`mzv_string_free`].
//
// # Safety
// `equal_out` must be writable; the string outputs must be writable or NULL.
enum MzvStatus mzv_verify_theorem3(uint32_t k,
                                   uint32_t ell,
                                   bool *equal_out,
                                   char **lhs_out,
                                   char **rhs_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MZV_H */
