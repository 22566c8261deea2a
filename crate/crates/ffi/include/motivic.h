#ifndef MOTIVIC_H
#define MOTIVIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum MotivicStatus {
  MOTIVIC_STATUS_OK = 0,
  MOTIVIC_STATUS_NULL_POINTER = 1,
  MOTIVIC_STATUS_INVALID_UTF8 = 2,
  MOTIVIC_STATUS_SYNTAX = 3,
  MOTIVIC_STATUS_ARITY = 4,
  MOTIVIC_STATUS_DIVISION_NOT_EXACT = 5,
  MOTIVIC_STATUS_DIVISION_BY_ZERO = 6,
  MOTIVIC_STATUS_NOT_EFFECTIVE = 7,
  MOTIVIC_STATUS_OUT_OF_RANGE = 8,
  MOTIVIC_STATUS_UNSUPPORTED = 9,
  MOTIVIC_STATUS_BUDGET_EXCEEDED = 10,
  /**
   * A value does not fit the C integer type requested.
   */
  MOTIVIC_STATUS_OVERFLOW = 11,
  MOTIVIC_STATUS_REGISTRY = 12,
  MOTIVIC_STATUS_PANIC = 13,
} MotivicStatus;

/**
 * Plane curve germ for ideal counts.
 */
typedef enum MotivicCurve {
  /**
   * `x^2 = 0`.
   */
  MOTIVIC_CURVE_RIBBON = 0,
  /**
   * `xy = 0`.
   */
  MOTIVIC_CURVE_NODE = 1,
} MotivicCurve;

/**
 * An integer polynomial in `L`.
 */
typedef struct MotivicClass MotivicClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *motivic_version(void);

/**
 * Message of the last failed call on this thread, or NULL after a success.
 * The pointer stays valid until the next call into this library on the same
 * thread.
 */
const char *motivic_last_error_message(void);

/**
 * Parses and evaluates a DSL expression such as `"(Hilb6 - Omega(2,6))*P14"`.
 *
 * # Safety
 * `source` must be NULL or a NUL-terminated string; `out` must be NULL or
 * valid for a pointer write.
 */
enum MotivicStatus motivic_class_parse(const char *source, struct MotivicClass **out);

/**
 * Builds `sum_i coeffs[i] L^i`.
 *
 * # Safety
 * `coeffs` must point to `len` readable values (it may be NULL when `len`
 * is 0); `out` must be valid for a pointer write.
 */
enum MotivicStatus motivic_class_from_coeffs(const int64_t *coeffs,
                                             size_t len,
                                             struct MotivicClass **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `class` must be NULL or a handle from this library not yet freed.
 */
void motivic_class_free(struct MotivicClass *class_);

/**
 * # Safety
 * `class` must be NULL or a live handle; `out` valid for a pointer write.
 */
enum MotivicStatus motivic_class_clone(const struct MotivicClass *class_,
                                       struct MotivicClass **out);

/**
 * Degree of the polynomial; -1 for the zero class or a NULL handle.
 *
 * # Safety
 * `class` must be NULL or a live handle.
 */
int64_t motivic_class_degree(const struct MotivicClass *class_);

/**
 * Coefficient of `L^index` (0 beyond the degree).
 *
 * # Safety
 * `class` must be NULL or a live handle; `out` valid for a write.
 */
enum MotivicStatus motivic_class_coeff(const struct MotivicClass *class_,
                                       size_t index,
                                       int64_t *out);

/**
 * `*out = a + b`.
 *
 * # Safety
 * `a`, `b` must be NULL or live handles; `out` valid for a pointer write.
 */
enum MotivicStatus motivic_class_add(const struct MotivicClass *a,
                                     const struct MotivicClass *b,
                                     struct MotivicClass **out);

/**
 * `*out = a - b`.
 *
 * # Safety
 * As [`motivic_class_add`].
 */
enum MotivicStatus motivic_class_sub(const struct MotivicClass *a,
                                     const struct MotivicClass *b,
                                     struct MotivicClass **out);

/**
 * `*out = a * b`.
 *
 * # Safety
 * As [`motivic_class_add`].
 */
enum MotivicStatus motivic_class_mul(const struct MotivicClass *a,
                                     const struct MotivicClass *b,
                                     struct MotivicClass **out);

/**
 * `*out = a / b` when the division is exact over the integers.
 *
 * # Safety
 * As [`motivic_class_add`].
 */
enum MotivicStatus motivic_class_exact_div(const struct MotivicClass *a,
                                           const struct MotivicClass *b,
                                           struct MotivicClass **out);

/**
 * `*out = Sym^n(class)`; the class must have non-negative coefficients.
 *
 * # Safety
 * `class` must be NULL or a live handle; `out` valid for a pointer write.
 */
enum MotivicStatus motivic_class_sym_power(const struct MotivicClass *class_,
                                           uint32_t n,
                                           struct MotivicClass **out);

/**
 * The class evaluated at `L = q`.
 *
 * # Safety
 * `class` must be NULL or a live handle; `out` valid for a write.
 */
enum MotivicStatus motivic_class_evaluate(const struct MotivicClass *class_,
                                          uint32_t q,
                                          int64_t *out);

/**
 * Euler number: the class at `L = 1`.
 *
 * # Safety
 * As [`motivic_class_evaluate`].
 */
enum MotivicStatus motivic_class_euler(const struct MotivicClass *class_, int64_t *out);

/**
 * Whether the coefficient sequence reads the same reversed. False for NULL.
 *
 * # Safety
 * `class` must be NULL or a live handle.
 */
bool motivic_class_is_palindromic(const struct MotivicClass *class_);

/**
 * Whether two classes are equal. False if either is NULL.
 *
 * # Safety
 * `a`, `b` must be NULL or live handles.
 */
bool motivic_class_equal(const struct MotivicClass *a, const struct MotivicClass *b);

/**
 * Text form such as `1 + 2L + L^2`; release with [`motivic_string_free`].
 * NULL for a NULL handle.
 *
 * # Safety
 * `class` must be NULL or a live handle.
 */
char *motivic_class_to_string(const struct MotivicClass *class_);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void motivic_string_free(char *s);

/**
 * Assembles `target` (`"all"`, `"m41"`, ..., `"omega26"`) from the bundled
 * registry and writes the JSON report to `*out_json`. `*out_pass` is set to
 * whether every hard check passed; a mismatch is not an error status.
 *
 * # Safety
 * `target` must be NULL or a NUL-terminated string; `out_json` and
 * `out_pass` valid for writes.
 */
enum MotivicStatus motivic_verify_json(const char *target, char **out_json, bool *out_pass);

/**
 * Number of `k`-dimensional subspaces of `F_q^n`, by enumeration.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum MotivicStatus motivic_count_grassmannian(uint32_t k, uint32_t n, uint32_t q, uint64_t *out);

/**
 * Length-two subschemes of the plane rational over `F_q`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum MotivicStatus motivic_count_hilb2_p2(uint32_t q, uint64_t *out);

/**
 * Ideals of colength `c` in the completed local ring of the curve germ over
 * `F_q`, with the default enumeration budget.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum MotivicStatus motivic_count_punctual_ideals(enum MotivicCurve curve,
                                                 uint32_t c,
                                                 uint32_t q,
                                                 uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MOTIVIC_H */
