#ifndef HORADAM_H
#define HORADAM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HoradamStatus {
  HORADAM_STATUS_OK = 0,
  HORADAM_STATUS_NULL_POINTER = 1,
  HORADAM_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A denominator vanished or the roots coincide.
   */
  HORADAM_STATUS_DEGENERATE = 3,
  /**
   * Internal error; the message says where.
   */
  HORADAM_STATUS_PANIC = 4,
} HoradamStatus;

typedef enum HoradamFamily {
  HORADAM_FAMILY_FIBONACCI = 0,
  HORADAM_FAMILY_LUCAS = 1,
  HORADAM_FAMILY_PELL = 2,
  HORADAM_FAMILY_PELL_LUCAS = 3,
  HORADAM_FAMILY_CHEBYSHEV_U = 4,
  HORADAM_FAMILY_CHEBYSHEV_T = 5,
  HORADAM_FAMILY_HORADAM_NUMBERS = 6,
} HoradamFamily;

typedef enum HoradamVariant {
  HORADAM_VARIANT_PUBLISHED = 0,
  HORADAM_VARIANT_DERIVED = 1,
} HoradamVariant;

typedef enum HoradamBranch {
  HORADAM_BRANCH_FIRST = 1,
  HORADAM_BRANCH_SECOND = 2,
} HoradamBranch;

typedef enum HoradamObjective {
  HORADAM_OBJECTIVE_A2 = 0,
  HORADAM_OBJECTIVE_A3 = 1,
  /**
   * `|a3 - eta a2^2|`; uses the `eta` argument.
   */
  HORADAM_OBJECTIVE_FEKETE_SZEGO = 2,
} HoradamObjective;

/**
 * Opaque parameter set `(a, b, p, q)`.
 */
typedef struct HoradamParams HoradamParams;

/**
 * Outcome of a grid search. Non-finite bounds mean the closed form is vacuous.
 */
typedef struct HoradamSearchSummary {
  double max_value;
  double p1;
  double p2;
  double q2;
  double bound_published;
  double bound_derived;
  double margin_derived;
  bool violation;
} HoradamSearchSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library on the same thread.
 */
const char *horadam_last_error(void);

/**
 * Custom parameter set. The doubles are taken at their exact binary value.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum HoradamStatus horadam_params_new(double a,
                                      double b,
                                      double p,
                                      double q,
                                      struct HoradamParams **out);

/**
 * Parameter set of a named family.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum HoradamStatus horadam_params_named(enum HoradamFamily family, struct HoradamParams **out);

/**
 * # Safety
 * `handle` must be null or come from `horadam_params_new`/`horadam_params_named`,
 * and must not be used afterwards.
 */
void horadam_params_free(struct HoradamParams *handle);

/**
 * `h_n(x)` by the recurrence; `n >= 1`.
 *
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
enum HoradamStatus horadam_eval(const struct HoradamParams *handle,
                                size_t n,
                                double x,
                                double *out);

/**
 * `h_n(x)` from the characteristic roots.
 *
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
enum HoradamStatus horadam_binet(const struct HoradamParams *handle,
                                 size_t n,
                                 double x,
                                 double *out);

/**
 * `h_n` as text, e.g. `"x^2 + 1"`. Free the result with `horadam_string_free`.
 *
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
enum HoradamStatus horadam_polynomial_string(const struct HoradamParams *handle,
                                             size_t n,
                                             char **out);

/**
 * # Safety
 * `s` must be null or come from this library, and must not be used afterwards.
 */
void horadam_string_free(char *s);

/**
 * Bound on `|a2|`.
 *
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
enum HoradamStatus horadam_bound_a2(const struct HoradamParams *handle,
                                    double x,
                                    enum HoradamVariant which,
                                    double *out);

/**
 * Bound on `|a3|`.
 *
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
enum HoradamStatus horadam_bound_a3(const struct HoradamParams *handle, double x, double *out);

/**
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
enum HoradamStatus horadam_theta(const struct HoradamParams *handle,
                                 double x,
                                 double eta,
                                 double *out);

/**
 * Bound on `|a3 - eta a2^2|` and the branch it came from. `branch` may be null.
 *
 * # Safety
 * `handle` must be a live handle, `out` valid for writes, `branch` null or valid.
 */
enum HoradamStatus horadam_fekete_szego(const struct HoradamParams *handle,
                                        double x,
                                        double eta,
                                        enum HoradamVariant which,
                                        double *out,
                                        enum HoradamBranch *branch);

/**
 * Grid search for the largest value of `objective` over feasible Schwarz
 * coefficients, with the default three refinement rounds. `resolution >= 11`.
 *
 * # Safety
 * `handle` must be a live handle and `out` valid for writes.
 */
enum HoradamStatus horadam_search_max(const struct HoradamParams *handle,
                                      double x,
                                      enum HoradamObjective objective,
                                      double eta,
                                      size_t resolution,
                                      struct HoradamSearchSummary *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HORADAM_H */
