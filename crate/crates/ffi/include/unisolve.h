#ifndef UNISOLVE_H
#define UNISOLVE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum UnisolveStatus {
  UNISOLVE_STATUS_OK = 0,
  UNISOLVE_STATUS_NULL_POINTER = 1,
  UNISOLVE_STATUS_INVALID_UTF8 = 2,
  UNISOLVE_STATUS_PARSE_ERROR = 3,
  UNISOLVE_STATUS_ZERO_POLYNOMIAL = 4,
  UNISOLVE_STATUS_UNSUPPORTED_DEGREE = 5,
  UNISOLVE_STATUS_SINGULAR = 6,
  UNISOLVE_STATUS_NO_CONVERGENCE = 7,
  UNISOLVE_STATUS_NUMERIC_ERROR = 8,
  UNISOLVE_STATUS_INDEX_OUT_OF_RANGE = 9,
  UNISOLVE_STATUS_INVALID_ARGUMENT = 10,
} UnisolveStatus;

/**
 * Solver selection.
 */
typedef enum UnisolveMethod {
  /**
   * Unified decomposition with the Aberth fallback.
   */
  UNISOLVE_METHOD_AUTO = 0,
  /**
   * Unified decomposition; singular cases are errors.
   */
  UNISOLVE_METHOD_UNIFIED_STRICT = 1,
  UNISOLVE_METHOD_CLASSICAL = 2,
  UNISOLVE_METHOD_ABERTH = 3,
} UnisolveMethod;

/**
 * Opaque solve result.
 */
typedef struct UnisolveReport UnisolveReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Solves the polynomial with `len` coefficients at `coeffs`, highest degree
 * first. On success `*out` receives a report owned by the caller.
 *
 * # Safety
 * `coeffs` must point to `len` readable doubles and `out` must be writable.
 */
enum UnisolveStatus unisolve_solve_coeffs(const double *coeffs,
                                          size_t len,
                                          enum UnisolveMethod method,
                                          struct UnisolveReport **out);

/**
 * Parses `text` (for example `"x^3 - 2x + 1"`) and solves it.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` must be writable.
 */
enum UnisolveStatus unisolve_solve_text(const char *text,
                                        enum UnisolveMethod method,
                                        struct UnisolveReport **out);

/**
 * Number of roots in the report, or 0 for a null report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
size_t unisolve_report_root_count(const struct UnisolveReport *report);

/**
 * Root `index` in order of real part, then imaginary part.
 *
 * # Safety
 * `report` must be null or a live report; `re` and `im` must be writable.
 */
enum UnisolveStatus unisolve_report_root(const struct UnisolveReport *report,
                                         size_t index,
                                         double *re,
                                         double *im);

/**
 * Largest scaled residual over the roots, or NaN for a null report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
double unisolve_report_max_residual(const struct UnisolveReport *report);

/**
 * Special-case tag such as `"none"` or `"biquadratic"`. The string lives as
 * long as the report; do not free it.
 *
 * # Safety
 * `report` must be null or a live report.
 */
const char *unisolve_report_special_case(const struct UnisolveReport *report);

/**
 * JSON rendering of the report, the same document the CLI prints. Release
 * the result with [`unisolve_string_free`]. Returns null for a null report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
char *unisolve_report_json(const struct UnisolveReport *report, bool with_trace);

/**
 * Releases a report. Null is ignored.
 *
 * # Safety
 * `report` must be null or a report not yet freed.
 */
void unisolve_report_free(struct UnisolveReport *report);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void unisolve_string_free(char *s);

/**
 * Message of the last failure on this thread, or null if none. Valid until
 * the next failing call on the same thread.
 */
const char *unisolve_last_error(void);

/**
 * Static description of a status code.
 */
const char *unisolve_status_message(enum UnisolveStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNISOLVE_H */
