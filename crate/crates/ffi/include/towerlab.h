#ifndef TOWERLAB_H
#define TOWERLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TowerlabStatus {
  TOWERLAB_STATUS_OK = 0,
  TOWERLAB_STATUS_NULL_POINTER = 1,
  TOWERLAB_STATUS_INVALID_UTF8 = 2,
  TOWERLAB_STATUS_USAGE = 3,
  TOWERLAB_STATUS_GENERICITY = 4,
  TOWERLAB_STATUS_COMPUTATION = 5,
  TOWERLAB_STATUS_PANIC = 6,
} TowerlabStatus;

/**
 * Result of one verification run.
 */
typedef struct TowerlabReport TowerlabReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Writes the dimension of A_n for `tower` ("tl", "brauer", "sym", "hecke",
 * "bmw") into `out`.
 *
 * # Safety
 * `tower` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum TowerlabStatus towerlab_dimension(const char *tower, uintptr_t n, uintptr_t *out);

/**
 * Runs `suite` ("dims", "axioms", "jm", "spectrum", "gz", "branching",
 * "bridge", "all") on A_n. `params` is null for a symbolic run or a
 * comma-separated list such as "rho=5/3,q=7/2" for a specialized one.
 * On success `*out` receives a report handle owned by the caller.
 *
 * # Safety
 * String arguments must be NUL-terminated (or null where allowed) and `out`
 * must be a valid pointer.
 */
enum TowerlabStatus towerlab_run(const char *tower,
                                 const char *suite,
                                 uintptr_t n,
                                 const char *params,
                                 struct TowerlabReport **out);

/**
 * Number of passing checks; 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle from [`towerlab_run`].
 */
uintptr_t towerlab_report_passed(const struct TowerlabReport *report);

/**
 * Number of failing checks; 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle from [`towerlab_run`].
 */
uintptr_t towerlab_report_failed(const struct TowerlabReport *report);

/**
 * The report as a JSON document, or null for a null handle. Release the
 * string with [`towerlab_string_free`].
 *
 * # Safety
 * `report` must be null or a live handle from [`towerlab_run`].
 */
char *towerlab_report_json(const struct TowerlabReport *report);

/**
 * Releases a report handle. Null is ignored.
 *
 * # Safety
 * `report` must be null or a handle from [`towerlab_run`] not yet freed.
 */
void towerlab_report_free(struct TowerlabReport *report);

/**
 * Message for the last failed call on this thread, or null. Release it with
 * [`towerlab_string_free`].
 */
char *towerlab_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void towerlab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TOWERLAB_H */
