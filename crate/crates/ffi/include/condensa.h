#ifndef CONDENSA_H
#define CONDENSA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum CondensaStatus {
  CONDENSA_STATUS_OK = 0,
  /**
   * An internal consistency check failed.
   */
  CONDENSA_STATUS_INTERNAL = 1,
  /**
   * The input was rejected.
   */
  CONDENSA_STATUS_VALIDATION = 2,
  /**
   * A search exceeded the size cap.
   */
  CONDENSA_STATUS_CAP_EXCEEDED = 3,
  /**
   * A required pointer was null.
   */
  CONDENSA_STATUS_NULL_POINTER = 4,
  /**
   * A string argument was not UTF-8.
   */
  CONDENSA_STATUS_INVALID_UTF8 = 5,
  /**
   * The library panicked; the handle should be discarded.
   */
  CONDENSA_STATUS_PANIC = 6,
} CondensaStatus;

/**
 * Opaque scenario handle.
 */
typedef struct CondensaScenario CondensaScenario;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a scenario from JSON text.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CondensaStatus condensa_scenario_from_json(const char *json, struct CondensaScenario **out);

/**
 * Loads a built-in example by name.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum CondensaStatus condensa_scenario_builtin(const char *name, struct CondensaScenario **out);

/**
 * A metric scenario for `Z(Vec(Z_{f1} × … × Z_{fn}))` with no algebra or symmetry.
 *
 * # Safety
 * `factors` must point to `len` values; `out` must be writable.
 */
enum CondensaStatus condensa_scenario_double(const size_t *factors,
                                             size_t len,
                                             struct CondensaScenario **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void condensa_scenario_free(struct CondensaScenario *s);

/**
 * Runs a command (`modular-data`, `etale`, `condense`, `obstruction`,
 * `splittings`, `induce`, `universal`) and returns its report as text or
 * JSON. `cap = 0` uses the default size cap.
 *
 * # Safety
 * `s` must be a live handle, `command` a NUL-terminated string and `out` writable.
 */
enum CondensaStatus condensa_run(const struct CondensaScenario *s,
                                 const char *command,
                                 bool json,
                                 size_t cap,
                                 char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not be used afterwards.
 */
void condensa_string_free(char *p);

/**
 * Message for the last failure on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *condensa_last_error(void);

/**
 * Number of anyons of a metric scenario.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum CondensaStatus condensa_metric_order(const struct CondensaScenario *s, size_t *out);

/**
 * Twist `θ_x = exp(2πi·num/den)` of anyon `x`, with `0 ≤ num < den`.
 *
 * # Safety
 * `s` must be a live handle; `num` and `den` writable.
 */
enum CondensaStatus condensa_metric_twist(const struct CondensaScenario *s,
                                          size_t anyon,
                                          int64_t *num,
                                          int64_t *den);

/**
 * Number of splittings and whether the symmetry is preserved, for a
 * metric scenario with a symmetry or a universal scenario.
 *
 * # Safety
 * `s` must be a live handle; `count` and `preserved` writable.
 */
enum CondensaStatus condensa_splitting_count(const struct CondensaScenario *s,
                                             size_t cap,
                                             size_t *count,
                                             bool *preserved);

/**
 * Library version, static storage.
 */
const char *condensa_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONDENSA_H */
