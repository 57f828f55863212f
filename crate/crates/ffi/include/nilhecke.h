#ifndef NILHECKE_H
#define NILHECKE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every exported function.
 */
typedef enum NhStatus {
  NH_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  NH_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  NH_STATUS_INVALID_UTF8 = 2,
  /**
   * Unknown preset, malformed JSON, or an index out of range.
   */
  NH_STATUS_INVALID_INPUT = 3,
  /**
   * The computation ran and the mathematical check failed; any report
   * output is still written.
   */
  NH_STATUS_CHECK_FAILED = 4,
  /**
   * Internal panic caught at the boundary.
   */
  NH_STATUS_INTERNAL = 5,
} NhStatus;

/**
 * Opaque handle to a finite Coxeter group with its reflection
 * representation and element table.
 */
typedef struct NhGroup NhGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *nh_version(void);

/**
 * Message describing the last failed call on this thread, or null.
 *
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *nh_last_error_message(void);

/**
 * Builds a shipped group by name (`"A2"`, `"H3"`, ...).
 *
 * # Safety
 * `name` must be null or a NUL-terminated string; `out` must be null or
 * writable.
 */
enum NhStatus nh_group_from_preset(const char *name, struct NhGroup **out);

/**
 * Builds a group from a JSON config:
 * `{"preset": ..}` or `{"coxeter_matrix": .., "cartan": .., "field": ..}`.
 *
 * # Safety
 * `json` must be null or a NUL-terminated string; `out` must be null or
 * writable.
 */
enum NhStatus nh_group_from_json(const char *json, struct NhGroup **out);

/**
 * Releases a group handle. Null is ignored.
 *
 * # Safety
 * `group` must be null or a handle from this library not yet freed.
 */
void nh_group_free(struct NhGroup *group);

/**
 * # Safety
 * `group` must be a live handle or null; `out` must be null or writable.
 */
enum NhStatus nh_group_rank(const struct NhGroup *group, size_t *out);

/**
 * # Safety
 * `group` must be a live handle or null; `out` must be null or writable.
 */
enum NhStatus nh_group_order(const struct NhGroup *group, size_t *out);

/**
 * Coxeter matrix entry `m_kl` for 1-based `k`, `l`.
 *
 * # Safety
 * `group` must be a live handle or null; `out` must be null or writable.
 */
enum NhStatus nh_group_coxeter_entry(const struct NhGroup *group,
                                     size_t k,
                                     size_t l,
                                     uint32_t *out);

/**
 * Key identity report over every pair of generators. Returns
 * `NH_STATUS_CHECK_FAILED` (with the report written) if any pair fails.
 *
 * # Safety
 * `group` must be a live handle or null; `out_json` must be null or
 * writable. Free the result with [`nh_string_free`].
 */
enum NhStatus nh_key_identity_json(const struct NhGroup *group, char **out_json);

/**
 * Builds and verifies a membership certificate for the Demazure braid
 * relation of the 1-based pair `(k, l)`, as certificate JSON.
 *
 * # Safety
 * `group` must be a live handle or null; `out_json` must be null or
 * writable. Free the result with [`nh_string_free`].
 */
enum NhStatus nh_certify_json(const struct NhGroup *group, size_t k, size_t l, char **out_json);

/**
 * Verifies certificate JSON by full expansion. Writes whether it holds to
 * `out_ok` and, if `out_residual_json` is non-null, the residual
 * (expansion minus target) as JSON. A certificate that does not verify
 * returns `NH_STATUS_CHECK_FAILED`.
 *
 * # Safety
 * `cert_json` must be null or a NUL-terminated string; `out_ok` must be
 * null or writable; `out_residual_json` may be null. Free the residual
 * with [`nh_string_free`].
 */
enum NhStatus nh_check_cert_json(const char *cert_json, bool *out_ok, char **out_residual_json);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void nh_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NILHECKE_H */
