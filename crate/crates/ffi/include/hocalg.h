/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef HOCALG_H
#define HOCALG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by every entry point.
 */
typedef enum HocStatus {
  HOC_STATUS_OK = 0,
  /*
   The call ran but a verdict failed (invalid structure, functor input
   rejected, homotopy not preserved).
   */
  HOC_STATUS_VERDICT_FAILED = 1,
  HOC_STATUS_PARSE = 2,
  HOC_STATUS_INVALID_ARGUMENT = 3,
  HOC_STATUS_NULL_POINTER = 4,
  HOC_STATUS_INTERNAL = 5,
} HocStatus;

/*
 Opaque structure bundle.
 */
typedef struct HocBundle HocBundle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses a JSON structure document. On success `*out` owns a new bundle.

 # Safety
 `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HocStatus hoc_bundle_parse(const char *text, bool allow_char2, struct HocBundle **out);

/*
 Builds a catalog fixture. `field` may be null for the rationals, or a
 field spec such as `"Q"` or `"Fp:7"`.

 # Safety
 `name` must be a NUL-terminated string, `field` null or NUL-terminated,
 `out` a valid pointer.
 */
enum HocStatus hoc_fixture(const char *name, const char *field, struct HocBundle **out);

/*
 Releases a bundle. Null is ignored.

 # Safety
 `b` must come from this library and not be used afterwards.
 */
void hoc_bundle_free(struct HocBundle *b);

/*
 Kind name of the bundle, e.g. `"two_crossed"`.

 # Safety
 `b` must be a live bundle and `out` a valid pointer.
 */
enum HocStatus hoc_bundle_kind(const struct HocBundle *b, char **out);

/*
 Canonical JSON text of the bundle.

 # Safety
 `b` must be a live bundle and `out` a valid pointer.
 */
enum HocStatus hoc_bundle_to_json(const struct HocBundle *b, char **out);

/*
 SHA-256 hex digest of kind, field and payload.

 # Safety
 `b` must be a live bundle and `out` a valid pointer.
 */
enum HocStatus hoc_bundle_digest(const struct HocBundle *b, char **out);

/*
 Runs the validator of the bundle's kind and writes the report as JSON to
 `*report` (which may be null if the report is not wanted). Returns
 `VerdictFailed` when some axiom fails.

 # Safety
 `b` must be a live bundle; `report` null or a valid pointer.
 */
enum HocStatus hoc_bundle_validate(const struct HocBundle *b, char **report);

/*
 Applies a functor (`lambda`, `delta`, `psi`, `m2`, `cone`, `simp2`).
 On `Ok` or `VerdictFailed` with a constructed output, `*out` owns the
 output bundle and `*certificate` (if non-null) the certificate JSON.

 # Safety
 `b` must be a live bundle, `functor` NUL-terminated, `out` valid,
 `certificate` null or valid.
 */
enum HocStatus hoc_bundle_apply_functor(const struct HocBundle *b,
                                        const char *functor,
                                        struct HocBundle **out,
                                        char **certificate);

/*
 Message of the last failed call on this thread, or null. The pointer
 stays valid until the next call into the library on this thread.
 */
const char *hoc_last_error(void);

/*
 Releases a string returned by the library. Null is ignored.

 # Safety
 `s` must come from this library and not be used afterwards.
 */
void hoc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOCALG_H */
