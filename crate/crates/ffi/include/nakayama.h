#ifndef NAKAYAMA_H
#define NAKAYAMA_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NkStatus {
  NK_STATUS_OK = 0,
  NK_STATUS_NULL_POINTER = 1,
  NK_STATUS_INVALID_UTF8 = 2,
  NK_STATUS_SYNTAX = 3,
  NK_STATUS_VALIDATION = 4,
  NK_STATUS_NOT_SPECIAL_BISERIAL = 5,
  NK_STATUS_BAND_EXISTS = 6,
  NK_STATUS_PRECONDITION = 7,
  NK_STATUS_INTERNAL = 8,
  NK_STATUS_PANIC = 9,
} NkStatus;

/**
 * Opaque presentation handle.
 */
typedef struct NkPresentation NkPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a presentation from its text form into `*out`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum NkStatus nk_presentation_parse(const char *text, struct NkPresentation **out);

/**
 * Loads a built-in presentation by name into `*out`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
enum NkStatus nk_presentation_preset(const char *name, struct NkPresentation **out);

/**
 * Replaces the field characteristic of `p`.
 *
 * # Safety
 * `p` must be a live handle.
 */
enum NkStatus nk_presentation_set_characteristic(struct NkPresentation *p, uint32_t characteristic);

/**
 * The canonical text form of `p`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum NkStatus nk_presentation_serialize(const struct NkPresentation *p, char **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not be used afterwards.
 */
void nk_presentation_free(struct NkPresentation *p);

/**
 * Admissibility, special biserialness and band report as JSON.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum NkStatus nk_validate_json(const struct NkPresentation *p, char **out);

/**
 * Index, walk conditions and structure suite as JSON. `reduced_walks` selects the
 * reading of the walk conditions over all reduced walks instead of strings.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum NkStatus nk_classify_json(const struct NkPresentation *p, bool reduced_walks, char **out);

/**
 * Indecomposable modules with degree reports as JSON.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum NkStatus nk_modules_json(const struct NkPresentation *p, char **out);

/**
 * The Auslander-Reiten quiver in Graphviz format.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum NkStatus nk_arquiver_dot(const struct NkPresentation *p, char **out);

/**
 * The right n-Nakayama index, or -1 for representation-infinite algebras.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum NkStatus nk_nakayama_index(const struct NkPresentation *p, int32_t *out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void nk_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until the next
 * failing call on the same thread.
 */
const char *nk_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NAKAYAMA_H */
