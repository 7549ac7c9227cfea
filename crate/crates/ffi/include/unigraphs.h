#ifndef UNIGRAPHS_H
#define UNIGRAPHS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum UgStatus {
  UG_STATUS_OK = 0,
  UG_STATUS_NULL_POINTER = 1,
  UG_STATUS_INVALID_UTF8 = 2,
  UG_STATUS_PARSE = 3,
  UG_STATUS_CAPACITY = 4,
  UG_STATUS_NOT_GRAPHIC = 5,
  UG_STATUS_NOT_MEMBER = 6,
  UG_STATUS_INVALID_ARGUMENT = 7,
  UG_STATUS_OUT_OF_RANGE = 8,
  UG_STATUS_PANIC = 9,
} UgStatus;

/**
 * A graph on at most 32 vertices.
 */
typedef struct UgGraph UgGraph;

/**
 * An owned list of graphs.
 */
typedef struct UgGraphList UgGraphList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or an empty string. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *ug_last_error_message(void);

/**
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum UgStatus ug_graph_from_graph6(const char *text, struct UgGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void ug_graph_free(struct UgGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t ug_graph_order(const struct UgGraph *g);

/**
 * Writes a newly allocated graph6 string; release it with [`ug_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle and `out` a writable pointer.
 */
enum UgStatus ug_graph_to_graph6(const struct UgGraph *g, char **out);

/**
 * graph6 of the canonical form; equal strings mean isomorphic graphs.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a writable pointer.
 */
enum UgStatus ug_canonical_graph6(const struct UgGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ug_string_free(char *s);

/**
 * # Safety
 * `g` must be a live graph handle and `out` a writable pointer.
 */
enum UgStatus ug_is_unigraph(const struct UgGraph *g, bool *out);

/**
 * `class` is one of "all", "bipartite", "kpartite:K", "chordal", "split",
 * "perfect"; null means "all". A graph outside the class gives
 * `NotMember`.
 *
 * # Safety
 * `g` must be a live graph handle, `class` null or a NUL-terminated string,
 * and `out` a writable pointer.
 */
enum UgStatus ug_is_a_unigraph(const struct UgGraph *g, const char *class_, bool *out);

/**
 * # Safety
 * Same as [`ug_is_a_unigraph`].
 */
enum UgStatus ug_is_hereditary_a_unigraph(const struct UgGraph *g, const char *class_, bool *out);

/**
 * Realizations of a degree sequence such as "3,3,2^2,1^2", up to
 * isomorphism, restricted to `class` (null for all graphs). A `limit` of 0
 * means no limit.
 *
 * # Safety
 * `sequence` must be a NUL-terminated string, `class` null or one, and
 * `out` a writable pointer.
 */
enum UgStatus ug_enumerate_realizations(const char *sequence,
                                        const char *class_,
                                        size_t limit,
                                        struct UgGraphList **out);

/**
 * # Safety
 * `list` must be null or a live list handle.
 */
size_t ug_graph_list_len(const struct UgGraphList *list);

/**
 * Copies entry `index` into a new graph handle owned by the caller.
 *
 * # Safety
 * `list` must be a live list handle and `out` a writable pointer.
 */
enum UgStatus ug_graph_list_get(const struct UgGraphList *list, size_t index, struct UgGraph **out);

/**
 * # Safety
 * `list` must be null or a list handle from this library, not yet freed.
 */
void ug_graph_list_free(struct UgGraphList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNIGRAPHS_H */
