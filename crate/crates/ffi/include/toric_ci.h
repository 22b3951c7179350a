#ifndef TORIC_CI_H
#define TORIC_CI_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirroring the CLI exit codes.
 */
typedef enum ToricStatus {
  ToricStatus_Ok = 0,
  ToricStatus_Error = 1,
  ToricStatus_BadInput = 2,
  ToricStatus_BudgetExceeded = 4,
  ToricStatus_NullArgument = 5,
} ToricStatus;

/**
 * Opaque graph handle.
 */
typedef struct ToricGraph ToricGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *toric_last_error(void);

/**
 * Library version as a static string; do not free.
 */
const char *toric_version(void);

/**
 * Parses the edge-list text format (`u v` per line, optional `n <count>`
 * header) into a new graph handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum ToricStatus toric_graph_parse_edgelist(const char *text, struct ToricGraph **out);

/**
 * Parses the JSON graph format `{"n": int, "edges": [[u, v], ...]}`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum ToricStatus toric_graph_parse_json(const char *text, struct ToricGraph **out);

/**
 * Releases a graph handle. NULL is allowed.
 *
 * # Safety
 * `g` must come from a parse function and not be freed twice.
 */
void toric_graph_free(struct ToricGraph *g);

/**
 * Number of vertices of the graph; 0 on NULL.
 *
 * # Safety
 * `g` must be a live graph handle or NULL.
 */
uint32_t toric_graph_vertex_count(const struct ToricGraph *g);

/**
 * Number of edges of the graph; 0 on NULL.
 *
 * # Safety
 * `g` must be a live graph handle or NULL.
 */
uint32_t toric_graph_edge_count(const struct ToricGraph *g);

/**
 * Runs the full analysis and stores the JSON report (without timings, so
 * identical inputs produce identical bytes) in `*out_json`.
 * Pass 0 for `budget_edges` / `degree_bound` to use the defaults.
 *
 * # Safety
 * `g` must be a live graph handle; `out_json` a valid pointer. The
 * returned string must be released with [`toric_string_free`].
 */
enum ToricStatus toric_analyze_json(const struct ToricGraph *g,
                                    uint32_t budget_edges,
                                    uint32_t degree_bound,
                                    char **out_json);

/**
 * Whether the toric ideal of the graph is a complete intersection
 * (every connected component decided separately).
 *
 * # Safety
 * `g` must be a live graph handle; `out_flag` a valid pointer.
 */
enum ToricStatus toric_is_ci(const struct ToricGraph *g,
                             uint32_t budget_edges,
                             uint32_t degree_bound,
                             bool *out_flag);

/**
 * Whether the edge ring of the graph is normal (the odd cycle condition,
 * per connected component).
 *
 * # Safety
 * `g` must be a live graph handle; `out_flag` a valid pointer.
 */
enum ToricStatus toric_is_normal(const struct ToricGraph *g, bool *out_flag);

/**
 * Releases a string returned by this library. NULL is allowed.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void toric_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_CI_H */
