/* C ABI for the topk-densest solver library.
 * Graphs are opaque handles; results are JSON strings owned by the
 * library. See function documentation for ownership rules. */

#ifndef TOPK_DENSEST_H
#define TOPK_DENSEST_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define TKDS_OK 0

#define TKDS_ERR_INVALID_ARGUMENT 1

#define TKDS_ERR_PARSE_OR_CONTRACT 2

#define TKDS_ERR_BUDGET 3

#define TKDS_ERR_REFUSED 4

// Opaque graph handle.
typedef struct TkdsGraph TkdsGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. The pointer
// stays valid until the next failing call on the same thread.
const char *tkds_last_error_message(void);

// Parses edge-list text (`u v` lines, `#` comments) into a graph handle.
//
// # Safety
// `edge_list` must be a NUL-terminated string; `out_graph` must be a
// valid pointer.
int32_t tkds_graph_parse(const char *edge_list, struct TkdsGraph **out_graph);

// Releases a graph handle. Null is a no-op.
//
// # Safety
// `graph` must be a pointer returned by [`tkds_graph_parse`], released at
// most once.
void tkds_graph_free(struct TkdsGraph *graph);

// Number of vertices; 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle.
uint32_t tkds_graph_vertex_count(const struct TkdsGraph *graph);

// Number of edges; 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle.
uint64_t tkds_graph_edge_count(const struct TkdsGraph *graph);

// Exact densest subgraph as a JSON document.
//
// # Safety
// `graph` must be a live handle; `out_json` a valid pointer. The result
// string must be released with [`tkds_string_free`].
int32_t tkds_densest_json(const struct TkdsGraph *graph, char **out_json);

// Solves top-k overlapping densest subgraphs; `mode` is one of `auto`,
// `constant-k`, `general`, `oracle` (null means `auto`). `lambda` is a
// decimal or `p/q` string. The result is a JSON report document.
//
// # Safety
// `graph` must be a live handle; string arguments NUL-terminated;
// `out_json` valid. Release the result with [`tkds_string_free`].
int32_t tkds_solve_json(const struct TkdsGraph *graph,
                        uint32_t k,
                        const char *lambda,
                        const char *mode,
                        char **out_json);

// Exhaustive top-k oracle limited to graphs of at most `max_n` vertices.
//
// # Safety
// Same contracts as [`tkds_solve_json`].
int32_t tkds_oracle_json(const struct TkdsGraph *graph,
                         uint32_t k,
                         const char *lambda,
                         uint32_t max_n,
                         char **out_json);

// Hardness-instance parameters (λ = 3n³ and the certification threshold)
// for the graph, as JSON.
//
// # Safety
// `graph` must be a live handle; `out_json` valid. Release the result
// with [`tkds_string_free`].
int32_t tkds_hardness_instance_json(const struct TkdsGraph *graph, char **out_json);

// Releases a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must be a string returned by this library, released at most once.
void tkds_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TOPK_DENSEST_H */
