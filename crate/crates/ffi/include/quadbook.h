#ifndef QUADBOOK_H
#define QUADBOOK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Page of an edge; `Unpaged` for unknown edges.
 */
typedef enum QbPage {
  QB_PAGE_TOP = 0,
  QB_PAGE_BOTTOM = 1,
  QB_PAGE_UNPAGED = -1,
} QbPage;

/**
 * Status codes; 1 to 3 agree with the CLI exit codes.
 */
typedef enum QbStatus {
  QB_STATUS_OK = 0,
  QB_STATUS_VERIFICATION_FAILED = 1,
  QB_STATUS_INVALID_INPUT = 2,
  QB_STATUS_INTERNAL = 3,
  QB_STATUS_NULL_ARGUMENT = 4,
} QbStatus;

typedef struct QbCycle QbCycle;

typedef struct QbEmbedding QbEmbedding;

typedef struct QbGraph QbGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the next
 * failing call on the same thread.
 */
const char *qb_last_error(void);

/**
 * Graph with `n` isolated vertices `0..n`.
 */
struct QbGraph *qb_graph_new(uint32_t n);

/**
 * Parses an edge-list document (`p <n> <m>` header, one `<u> <v>` per line).
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum QbStatus qb_graph_parse(const char *text, struct QbGraph **out);

/**
 * Adds edge `u`-`v`; edge ids count up from 0 in insertion order.
 *
 * # Safety
 * `g` is a live handle from this library.
 */
enum QbStatus qb_graph_add_edge(struct QbGraph *g, uint32_t u, uint32_t v);

/**
 * # Safety
 * `g` is a live handle from this library.
 */
size_t qb_graph_vertex_count(const struct QbGraph *g);

/**
 * # Safety
 * `g` is a live handle from this library.
 */
size_t qb_graph_edge_count(const struct QbGraph *g);

/**
 * # Safety
 * `g` is NULL or a live handle from this library, not used afterwards.
 */
void qb_graph_free(struct QbGraph *g);

/**
 * Verified two-page embedding of `g`.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum QbStatus qb_embed(const struct QbGraph *g, struct QbEmbedding **out);

/**
 * Copies up to `len` spine vertices into `buf` and returns the spine length.
 *
 * # Safety
 * `be` is a live handle; `buf` is NULL or holds `len` writable values.
 */
size_t qb_embedding_order(const struct QbEmbedding *be, uint32_t *buf, size_t len);

/**
 * # Safety
 * `be` is a live handle.
 */
enum QbPage qb_embedding_page(const struct QbEmbedding *be, uint32_t edge);

/**
 * `Ok` when `be` is a valid two-page embedding of `g`.
 *
 * # Safety
 * Both are live handles.
 */
enum QbStatus qb_embedding_verify(const struct QbGraph *g, const struct QbEmbedding *be);

/**
 * Embedding document text; release with `qb_string_free`. NULL on bad handles.
 *
 * # Safety
 * Both are live handles.
 */
char *qb_embedding_serialize(const struct QbGraph *g, const struct QbEmbedding *be);

/**
 * # Safety
 * `be` is NULL or a live handle, not used afterwards.
 */
void qb_embedding_free(struct QbEmbedding *be);

/**
 * Subhamiltonian cycle of a simple triconnected 4-planar graph.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum QbStatus qb_subham(const struct QbGraph *g, struct QbCycle **out);

/**
 * Copies up to `len` cycle vertices into `buf` and returns the cycle length.
 *
 * # Safety
 * `h` is a live handle; `buf` is NULL or holds `len` writable values.
 */
size_t qb_cycle_order(const struct QbCycle *h, uint32_t *buf, size_t len);

/**
 * Number of cycle pairs that are not graph edges.
 *
 * # Safety
 * `h` is a live handle.
 */
size_t qb_cycle_augmentation_count(const struct QbCycle *h);

/**
 * # Safety
 * Both are live handles.
 */
enum QbStatus qb_cycle_verify(const struct QbGraph *g, const struct QbCycle *h);

/**
 * # Safety
 * `h` is NULL or a live handle, not used afterwards.
 */
void qb_cycle_free(struct QbCycle *h);

/**
 * # Safety
 * `s` is NULL or a string returned by this library, not used afterwards.
 */
void qb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUADBOOK_H */
