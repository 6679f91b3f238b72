#ifndef NCLCE_H
#define NCLCE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum NclceStatus {
  NCLCE_STATUS_OK = 0,
  NCLCE_STATUS_NULL_POINTER = 1,
  NCLCE_STATUS_OUT_OF_RANGE = 2,
  /**
   * A strict backend rejected a crossing query; see `nclce_lce_last_crossing`.
   */
  NCLCE_STATUS_CROSSING = 3,
  NCLCE_STATUS_INVALID_ARGUMENT = 4,
  NCLCE_STATUS_INTERNAL = 5,
} NclceStatus;

/**
 * A non-crossing LCE structure over one text.
 */
typedef struct NclceLce NclceLce;

/**
 * All runs of a text, sorted by `(start, end)`.
 */
typedef struct NclceRuns NclceRuns;

/**
 * An immutable text.
 */
typedef struct NclceText NclceText;

/**
 * A Lyndon tree; nodes are indexed in pre-order.
 */
typedef struct NclceTree NclceTree;

/**
 * The two pairs involved in a rejected query.
 */
typedef struct NclceCrossing {
  size_t earlier_a;
  size_t earlier_b;
  size_t current_a;
  size_t current_b;
} NclceCrossing;

/**
 * Aggregate instrumentation of an LCE structure.
 */
typedef struct NclceStats {
  size_t n;
  uint64_t queries;
  uint64_t comparisons;
  size_t levels;
  uint64_t forwarded;
  uint8_t max_forwarded_per_pair;
  uint64_t forwarding_violations;
  /**
   * Levels `i >= 1` that saw more than `24n / 2^i` calls.
   */
  size_t bound_violations;
} NclceStats;

typedef struct NclceRun {
  size_t start;
  size_t end;
  size_t period;
} NclceRun;

typedef struct NclceInterval {
  size_t lo;
  size_t hi;
} NclceInterval;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of `status`.
 */
const char *nclce_status_message(enum NclceStatus status);

/**
 * Creates a text from `len` integer symbols. `symbols` may be null when `len` is 0.
 *
 * # Safety
 * `symbols` must point to `len` readable values; `out` must be writable.
 */
enum NclceStatus nclce_text_from_symbols(const uint64_t *symbols,
                                         size_t len,
                                         struct NclceText **out);

/**
 * Creates a text with one symbol per byte.
 *
 * # Safety
 * `bytes` must point to `len` readable bytes; `out` must be writable.
 */
enum NclceStatus nclce_text_from_bytes(const uint8_t *bytes, size_t len, struct NclceText **out);

/**
 * Length of `text`, 0 for null.
 *
 * # Safety
 * `text` must be null or a live handle.
 */
size_t nclce_text_len(const struct NclceText *text);

/**
 * # Safety
 * `text` must be null or a live handle not used afterwards.
 */
void nclce_text_free(struct NclceText *text);

/**
 * Creates an LCE structure. With `strict`, crossing queries are rejected.
 * The structure keeps its own reference to the text.
 *
 * # Safety
 * `text` must be a live handle; `out` must be writable.
 */
enum NclceStatus nclce_lce_new(const struct NclceText *text, bool strict, struct NclceLce **out);

/**
 * `LCE(a, b)` for `1 <= a, b <= n`.
 *
 * # Safety
 * `lce` must be a live handle; `out` must be writable.
 */
enum NclceStatus nclce_lce_query(struct NclceLce *lce, size_t a, size_t b, size_t *out);

/**
 * The most recent rejected query; `InvalidArgument` if there was none.
 *
 * # Safety
 * `lce` must be a live handle; `out` must be writable.
 */
enum NclceStatus nclce_lce_last_crossing(const struct NclceLce *lce, struct NclceCrossing *out);

/**
 * # Safety
 * `lce` must be a live handle; `out` must be writable.
 */
enum NclceStatus nclce_lce_stats(const struct NclceLce *lce, struct NclceStats *out);

/**
 * # Safety
 * `lce` must be null or a live handle not used afterwards.
 */
void nclce_lce_free(struct NclceLce *lce);

/**
 * Computes all runs of `text`.
 *
 * # Safety
 * `text` must be a live handle; `out` must be writable.
 */
enum NclceStatus nclce_runs_compute(const struct NclceText *text, struct NclceRuns **out);

/**
 * Number of runs, 0 for null.
 *
 * # Safety
 * `runs` must be null or a live handle.
 */
size_t nclce_runs_len(const struct NclceRuns *runs);

/**
 * # Safety
 * `runs` must be a live handle; `out` must be writable.
 */
enum NclceStatus nclce_runs_get(const struct NclceRuns *runs, size_t index, struct NclceRun *out);

/**
 * # Safety
 * `runs` must be null or a live handle not used afterwards.
 */
void nclce_runs_free(struct NclceRuns *runs);

/**
 * Builds the Lyndon tree of `$text` under order 0 (natural) or 1 (reversed).
 *
 * # Safety
 * `text` must be a live handle; `out` must be writable.
 */
enum NclceStatus nclce_tree_build(const struct NclceText *text,
                                  uint8_t order,
                                  struct NclceTree **out);

/**
 * Number of nodes, `2n + 1`; 0 for null.
 *
 * # Safety
 * `tree` must be null or a live handle.
 */
size_t nclce_tree_len(const struct NclceTree *tree);

/**
 * Order the tree was built with, 0 for null.
 *
 * # Safety
 * `tree` must be null or a live handle.
 */
uint8_t nclce_tree_order(const struct NclceTree *tree);

/**
 * Interval of the `index`-th node in pre-order.
 *
 * # Safety
 * `tree` must be a live handle; `out` must be writable.
 */
enum NclceStatus nclce_tree_node(const struct NclceTree *tree,
                                 size_t index,
                                 struct NclceInterval *out);

/**
 * # Safety
 * `tree` must be null or a live handle not used afterwards.
 */
void nclce_tree_free(struct NclceTree *tree);

/**
 * Number of square occurrences in `text`.
 *
 * # Safety
 * `text` must be a live handle; `out` must be writable.
 */
enum NclceStatus nclce_square_count(const struct NclceText *text, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCLCE_H */
