#ifndef GEOCHROMA_H
#define GEOCHROMA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum GcStatus {
  GC_STATUS_OK = 0,
  GC_STATUS_NULL_POINTER = 1,
  GC_STATUS_INVALID_ARGUMENT = 2,
  GC_STATUS_INVALID_CONFIGURATION = 3,
  GC_STATUS_CONSTRUCTION_FAILED = 4,
  GC_STATUS_JSON = 5,
  GC_STATUS_PANIC = 6,
} GcStatus;

// Point configuration handle.
typedef struct GcConfig GcConfig;

// Decomposition handle, optionally carrying a coloring.
typedef struct GcDecomposition GcDecomposition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. The pointer stays
// valid until the next failing call on the same thread.
const char *gc_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *gc_version(void);

// `n` points in convex position.
//
// # Safety
// `out` must be a valid pointer to writable storage.
enum GcStatus gc_config_convex(size_t n, struct GcConfig **out);

// `n` seeded random points in general position with coordinates in `[-bound, bound]`.
//
// # Safety
// `out` must be a valid pointer to writable storage.
enum GcStatus gc_config_generate(size_t n, int64_t bound, uint64_t seed, struct GcConfig **out);

// Parses a configuration from JSON text.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum GcStatus gc_config_from_json(const char *json, struct GcConfig **out);

// Number of points.
//
// # Safety
// `config` must be NULL or a live handle.
size_t gc_config_len(const struct GcConfig *config);

// # Safety
// `config` must be NULL or a handle not yet freed.
void gc_config_free(struct GcConfig *config);

// Every edge as its own part.
//
// # Safety
// `config` must be a live handle; `out` must be writable.
enum GcStatus gc_build_edges(const struct GcConfig *config, struct GcDecomposition **out);

// Convex matching-triangle construction on `n` points (`n` divisible by 3).
//
// # Safety
// `out` must be writable.
enum GcStatus gc_build_thm4(size_t n, struct GcDecomposition **out);

// Cyclic triple system on `18k + 1` points with its box coloring (`k` even, `k >= 4`).
//
// # Safety
// `out` must be writable.
enum GcStatus gc_build_thm32(size_t k, struct GcDecomposition **out);

// K4 fan construction. `q == 0` picks the largest feasible `q`.
//
// # Safety
// `config` must be a live handle; `out` must be writable.
enum GcStatus gc_build_thm3(const struct GcConfig *config, size_t q, struct GcDecomposition **out);

// Recursive nine-region triangle construction, colored.
//
// # Safety
// `config` must be a live handle; `out` must be writable.
enum GcStatus gc_build_thm5(const struct GcConfig *config,
                            size_t threshold,
                            struct GcDecomposition **out);

// Parses a decomposition from JSON text.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum GcStatus gc_decomposition_from_json(const char *json, struct GcDecomposition **out);

// Number of parts, 0 for NULL.
//
// # Safety
// `d` must be NULL or a live handle.
size_t gc_decomposition_part_count(const struct GcDecomposition *d);

// Number of distinct colors, or 0 if uncolored.
//
// # Safety
// `d` must be NULL or a live handle.
size_t gc_decomposition_palette_size(const struct GcDecomposition *d);

// Checks the exact edge cover. `*valid` is set to 1 or 0.
//
// # Safety
// `d` must be a live handle; `valid` must be writable.
enum GcStatus gc_decomposition_validate(const struct GcDecomposition *d, int32_t *valid);

// Counts same-colored intersecting part pairs into `*violations`.
//
// # Safety
// `d` must be a live handle; `violations` must be writable.
enum GcStatus gc_decomposition_verify_coloring(const struct GcDecomposition *d, size_t *violations);

// Serializes to JSON; release the string with [`gc_string_free`].
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum GcStatus gc_decomposition_to_json(const struct GcDecomposition *d, char **out);

// # Safety
// `d` must be NULL or a handle not yet freed.
void gc_decomposition_free(struct GcDecomposition *d);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void gc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GEOCHROMA_H */
