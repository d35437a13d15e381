#ifndef MIUG_H
#define MIUG_H

/* Generated by cbindgen from the miug-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success / positive verdict.
 */
#define MIUG_OK 0

/**
 * Negative verdict (valid input, answer is "no").
 */
#define MIUG_NO 1

/**
 * Malformed input (parse failure, invalid JSON, bad parameters).
 */
#define MIUG_ERR_PARSE -1

/**
 * Invalid argument (null pointer, bad enum value, bad UTF-8).
 */
#define MIUG_ERR_ARG -2

/**
 * Internal failure.
 */
#define MIUG_ERR_INTERNAL -3

/**
 * Input/output encodings for graphs.
 */
typedef enum {
  MIUG_FORMAT_GRAPH6 = 0,
  MIUG_FORMAT_EDGE_LIST = 1,
} MiugFormat;

/**
 * Hierarchy levels, ordered by containment.
 */
typedef enum {
  MIUG_CLASS_NOT_INTERVAL = 0,
  MIUG_CLASS_INTERVAL_ONLY = 1,
  MIUG_CLASS_MIXED = 2,
  MIUG_CLASS_ALMOST_MIXED = 3,
  MIUG_CLASS_UPM = 4,
  MIUG_CLASS_UNIT = 5,
} MiugClass;

/**
 * Target classes for representation synthesis.
 */
typedef enum {
  MIUG_TARGET_UNIT = 0,
  MIUG_TARGET_UPM = 1,
  MIUG_TARGET_ALMOST_MIXED = 2,
  MIUG_TARGET_MIXED = 3,
} MiugTarget;

/**
 * Opaque graph handle.
 */
typedef struct MiugGraph MiugGraph;

/**
 * Library version as a static string (do not free).
 */
const char *miug_version(void);

/**
 * Parse a graph from `data` in the given format into a new handle.
 *
 * # Safety
 * `data` must be a valid NUL-terminated string and `out` a valid pointer.
 */
int32_t miug_graph_parse(const char *data, MiugFormat format, MiugGraph **out);

/**
 * Release a graph handle.
 *
 * # Safety
 * `g` must come from `miug_graph_parse` and not be freed twice.
 */
void miug_graph_free(MiugGraph *g);

/**
 * Number of vertices, or a negative error code.
 *
 * # Safety
 * `g` must be a valid handle.
 */
int64_t miug_graph_vertex_count(const MiugGraph *g);

/**
 * Serialize a graph in the given format.
 *
 * # Safety
 * `g` must be a valid handle, `out` a valid pointer.
 */
int32_t miug_graph_emit(const MiugGraph *g, MiugFormat format, char **out);

/**
 * Classify a graph; writes the hierarchy level to `out_class`.
 *
 * # Safety
 * `g` must be a valid handle, `out_class` a valid pointer.
 */
int32_t miug_classify(const MiugGraph *g, MiugClass *out_class);

/**
 * Classification report as JSON (class, membership chain, witnesses).
 *
 * # Safety
 * `g` must be a valid handle, `out_json` a valid pointer.
 */
int32_t miug_classify_json(const MiugGraph *g, char **out_json);

/**
 * Build a representation whose interval types obey `target` and write its
 * JSON to `out_json`. Returns `MIUG_NO` (with no JSON) when the graph is
 * outside the target class.
 *
 * # Safety
 * `g` must be a valid handle, `out_json` a valid pointer.
 */
int32_t miug_represent(const MiugGraph *g, MiugTarget target, char **out_json);

/**
 * Check a representation (JSON) against a graph: `MIUG_OK` when it
 * realizes the graph, `MIUG_NO` when it does not.
 *
 * # Safety
 * `g` must be a valid handle, `rep_json` a NUL-terminated string.
 */
int32_t miug_check(const MiugGraph *g, const char *rep_json);

/**
 * Generate a family member by its lowercase name and parameters; writes the
 * graph in the requested format.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `params` must point to
 * `params_len` ints (may be null when `params_len` is 0); `out` must be a
 * valid pointer.
 */
int32_t miug_family(const char *name,
                    const int32_t *params,
                    uintptr_t params_len,
                    MiugFormat format,
                    char **out);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must come from a miug function and not be freed twice.
 */
void miug_string_free(char *s);

#endif  /* MIUG_H */
