/* Copyright (c) vafkit contributors.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef VAFKIT_H
#define VAFKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(VAFKIT_BUILDING)
#define VAFKIT_API __attribute__((visibility("default")))
#else
#define VAFKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes.  Non-zero values match vafkit::ErrorCode. */
typedef enum vafkit_status {
  VAFKIT_OK = 0,
  VAFKIT_UNKNOWN_ARGUMENT = 1,
  VAFKIT_UNKNOWN_VALUE = 2,
  VAFKIT_DUPLICATE_DECLARATION = 3,
  VAFKIT_MULTIVALUED_CYCLE = 4,
  VAFKIT_UNUSED_VALUE = 5,
  VAFKIT_CYCLIC_FRAMEWORK = 6,
  VAFKIT_INVALID_AUDIENCE = 7,
  VAFKIT_TOO_MANY_VALUES = 8,
  VAFKIT_TOO_MANY_EDGES = 9,
  VAFKIT_TOO_LARGE = 10,
  VAFKIT_INVALID_ORIENTATION = 11,
  VAFKIT_CYCLIC_ORIENTATION = 12,
  VAFKIT_VALUE_WIDTH_EXCEEDED = 13,
  VAFKIT_NOT_BIPARTITE = 14,
  VAFKIT_LIFTING_FAILED = 15,
  VAFKIT_MALFORMED_CLAUSE = 16,
  VAFKIT_NOT_MONOTONE_SPLIT = 17,
  VAFKIT_TOO_MANY_VARIABLES = 18,
  VAFKIT_INVALID_DECOMPOSITION = 19,
  VAFKIT_SYNTAX_ERROR = 20,
  VAFKIT_INVALID_INPUT = 21,
  VAFKIT_IO_ERROR = 22,
  VAFKIT_INTERNAL = 99
} vafkit_status;

typedef enum vafkit_problem { VAFKIT_SUBJECTIVE = 0, VAFKIT_OBJECTIVE = 1 } vafkit_problem;

typedef enum vafkit_solver {
  VAFKIT_SOLVER_AUTO = 0,
  VAFKIT_SOLVER_BRUTEFORCE = 1,
  VAFKIT_SOLVER_ORIENTATIONS = 2,
  VAFKIT_SOLVER_FORMULAS = 3,
  VAFKIT_SOLVER_CERTPATH = 4,
  VAFKIT_SOLVER_BIPARTITE = 5
} vafkit_solver;

typedef struct vafkit_framework vafkit_framework;
typedef struct vafkit_result vafkit_result;

VAFKIT_API const char* vafkit_version(void);
/* Message of the last failed call on this thread; "" if none. */
VAFKIT_API const char* vafkit_last_error(void);
VAFKIT_API const char* vafkit_status_name(vafkit_status status);

/* Strings returned through char** are owned by the caller. */
VAFKIT_API void vafkit_string_free(char* s);

VAFKIT_API vafkit_status vafkit_parse(const char* text, vafkit_framework** out);
VAFKIT_API vafkit_status vafkit_load(const char* path, vafkit_framework** out);
VAFKIT_API void vafkit_framework_free(vafkit_framework* f);
VAFKIT_API vafkit_status vafkit_emit(const vafkit_framework* f, char** out);
VAFKIT_API size_t vafkit_argument_count(const vafkit_framework* f);
VAFKIT_API size_t vafkit_value_count(const vafkit_framework* f);

/* "key: value" lines: sizes, widths, bipartiteness, heuristic treewidths. */
VAFKIT_API vafkit_status vafkit_metrics_report(const vafkit_framework* f, char** out);

/* parse_problem / parse_solver accept the CLI spellings. */
VAFKIT_API vafkit_status vafkit_parse_problem(const char* text, vafkit_problem* out);
VAFKIT_API vafkit_status vafkit_parse_solver(const char* text, vafkit_solver* out);

VAFKIT_API vafkit_status vafkit_solve(const vafkit_framework* f, vafkit_problem problem, const char* argument,
                                      vafkit_solver solver, vafkit_result** out);
VAFKIT_API int vafkit_result_accepted(const vafkit_result* r);
VAFKIT_API const char* vafkit_result_solver(const vafkit_result* r);
/* "S < E < T", or NULL when the solver gives no audience. */
VAFKIT_API const char* vafkit_result_audience(const vafkit_result* r);
/* Comma-separated certifying path, or NULL. */
VAFKIT_API const char* vafkit_result_path(const vafkit_result* r);
VAFKIT_API const char* vafkit_result_failing_attacker(const vafkit_result* r);
VAFKIT_API int vafkit_result_fallback(const vafkit_result* r);
VAFKIT_API void vafkit_result_free(vafkit_result* r);

/* graph: structure | value | extended | gaifman | reference | hf | hf-minus:<value>.
 * query is required for gaifman and the hf variants, ignored otherwise. */
VAFKIT_API vafkit_status vafkit_export_dot(const vafkit_framework* f, const char* graph, const char* query,
                                           char** out);

/* variant: subjective | objective | bipartite-vg | bipartite-vg-objective.
 * query_out (optional) receives the query argument name. */
VAFKIT_API vafkit_status vafkit_generate_sat(const char* dimacs, const char* variant, vafkit_framework** out,
                                             char** query_out);
VAFKIT_API vafkit_status vafkit_generate_random(size_t arguments, size_t values, size_t width, uint64_t seed,
                                                vafkit_framework** out);

#ifdef __cplusplus
}
#endif

#endif /* VAFKIT_H */
