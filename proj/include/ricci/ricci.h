/* C interface to the Ollivier-Ricci curvature library.
 *
 * All functions return a ricci_status code; RICCI_OK means success. On
 * failure, ricci_last_error_message() returns a thread-local description of
 * what went wrong. Strings returned through output parameters are owned by the
 * caller and must be released with ricci_string_free().
 *
 * Exact values are reported as reduced fractions ("p/q") together with a
 * 12-significant-digit decimal rendering.
 */
#ifndef RICCI_RICCI_H
#define RICCI_RICCI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ricci_status {
    RICCI_OK = 0,
    RICCI_ERR_MALFORMED_INPUT = 1,
    RICCI_ERR_UNKNOWN_NODE = 2,
    RICCI_ERR_NOT_AN_EDGE = 3,
    RICCI_ERR_DEGREE_MISMATCH = 4,
    RICCI_ERR_ORACLE_TOO_LARGE = 5,
    RICCI_ERR_DOMAIN = 6,
    RICCI_ERR_PRECONDITION = 7,
    RICCI_ERR_UNSUPPORTED_REGIME = 8,
    RICCI_ERR_IO = 9,
    RICCI_ERR_INTERNAL = 10
} ricci_status;

typedef struct ricci_graph ricci_graph;

const char* ricci_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* ricci_last_error_message(void);

void ricci_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* Loads an edge-list file: one edge per line as two whitespace-separated
 * tokens; '#' comment lines and blank lines are ignored. */
ricci_status ricci_graph_load(const char* path, ricci_graph** out);

/* Builds a graph from count edges given as two parallel label arrays. */
ricci_status ricci_graph_from_edges(const char* const* tails, const char* const* heads,
                                    size_t count, ricci_graph** out);

void ricci_graph_free(ricci_graph* g);

ricci_status ricci_graph_node_count(const ricci_graph* g, size_t* out);
ricci_status ricci_graph_edge_count(const ricci_graph* g, size_t* out);

/* ---- exact curvature ----------------------------------------------------
 * Either output pointer may be NULL when that rendering is not needed. */

ricci_status ricci_curvature_edge(const ricci_graph* g, const char* u, const char* v,
                                  char** fraction, char** decimal);
ricci_status ricci_curvature_node(const ricci_graph* g, const char* v, char** fraction,
                                  char** decimal);
ricci_status ricci_curvature_avg(const ricci_graph* g, char** fraction, char** decimal);

/* Closed-form TVD and curvature bounds of an edge, as fractions. */
ricci_status ricci_curvature_bounds(const ricci_graph* g, const char* u, const char* v,
                                    char** tvd, char** lower, char** upper);

/* ---- approximate curvature ---------------------------------------------- */

typedef struct ricci_approx_options {
    const char* eps;   /* rational or decimal literal, e.g. "0.1" or "1/10" */
    const char* delta; /* padding slack for the unequal-degree mode; may be NULL */
    const char* r;     /* black-box radius for node/avg estimators; may be NULL */
    int d;             /* weight-class degree bound (edge modes), default 3 when <= 0 */
    int k;             /* sample count override for node/avg, 0 = derive from r */
    int exact_backend; /* nonzero: use the exact matching backend */
    uint64_t seed;
} ricci_approx_options;

/* mode: "equal-a", "equal-b" or "unequal". The result is a JSON object with
 * the estimate (fraction and decimal), the guarantee radius, the fired case
 * and the query counters. */
ricci_status ricci_approx_edge(const ricci_graph* g, const char* u, const char* v,
                               const char* mode, const ricci_approx_options* options,
                               char** json_out);

ricci_status ricci_approx_node(const ricci_graph* g, const char* v,
                               const ricci_approx_options* options, char** json_out);

ricci_status ricci_approx_avg(const ricci_graph* g, const ricci_approx_options* options,
                              char** json_out);

/* ---- query-count experiments --------------------------------------------
 * family: "single-light", "permutation" or "all-heavy".
 * strategy: "pair-scan" or "weighted-neighbor-scan".
 * The report is CSV: trial,family,correct,pair_q,wneigh_q,seldeg_q followed by
 * '#'-prefixed summary lines. */
ricci_status ricci_experiment_run(const char* family, const char* strategy, int n, int trials,
                                  uint64_t seed, char** csv_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RICCI_RICCI_H */
