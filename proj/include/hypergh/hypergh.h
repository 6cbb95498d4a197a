/* Copyright (C) 2026 The hypergh Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the hypergh library. Objects are opaque handles; every call
 * returns an hg_status and reports its outputs through pointer arguments.
 * Strings returned by the library are freed with hg_string_free. On failure
 * hg_last_error() describes the most recent error on the calling thread.
 */
#ifndef HYPERGH_HYPERGH_H
#define HYPERGH_HYPERGH_H

#include <stddef.h>
#include <stdint.h>

#if defined(HYPERGH_BUILDING)
#define HG_API __attribute__((visibility("default")))
#else
#define HG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hg_status {
    HG_OK = 0,
    HG_INVALID_ARGUMENT = 1,
    HG_EMPTY_AXIS = 2,
    HG_NON_FINITE_WEIGHT = 3,
    HG_DUPLICATE_IDENTIFIER = 4,
    HG_INDEX_OUT_OF_RANGE = 5,
    HG_BUDGET_EXCEEDED = 6,
    HG_CAP_EXCEEDED = 7,
    HG_NOT_BIPARTITE = 8,
    HG_NOT_A_METRIC = 9,
    HG_MALFORMED_CHAIN = 10,
    HG_EMPTY_SET = 11,
    HG_PARSE_ERROR = 12,
    HG_VALIDATION_ERROR = 13,
    HG_IO_ERROR = 14,
    HG_INTERNAL_ERROR = 15
} hg_status;

typedef struct hg_hypernetwork hg_hypernetwork;
typedef struct hg_network hg_network;

typedef enum hg_graphification {
    HG_GRAPH_CLIQUE = 0,
    HG_GRAPH_LINE = 1,
    HG_GRAPH_NODE_AFFINITY = 2,
    HG_GRAPH_EDGE_AFFINITY = 3,
    HG_GRAPH_BIPARTITE = 4
} hg_graphification;

typedef enum hg_axis { HG_AXIS_NODE = 0, HG_AXIS_EDGE = 1 } hg_axis;

HG_API const char* hg_status_string(hg_status status);
/* Message of the last failed call on this thread; empty when none. */
HG_API const char* hg_last_error(void);
HG_API const char* hg_version(void);
HG_API void hg_string_free(char* s);

/* ---- construction ---------------------------------------------------- */

/* omega is row-major rows x cols. Identifier arrays may be NULL for defaults. */
HG_API hg_status hg_hypernetwork_create(size_t rows, size_t cols, const double* omega,
                                        const char* const* nodes, const char* const* edges,
                                        hg_hypernetwork** out);
HG_API hg_status hg_network_create(size_t size, const double* omega, const char* const* nodes,
                                   hg_network** out);
HG_API void hg_hypernetwork_free(hg_hypernetwork* h);
HG_API void hg_network_free(hg_network* n);

/* Parses a JSON document; networks (`"network": true`) load as (X, X, omega). */
HG_API hg_status hg_hypernetwork_from_json(const char* text, hg_hypernetwork** out);
HG_API hg_status hg_network_from_json(const char* text, hg_network** out);
/* Reads .json or dense .csv files. */
HG_API hg_status hg_hypernetwork_load(const char* path, hg_hypernetwork** out);
HG_API hg_status hg_network_load(const char* path, hg_network** out);

HG_API hg_status hg_hypernetwork_to_json(const hg_hypernetwork* h, char** out);
HG_API hg_status hg_network_to_json(const hg_network* n, char** out);
HG_API hg_status hg_hypernetwork_shape(const hg_hypernetwork* h, size_t* nodes, size_t* edges);
HG_API hg_status hg_hypernetwork_weight(const hg_hypernetwork* h, size_t x, size_t y, double* out);
HG_API hg_status hg_network_as_hypernetwork(const hg_network* n, hg_hypernetwork** out);

/* ---- distances ------------------------------------------------------- */

/* budget <= 0 uses the default (or HYPERGH_BUDGET). witness_json may be NULL. */
HG_API hg_status hg_exact_dh(const hg_hypernetwork* a, const hg_hypernetwork* b, double budget,
                             double* value, char** witness_json);
HG_API hg_status hg_exact_dn(const hg_network* a, const hg_network* b, double budget,
                             double* value, char** witness_json);
HG_API hg_status hg_upper_bound_dh(const hg_hypernetwork* a, const hg_hypernetwork* b,
                                   unsigned restarts, uint64_t seed, double* value,
                                   char** witness_json);
HG_API hg_status hg_is_weakly_isomorphic(const hg_hypernetwork* a, const hg_hypernetwork* b,
                                         double budget, int* holds);
HG_API hg_status hg_is_strongly_isomorphic(const hg_hypernetwork* a, const hg_hypernetwork* b,
                                           int* holds);

/* ---- graphification -------------------------------------------------- */

/* Result as a network JSON document. */
HG_API hg_status hg_graphify(const hg_hypernetwork* h, hg_graphification kind, char** out);
HG_API hg_status hg_graphify_network(const hg_hypernetwork* h, hg_graphification kind,
                                     hg_network** out);
HG_API hg_status hg_slhc_ultrametric(const hg_network* n, hg_network** out);
HG_API hg_status hg_dendrogram_json(const hg_network* affinity, char** out);
HG_API hg_status hg_dendrogram_svg(const hg_network* affinity, char** out);

/* ---- invariants and bounds ------------------------------------------- */

HG_API hg_status hg_invariants_json(const hg_hypernetwork* h, char** out);
HG_API hg_status hg_lower_bounds_json(const hg_hypernetwork* a, const hg_hypernetwork* b,
                                      char** out);
HG_API hg_status hg_lower_bound(const hg_hypernetwork* a, const hg_hypernetwork* b, double* best);

/* ---- Dowker persistence ---------------------------------------------- */

HG_API hg_status hg_dowker_filtration_json(const hg_hypernetwork* h, hg_axis axis, size_t max_dim,
                                           char** out);
/* Degrees 0..k_max; essential bars have "death": null. */
HG_API hg_status hg_dowker_barcode_json(const hg_hypernetwork* h, hg_axis axis, size_t k_max,
                                        char** out);
HG_API hg_status hg_dowker_barcode_svg(const hg_hypernetwork* h, hg_axis axis, size_t k_max,
                                       char** out);
/* Infinite when essential counts differ. */
HG_API hg_status hg_dowker_bottleneck(const hg_hypernetwork* a, const hg_hypernetwork* b,
                                      hg_axis axis, size_t k, double* out);
HG_API hg_status hg_dowker_bound(const hg_hypernetwork* a, const hg_hypernetwork* b, size_t k_max,
                                 double* out);

/* ---- Hausdorff maps and NNCC ----------------------------------------- */

HG_API hg_status hg_hausdorff_hyper(const hg_hypernetwork* h, size_t cap, hg_hypernetwork** out);
HG_API hg_status hg_hausdorff_network(const hg_network* n, size_t cap, hg_network** out);
HG_API hg_status hg_nncc_check(const hg_hypernetwork* h, double tol, int* holds, char** verdict_json);

#ifdef __cplusplus
}
#endif

#endif /* HYPERGH_HYPERGH_H */
