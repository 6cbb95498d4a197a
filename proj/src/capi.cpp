// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergh/hypergh.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hypergh/io.hpp"

struct hg_hypernetwork {
    hypergh::Hypernetwork value;
};

struct hg_network {
    hypergh::Network value;
};

namespace {

thread_local std::string last_error;

hg_status status_of(hypergh::ErrorCode code) {
    using hypergh::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument: return HG_INVALID_ARGUMENT;
        case ErrorCode::EmptyAxis: return HG_EMPTY_AXIS;
        case ErrorCode::NonFiniteWeight: return HG_NON_FINITE_WEIGHT;
        case ErrorCode::DuplicateIdentifier: return HG_DUPLICATE_IDENTIFIER;
        case ErrorCode::IndexOutOfRange: return HG_INDEX_OUT_OF_RANGE;
        case ErrorCode::BudgetExceeded: return HG_BUDGET_EXCEEDED;
        case ErrorCode::CapExceeded: return HG_CAP_EXCEEDED;
        case ErrorCode::NotBipartite: return HG_NOT_BIPARTITE;
        case ErrorCode::NotAMetric: return HG_NOT_A_METRIC;
        case ErrorCode::MalformedChain: return HG_MALFORMED_CHAIN;
        case ErrorCode::EmptySet: return HG_EMPTY_SET;
        case ErrorCode::ParseError: return HG_PARSE_ERROR;
        case ErrorCode::ValidationError: return HG_VALIDATION_ERROR;
        case ErrorCode::IoError: return HG_IO_ERROR;
    }
    return HG_INTERNAL_ERROR;
}

template <typename F>
hg_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return HG_OK;
    } catch (const hypergh::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return HG_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HG_INTERNAL_ERROR;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw hypergh::Error(hypergh::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const hypergh::json& doc) {
    if (out) *out = copy_string(doc.dump());
}

hypergh::SearchOptions options(double budget) {
    auto opts = hypergh::SearchOptions::from_environment();
    if (budget > 0) opts.budget = budget;
    return opts;
}

std::vector<std::string> ids(const char* const* names, std::size_t count, char prefix) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(names ? std::string(names[i]) : prefix + std::to_string(i + 1));
    return out;
}

hypergh::Axis axis_of(hg_axis a) {
    require(a == HG_AXIS_NODE || a == HG_AXIS_EDGE, "unknown axis");
    return a == HG_AXIS_NODE ? hypergh::Axis::Node : hypergh::Axis::Edge;
}

hypergh::Network graph_of(const hypergh::Hypernetwork& h, hg_graphification kind) {
    switch (kind) {
        case HG_GRAPH_CLIQUE: return hypergh::clique_expansion(h);
        case HG_GRAPH_LINE: return hypergh::line_graph(h);
        case HG_GRAPH_NODE_AFFINITY: return hypergh::node_affinity(h);
        case HG_GRAPH_EDGE_AFFINITY: return hypergh::edge_affinity(h);
        case HG_GRAPH_BIPARTITE: return hypergh::bipartite(h).as_network();
    }
    throw hypergh::Error(hypergh::ErrorCode::InvalidArgument, "unknown graphification");
}

}  // namespace

extern "C" {

const char* hg_status_string(hg_status status) {
    switch (status) {
        case HG_OK: return "ok";
        case HG_INVALID_ARGUMENT: return "invalid argument";
        case HG_EMPTY_AXIS: return "empty axis";
        case HG_NON_FINITE_WEIGHT: return "non-finite weight";
        case HG_DUPLICATE_IDENTIFIER: return "duplicate identifier";
        case HG_INDEX_OUT_OF_RANGE: return "index out of range";
        case HG_BUDGET_EXCEEDED: return "budget exceeded";
        case HG_CAP_EXCEEDED: return "cap exceeded";
        case HG_NOT_BIPARTITE: return "not bipartite";
        case HG_NOT_A_METRIC: return "not a metric";
        case HG_MALFORMED_CHAIN: return "malformed chain";
        case HG_EMPTY_SET: return "empty set";
        case HG_PARSE_ERROR: return "parse error";
        case HG_VALIDATION_ERROR: return "validation error";
        case HG_IO_ERROR: return "i/o error";
        case HG_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

const char* hg_last_error(void) { return last_error.c_str(); }

const char* hg_version(void) { return "0.1.0"; }

void hg_string_free(char* s) { std::free(s); }

hg_status hg_hypernetwork_create(size_t rows, size_t cols, const double* omega,
                                 const char* const* nodes, const char* const* edges,
                                 hg_hypernetwork** out) {
    return guarded([&] {
        require(out && (omega || rows * cols == 0), "null argument");
        std::vector<double> values(omega, omega + rows * cols);
        hypergh::Matrix w(rows, cols, std::move(values));
        *out = new hg_hypernetwork{hypergh::Hypernetwork(ids(nodes, rows, 'x'), ids(edges, cols, 'y'), w)};
    });
}

hg_status hg_network_create(size_t size, const double* omega, const char* const* nodes,
                            hg_network** out) {
    return guarded([&] {
        require(out && (omega || size == 0), "null argument");
        std::vector<double> values(omega, omega + size * size);
        *out = new hg_network{hypergh::Network(ids(nodes, size, 'x'), hypergh::Matrix(size, size, values))};
    });
}

void hg_hypernetwork_free(hg_hypernetwork* h) { delete h; }
void hg_network_free(hg_network* n) { delete n; }

hg_status hg_hypernetwork_from_json(const char* text, hg_hypernetwork** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new hg_hypernetwork{hypergh::as_hypernetwork(hypergh::parse_json(text))};
    });
}

hg_status hg_network_from_json(const char* text, hg_network** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new hg_network{hypergh::as_network(hypergh::parse_json(text))};
    });
}

hg_status hg_hypernetwork_load(const char* path, hg_hypernetwork** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new hg_hypernetwork{hypergh::as_hypernetwork(hypergh::load(path))};
    });
}

hg_status hg_network_load(const char* path, hg_network** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new hg_network{hypergh::as_network(hypergh::load(path))};
    });
}

hg_status hg_hypernetwork_to_json(const hg_hypernetwork* h, char** out) {
    return guarded([&] {
        require(h && out, "null argument");
        emit(out, hypergh::to_json(h->value));
    });
}

hg_status hg_network_to_json(const hg_network* n, char** out) {
    return guarded([&] {
        require(n && out, "null argument");
        emit(out, hypergh::to_json(n->value));
    });
}

hg_status hg_hypernetwork_shape(const hg_hypernetwork* h, size_t* nodes, size_t* edges) {
    return guarded([&] {
        require(h, "null argument");
        if (nodes) *nodes = h->value.num_nodes();
        if (edges) *edges = h->value.num_edges();
    });
}

hg_status hg_hypernetwork_weight(const hg_hypernetwork* h, size_t x, size_t y, double* out) {
    return guarded([&] {
        require(h && out, "null argument");
        if (x >= h->value.num_nodes() || y >= h->value.num_edges()) {
            throw hypergh::Error(hypergh::ErrorCode::IndexOutOfRange, "weight index out of range");
        }
        *out = h->value(x, y);
    });
}

hg_status hg_network_as_hypernetwork(const hg_network* n, hg_hypernetwork** out) {
    return guarded([&] {
        require(n && out, "null argument");
        *out = new hg_hypernetwork{hypergh::from_network(n->value)};
    });
}

hg_status hg_exact_dh(const hg_hypernetwork* a, const hg_hypernetwork* b, double budget,
                      double* value, char** witness_json) {
    return guarded([&] {
        require(a && b && value, "null argument");
        const auto r = hypergh::exact_dh(a->value, b->value, options(budget));
        *value = r.value;
        emit(witness_json, hypergh::to_json(r.witness));
    });
}

hg_status hg_exact_dn(const hg_network* a, const hg_network* b, double budget, double* value,
                      char** witness_json) {
    return guarded([&] {
        require(a && b && value, "null argument");
        const auto r = hypergh::exact_dn(a->value, b->value, options(budget));
        *value = r.value;
        emit(witness_json, hypergh::to_json(r.witness));
    });
}

hg_status hg_upper_bound_dh(const hg_hypernetwork* a, const hg_hypernetwork* b, unsigned restarts,
                            uint64_t seed, double* value, char** witness_json) {
    return guarded([&] {
        require(a && b && value, "null argument");
        const auto r = hypergh::upper_bound_dh(a->value, b->value, restarts, seed);
        *value = r.value;
        emit(witness_json, hypergh::to_json(r.witness));
    });
}

hg_status hg_is_weakly_isomorphic(const hg_hypernetwork* a, const hg_hypernetwork* b,
                                  double budget, int* holds) {
    return guarded([&] {
        require(a && b && holds, "null argument");
        *holds = hypergh::is_weakly_isomorphic(a->value, b->value, options(budget)).holds ? 1 : 0;
    });
}

hg_status hg_is_strongly_isomorphic(const hg_hypernetwork* a, const hg_hypernetwork* b, int* holds) {
    return guarded([&] {
        require(a && b && holds, "null argument");
        *holds = hypergh::is_strongly_isomorphic(a->value, b->value) ? 1 : 0;
    });
}

hg_status hg_graphify(const hg_hypernetwork* h, hg_graphification kind, char** out) {
    return guarded([&] {
        require(h && out, "null argument");
        emit(out, hypergh::to_json(graph_of(h->value, kind)));
    });
}

hg_status hg_graphify_network(const hg_hypernetwork* h, hg_graphification kind, hg_network** out) {
    return guarded([&] {
        require(h && out, "null argument");
        *out = new hg_network{graph_of(h->value, kind)};
    });
}

hg_status hg_slhc_ultrametric(const hg_network* n, hg_network** out) {
    return guarded([&] {
        require(n && out, "null argument");
        *out = new hg_network{hypergh::slhc_ultrametric(n->value)};
    });
}

hg_status hg_dendrogram_json(const hg_network* affinity, char** out) {
    return guarded([&] {
        require(affinity && out, "null argument");
        emit(out, hypergh::to_json(hypergh::dendrogram(affinity->value)));
    });
}

hg_status hg_dendrogram_svg(const hg_network* affinity, char** out) {
    return guarded([&] {
        require(affinity && out, "null argument");
        *out = copy_string(hypergh::dendrogram_svg(hypergh::dendrogram(affinity->value)));
    });
}

hg_status hg_invariants_json(const hg_hypernetwork* h, char** out) {
    return guarded([&] {
        require(h && out, "null argument");
        emit(out, hypergh::to_json(hypergh::summary(h->value)));
    });
}

hg_status hg_lower_bounds_json(const hg_hypernetwork* a, const hg_hypernetwork* b, char** out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        emit(out, hypergh::to_json(hypergh::lower_bounds(a->value, b->value)));
    });
}

hg_status hg_lower_bound(const hg_hypernetwork* a, const hg_hypernetwork* b, double* best) {
    return guarded([&] {
        require(a && b && best, "null argument");
        *best = hypergh::lower_bounds(a->value, b->value).best;
    });
}

hg_status hg_dowker_filtration_json(const hg_hypernetwork* h, hg_axis axis, size_t max_dim, char** out) {
    return guarded([&] {
        require(h && out, "null argument");
        emit(out, hypergh::to_json(hypergh::dowker_filtration(h->value, axis_of(axis), max_dim)));
    });
}

hg_status hg_dowker_barcode_json(const hg_hypernetwork* h, hg_axis axis, size_t k_max, char** out) {
    return guarded([&] {
        require(h && out, "null argument");
        const auto f = hypergh::dowker_filtration(h->value, axis_of(axis), k_max + 1);
        emit(out, hypergh::to_json(hypergh::persistence(f, k_max)));
    });
}

hg_status hg_dowker_barcode_svg(const hg_hypernetwork* h, hg_axis axis, size_t k_max, char** out) {
    return guarded([&] {
        require(h && out, "null argument");
        const auto f = hypergh::dowker_filtration(h->value, axis_of(axis), k_max + 1);
        const auto s = hypergh::summary(h->value);
        *out = copy_string(hypergh::barcode_svg(hypergh::persistence(f, k_max), s.capacity, s.spectrum.front()));
    });
}

hg_status hg_dowker_bottleneck(const hg_hypernetwork* a, const hg_hypernetwork* b, hg_axis axis,
                               size_t k, double* out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        const auto pa = hypergh::persistence(hypergh::dowker_filtration(a->value, axis_of(axis), k + 1), k);
        const auto pb = hypergh::persistence(hypergh::dowker_filtration(b->value, axis_of(axis), k + 1), k);
        *out = hypergh::bottleneck(pa, pb, k);
    });
}

hg_status hg_dowker_bound(const hg_hypernetwork* a, const hg_hypernetwork* b, size_t k_max, double* out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        *out = hypergh::dowker_bound(a->value, b->value, k_max);
    });
}

hg_status hg_hausdorff_hyper(const hg_hypernetwork* h, size_t cap, hg_hypernetwork** out) {
    return guarded([&] {
        require(h && out, "null argument");
        *out = new hg_hypernetwork{hypergh::hausdorff_hyper(h->value, cap ? cap : hypergh::kHyperHausdorffCap)};
    });
}

hg_status hg_hausdorff_network(const hg_network* n, size_t cap, hg_network** out) {
    return guarded([&] {
        require(n && out, "null argument");
        *out = new hg_network{hypergh::hausdorff_network(n->value, cap ? cap : hypergh::kNetworkHausdorffCap)};
    });
}

hg_status hg_nncc_check(const hg_hypernetwork* h, double tol, int* holds, char** verdict_json) {
    return guarded([&] {
        require(h && holds, "null argument");
        const auto v = hypergh::nncc_check(h->value, tol);
        *holds = v.holds ? 1 : 0;
        emit(verdict_json, hypergh::to_json(v));
    });
}

}  // extern "C"
