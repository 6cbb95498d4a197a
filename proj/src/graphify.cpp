// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergh/graphify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace hypergh {

// ---------------------------------------------------------------------------
// Bipartite graphification

LabeledBipartiteNetwork::LabeledBipartiteNetwork(std::vector<std::string> left,
                                                 std::vector<std::string> right, Matrix omega)
    : left_(std::move(left)), right_(std::move(right)), omega_(std::move(omega)) {
    const std::size_t n = left_.size();
    const std::size_t total = n + right_.size();
    if (omega_.rows() != total || omega_.cols() != total) {
        throw Error(ErrorCode::ValidationError, "bipartite kernel must be square over left + right");
    }
    std::vector<std::string> all = left_;
    all.insert(all.end(), right_.begin(), right_.end());
    validate(all, all, omega_);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) {
            const bool same_side = (i < n) == (j < n);
            if (same_side && omega_(i, j) != 0.0) {
                throw Error(ErrorCode::NotBipartite, "nonzero same-side weight between '" + all[i] +
                                                         "' and '" + all[j] + "'");
            }
            if (!same_side && omega_(i, j) != omega_(j, i)) {
                throw Error(ErrorCode::NotBipartite,
                            "asymmetric cross weight between '" + all[i] + "' and '" + all[j] + "'");
            }
        }
}

Network LabeledBipartiteNetwork::as_network() const {
    std::vector<std::string> all = left_;
    all.insert(all.end(), right_.begin(), right_.end());
    return Network(std::move(all), omega_);
}

LabeledBipartiteNetwork bipartite(const Hypernetwork& h) {
    const std::size_t n = h.num_nodes();
    const std::size_t m = h.num_edges();
    Matrix w(n + m, n + m, 0.0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            w(x, n + y) = h(x, y);
            w(n + y, x) = h(x, y);
        }
    return LabeledBipartiteNetwork(h.nodes(), h.edges(), std::move(w));
}

Hypernetwork unbipartite(const LabeledBipartiteNetwork& b) {
    const std::size_t n = b.left().size();
    const std::size_t m = b.right().size();
    Matrix w(n, m);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < m; ++y) w(x, y) = b.omega()(x, n + y);
    return Hypernetwork(b.left(), b.right(), std::move(w));
}

DistanceResult labeled_distance(const LabeledBipartiteNetwork& b, const LabeledBipartiteNetwork& bp,
                                const SearchOptions& opts) {
    return exact_dh(unbipartite(b), unbipartite(bp), opts);
}

// ---------------------------------------------------------------------------
// Clique expansion and line graph

Network clique_expansion(const Hypernetwork& h) {
    const std::size_t n = h.num_nodes();
    Matrix w(n, n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            double best = 0.0;
            for (std::size_t y = 0; y < h.num_edges(); ++y)
                best = std::max(best, std::abs(std::min(h(a, y), h(b, y))));
            w(a, b) = best;
        }
    return Network(h.nodes(), std::move(w));
}

Network line_graph(const Hypernetwork& h) { return clique_expansion(h.transposed()); }

// ---------------------------------------------------------------------------
// Chains and affinity

double chain_energy(const Hypernetwork& h, const std::vector<IndexPair>& chain, ChainKind kind) {
    if (chain.size() < 2 || chain.size() % 2 != 0) {
        throw Error(ErrorCode::MalformedChain, "a chain has an even number (>= 2) of pairs");
    }
    for (const auto& [x, y] : chain) {
        if (x >= h.num_nodes() || y >= h.num_edges()) {
            throw Error(ErrorCode::MalformedChain, "chain pair out of range");
        }
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        // node chains step along a shared edge first, edge chains along a shared node
        const bool share_edge = (i % 2 == 0) == (kind == ChainKind::Node);
        const bool ok = share_edge ? chain[i].second == chain[i + 1].second
                                   : chain[i].first == chain[i + 1].first;
        if (!ok) {
            throw Error(ErrorCode::MalformedChain,
                        "pairs " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            (share_edge ? " must share an edge" : " must share a node"));
        }
    }
    double energy = std::numeric_limits<double>::infinity();
    for (const auto& [x, y] : chain) energy = std::min(energy, std::abs(h(x, y)));
    return energy;
}

namespace {

// Widest-path closure on the incidence graph; vertices 0..n-1 are nodes, n..n+m-1 edges.
Matrix incidence_widest_paths(const Hypernetwork& h) {
    const std::size_t n = h.num_nodes();
    const std::size_t m = h.num_edges();
    const std::size_t total = n + m;
    const double none = -std::numeric_limits<double>::infinity();
    Matrix w(total, total, none);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            w(x, n + y) = std::abs(h(x, y));
            w(n + y, x) = std::abs(h(x, y));
        }
    for (std::size_t k = 0; k < total; ++k)
        for (std::size_t i = 0; i < total; ++i) {
            const double ik = w(i, k);
            if (ik == none) continue;
            for (std::size_t j = 0; j < total; ++j) w(i, j) = std::max(w(i, j), std::min(ik, w(k, j)));
        }
    return w;
}

}  // namespace

Network node_affinity(const Hypernetwork& h) {
    const std::size_t n = h.num_nodes();
    const Matrix wide = incidence_widest_paths(h);
    Matrix a(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) a(x, z) = wide(x, z);
        double cap = 0.0;
        for (std::size_t y = 0; y < h.num_edges(); ++y) cap = std::max(cap, std::abs(h(x, y)));
        a(x, x) = cap;
    }
    return Network(h.nodes(), std::move(a));
}

Network edge_affinity(const Hypernetwork& h) { return node_affinity(h.transposed()); }

// ---------------------------------------------------------------------------
// Single linkage

Network slhc_ultrametric(const Network& n) {
    const std::size_t size = n.size();
    double scale = 0.0;
    for (double v : n.omega().values()) scale = std::max(scale, std::abs(v));
    const double slack = 1e-12 * scale;
    for (std::size_t a = 0; a < size; ++a) {
        if (n(a, a) != 0.0) throw Error(ErrorCode::NotAMetric, "nonzero diagonal at " + n.nodes()[a]);
        for (std::size_t b = 0; b < size; ++b) {
            if (n(a, b) < 0.0) throw Error(ErrorCode::NotAMetric, "negative distance");
            if (n(a, b) != n(b, a)) throw Error(ErrorCode::NotAMetric, "asymmetric kernel");
            for (std::size_t c = 0; c < size; ++c)
                if (n(a, c) > n(a, b) + n(b, c) + slack) {
                    throw Error(ErrorCode::NotAMetric, "triangle inequality fails at (" +
                                                           n.nodes()[a] + ", " + n.nodes()[b] +
                                                           ", " + n.nodes()[c] + ")");
                }
        }
    }
    Matrix u = n.omega();
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) u(i, j) = std::min(u(i, j), std::max(u(i, k), u(k, j)));
    return Network(n.nodes(), std::move(u));
}

// ---------------------------------------------------------------------------
// Dendrogram

Dendrogram dendrogram(const Network& a) {
    const std::size_t n = a.size();
    Dendrogram d;
    d.labels = a.nodes();
    d.leaf_heights.resize(n);
    for (std::size_t x = 0; x < n; ++x) d.leaf_heights[x] = a(x, x);

    std::vector<double> thresholds(a.omega().values().begin(), a.omega().values().end());
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<bool> active(n, false);
    std::vector<std::size_t> cluster_of(n);  // per element, current cluster id
    std::size_t next_cluster = n;
    std::vector<std::vector<std::size_t>> children_of;  // merge cluster id - n -> children

    for (double tau : thresholds) {
        for (std::size_t x = 0; x < n; ++x)
            if (!active[x] && a(x, x) >= tau) {
                active[x] = true;
                cluster_of[x] = x;
            }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t z = x + 1; z < n; ++z)
                if (active[x] && active[z] && (a(x, z) >= tau || a(z, x) >= tau))
                    parent[find(x)] = find(z);

        std::map<std::size_t, std::set<std::size_t>> groups;  // root -> previous cluster ids
        for (std::size_t x = 0; x < n; ++x)
            if (active[x]) groups[find(x)].insert(cluster_of[x]);
        for (auto& [root, previous] : groups) {
            if (previous.size() < 2) continue;
            MergeEvent e{tau, {previous.begin(), previous.end()}, next_cluster++};
            children_of.push_back(e.children);
            for (std::size_t x = 0; x < n; ++x)
                if (active[x] && find(x) == root) cluster_of[x] = e.cluster;
            d.merges.push_back(std::move(e));
        }
    }

    // Leaf order from a depth-first walk of the top-level clusters.
    std::set<std::size_t> tops;
    for (std::size_t x = 0; x < n; ++x) tops.insert(active[x] ? cluster_of[x] : x);
    std::function<void(std::size_t)> walk = [&](std::size_t c) {
        if (c < n) {
            d.leaf_order.push_back(c);
            return;
        }
        for (std::size_t child : children_of[c - n]) walk(child);
    };
    std::vector<std::size_t> ordered_tops(tops.begin(), tops.end());
    std::sort(ordered_tops.begin(), ordered_tops.end(), std::greater<>());
    for (std::size_t c : ordered_tops) walk(c);
    return d;
}

}  // namespace hypergh
