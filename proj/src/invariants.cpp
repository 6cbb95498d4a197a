// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergh/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypergh/graphify.hpp"

namespace hypergh {

namespace {

std::vector<double> as_set(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Largest distance from a point of `from` to its nearest point in `to`; both sorted.
double directed_gap(std::span<const double> from, std::span<const double> to) {
    double worst = 0.0;
    std::size_t j = 0;
    for (double v : from) {
        while (j + 1 < to.size() && to[j + 1] <= v) ++j;
        double nearest = std::abs(v - to[j]);
        if (j + 1 < to.size()) nearest = std::min(nearest, std::abs(to[j + 1] - v));
        worst = std::max(worst, nearest);
    }
    return worst;
}

}  // namespace

std::vector<double> InvariantSummary::node_capacity_image() const { return as_set(node_capacity); }
std::vector<double> InvariantSummary::edge_capacity_image() const { return as_set(edge_capacity); }

std::vector<double> InvariantSummary::support_spectrum() const {
    std::vector<double> out;
    std::copy_if(spectrum.begin(), spectrum.end(), std::back_inserter(out),
                 [](double v) { return v != 0.0; });
    return out;
}

InvariantSummary summary(const Hypernetwork& h) {
    const std::size_t n = h.num_nodes();
    const std::size_t m = h.num_edges();
    InvariantSummary s;
    s.node_capacity.assign(n, -std::numeric_limits<double>::infinity());
    s.edge_capacity.assign(m, -std::numeric_limits<double>::infinity());
    s.node_spectrum.resize(n);
    s.edge_spectrum.resize(m);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const double w = h(x, y);
            s.node_capacity[x] = std::max(s.node_capacity[x], w);
            s.edge_capacity[y] = std::max(s.edge_capacity[y], w);
            s.node_spectrum[x].push_back(w);
            s.edge_spectrum[y].push_back(w);
        }
    for (auto& v : s.node_spectrum) v = as_set(std::move(v));
    for (auto& v : s.edge_spectrum) v = as_set(std::move(v));
    s.spectrum = as_set({h.omega().values().begin(), h.omega().values().end()});
    s.capacity = s.spectrum.back();
    s.node_radius = *std::min_element(s.node_capacity.begin(), s.node_capacity.end());
    s.edge_radius = *std::min_element(s.edge_capacity.begin(), s.edge_capacity.end());
    return s;
}

double hausdorff_reals(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "Hausdorff distance of an empty set");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return std::max(directed_gap(sa, sb), directed_gap(sb, sa));
}

double bottleneck_correspondence(const Matrix& cost) {
    double worst = 0.0;
    for (std::size_t i = 0; i < cost.rows(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < cost.cols(); ++j) best = std::min(best, cost(i, j));
        worst = std::max(worst, best);
    }
    for (std::size_t j = 0; j < cost.cols(); ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cost.rows(); ++i) best = std::min(best, cost(i, j));
        worst = std::max(worst, best);
    }
    return worst;
}

double local_distortion_node(const Hypernetwork& h, const Hypernetwork& hp, std::size_t x,
                             std::size_t xp) {
    if (x >= h.num_nodes() || xp >= hp.num_nodes()) {
        throw Error(ErrorCode::IndexOutOfRange, "node index out of range");
    }
    Matrix cost(h.num_edges(), hp.num_edges());
    for (std::size_t y = 0; y < h.num_edges(); ++y)
        for (std::size_t yp = 0; yp < hp.num_edges(); ++yp) cost(y, yp) = std::abs(h(x, y) - hp(xp, yp));
    return bottleneck_correspondence(cost);
}

double local_distortion_edge(const Hypernetwork& h, const Hypernetwork& hp, std::size_t y,
                             std::size_t yp) {
    if (y >= h.num_edges() || yp >= hp.num_edges()) {
        throw Error(ErrorCode::IndexOutOfRange, "edge index out of range");
    }
    return local_distortion_node(h.transposed(), hp.transposed(), y, yp);
}

double BoundReport::best_direct() const {
    return std::max({local_node, local_edge, spectrum_hausdorff_node, spectrum_hausdorff_edge,
                     capacity_fn_corr_node, capacity_fn_corr_edge, capacity_fn_hausdorff_node,
                     capacity_fn_hausdorff_edge, capacity_radius_node, capacity_radius_edge,
                     global_spectrum, capacity_diff});
}

namespace {

struct SideBounds {
    double local = 0.0;
    double spectrum_hausdorff = 0.0;
    double capacity_corr = 0.0;
    double capacity_hausdorff = 0.0;
    double capacity_radius = 0.0;
};

// Node-side bounds; the edge side is the same computation on the transposes.
SideBounds node_side(const Hypernetwork& h, const Hypernetwork& hp, const InvariantSummary& s,
                     const InvariantSummary& sp) {
    const std::size_t n = h.num_nodes();
    const std::size_t np = hp.num_nodes();
    Matrix local(n, np), spec(n, np), cap(n, np);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t xp = 0; xp < np; ++xp) {
            local(x, xp) = local_distortion_node(h, hp, x, xp);
            spec(x, xp) = hausdorff_reals(s.node_spectrum[x], sp.node_spectrum[xp]);
            cap(x, xp) = std::abs(s.node_capacity[x] - sp.node_capacity[xp]);
        }
    SideBounds b;
    b.local = 0.5 * bottleneck_correspondence(local);
    b.spectrum_hausdorff = 0.5 * bottleneck_correspondence(spec);
    b.capacity_corr = 0.5 * bottleneck_correspondence(cap);
    b.capacity_hausdorff = 0.5 * hausdorff_reals(s.node_capacity, sp.node_capacity);
    b.capacity_radius =
        0.5 * std::max(std::abs(s.capacity - sp.capacity), std::abs(s.node_radius - sp.node_radius));
    return b;
}

}  // namespace

BoundReport lower_bounds(const Hypernetwork& h, const Hypernetwork& hp, bool include_graphified) {
    const InvariantSummary s = summary(h);
    const InvariantSummary sp = summary(hp);
    const Hypernetwork ht = h.transposed();
    const Hypernetwork hpt = hp.transposed();
    const SideBounds node = node_side(h, hp, s, sp);
    const SideBounds edge = node_side(ht, hpt, summary(ht), summary(hpt));

    BoundReport r;
    r.local_node = node.local;
    r.local_edge = edge.local;
    r.spectrum_hausdorff_node = node.spectrum_hausdorff;
    r.spectrum_hausdorff_edge = edge.spectrum_hausdorff;
    r.capacity_fn_corr_node = node.capacity_corr;
    r.capacity_fn_corr_edge = edge.capacity_corr;
    r.capacity_fn_hausdorff_node = node.capacity_hausdorff;
    r.capacity_fn_hausdorff_edge = edge.capacity_hausdorff;
    r.capacity_radius_node = node.capacity_radius;
    r.capacity_radius_edge = edge.capacity_radius;
    r.global_spectrum = 0.5 * hausdorff_reals(s.spectrum, sp.spectrum);
    r.capacity_diff = 0.5 * std::abs(s.capacity - sp.capacity);

    if (include_graphified) {
        // d_H(H(N), H(N')) <= d_N(N, N') <= d_H(h, h') for each 1-Lipschitz graphification.
        auto via = [&](Network (*g)(const Hypernetwork&)) {
            return lower_bounds(from_network(g(h)), from_network(g(hp)), false).best_direct();
        };
        r.graphified_clique = via(clique_expansion);
        r.graphified_line = via(line_graph);
        r.graphified_node_affinity = via(node_affinity);
        r.graphified_edge_affinity = via(edge_affinity);
    }
    r.best = std::max({r.best_direct(), r.graphified_clique, r.graphified_line,
                       r.graphified_node_affinity, r.graphified_edge_affinity});
    return r;
}

}  // namespace hypergh
