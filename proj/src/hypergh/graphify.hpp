// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hypergh/metrics.hpp"
#include "hypergh/model.hpp"

namespace hypergh {

/// Network over X ⊔ Y with a fixed left/right partition. Same-side weights are
/// zero and cross weights are symmetric.
class LabeledBipartiteNetwork {
 public:
    LabeledBipartiteNetwork(std::vector<std::string> left, std::vector<std::string> right,
                            Matrix omega);

    const std::vector<std::string>& left() const noexcept { return left_; }
    const std::vector<std::string>& right() const noexcept { return right_; }
    const Matrix& omega() const noexcept { return omega_; }

    Network as_network() const;

 private:
    std::vector<std::string> left_;
    std::vector<std::string> right_;
    Matrix omega_;
};

LabeledBipartiteNetwork bipartite(const Hypernetwork& h);
Hypernetwork unbipartite(const LabeledBipartiteNetwork& b);

/// Half the optimal network distortion over label-preserving correspondences.
DistanceResult labeled_distance(const LabeledBipartiteNetwork& b, const LabeledBipartiteNetwork& bp,
                                const SearchOptions& opts = {});

/// omega_Q(x1, x2) = max_y |min(omega(x1, y), omega(x2, y))|
Network clique_expansion(const Hypernetwork& h);
/// omega_L(y1, y2) = max_x |min(omega(x, y1), omega(x, y2))|
Network line_graph(const Hypernetwork& h);

enum class ChainKind { Node, Edge };

/// Minimum |omega| over the chain's pairs. The chain must alternate: a node
/// chain changes the node on odd steps and the edge on even steps (an edge
/// chain the reverse), and a chain has an even number of pairs.
double chain_energy(const Hypernetwork& h, const std::vector<IndexPair>& chain,
                    ChainKind kind = ChainKind::Node);

/// Max-min closure over the incidence graph X ⊔ Y weighted by |omega|.
Network node_affinity(const Hypernetwork& h);
Network edge_affinity(const Hypernetwork& h);

/// Min-max path closure of a finite (pseudo)metric; throws NotAMetric.
Network slhc_ultrametric(const Network& n);

struct MergeEvent {
    double height = 0.0;
    /// Cluster ids joined at this height; leaves are 0..n-1, merges continue from n.
    std::vector<std::size_t> children;
    std::size_t cluster = 0;
};

struct Dendrogram {
    std::vector<std::string> labels;
    /// Height at which each leaf appears (its diagonal entry).
    std::vector<double> leaf_heights;
    /// Non-increasing heights.
    std::vector<MergeEvent> merges;
    /// Leaves ordered so every cluster is contiguous.
    std::vector<std::size_t> leaf_order;
};

/// Sweeps the distinct matrix values downward; at threshold tau the clusters are
/// components of the graph on {x : a(x,x) >= tau} with edges a(x,x') >= tau.
Dendrogram dendrogram(const Network& affinity);

}  // namespace hypergh
