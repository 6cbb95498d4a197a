// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "hypergh/model.hpp"

namespace hypergh {

/// The eight weak-isomorphism invariants of a finite hypernetwork. Set-valued
/// invariants are sorted and deduplicated.
struct InvariantSummary {
    double capacity = 0.0;
    std::vector<double> node_capacity;  // per node: max_y omega(x, y)
    std::vector<double> edge_capacity;  // per edge: max_x omega(x, y)
    double node_radius = 0.0;
    double edge_radius = 0.0;
    std::vector<double> spectrum;  // every value of omega, zeros included
    std::vector<std::vector<double>> node_spectrum;
    std::vector<std::vector<double>> edge_spectrum;

    /// Image of node_capacity as a set.
    std::vector<double> node_capacity_image() const;
    std::vector<double> edge_capacity_image() const;
    /// Nonzero values of omega: the spectrum of omega read as a weighted incidence.
    std::vector<double> support_spectrum() const;
};

InvariantSummary summary(const Hypernetwork& h);

/// Hausdorff distance between finite sets of reals; throws EmptySet.
double hausdorff_reals(std::span<const double> a, std::span<const double> b);

/// F_n(x, x'): min over edge correspondences T of max_T |omega(x,y) - omega'(x',y')|,
/// in closed form as the larger of the two directed best-partner gaps.
double local_distortion_node(const Hypernetwork& h, const Hypernetwork& hp, std::size_t x,
                             std::size_t xp);
/// F_e(y, y'), the edge mirror.
double local_distortion_edge(const Hypernetwork& h, const Hypernetwork& hp, std::size_t y,
                             std::size_t yp);

/// min over correspondences R of max_R cost(i, j), for a dense cost matrix.
double bottleneck_correspondence(const Matrix& cost);

/// Lower bounds on d_H. Every entry already includes the factor 1/2.
struct BoundReport {
    double local_node = 0.0;                 // (1/2) min_S max_S F_n
    double local_edge = 0.0;
    double spectrum_hausdorff_node = 0.0;    // L_n
    double spectrum_hausdorff_edge = 0.0;    // L_e
    double capacity_fn_corr_node = 0.0;      // (1/2) min_S max_S |Cap^n(x) - Cap^n(x')|
    double capacity_fn_corr_edge = 0.0;
    double capacity_fn_hausdorff_node = 0.0; // (1/2) d_Haus(Cap^n(X), Cap^n(X'))
    double capacity_fn_hausdorff_edge = 0.0;
    double capacity_radius_node = 0.0;       // (1/2) max(|Cap - Cap'|, |Rad^n - Rad^n'|)
    double capacity_radius_edge = 0.0;
    double global_spectrum = 0.0;            // (1/2) d_Haus(Spec, Spec')
    double capacity_diff = 0.0;              // (1/2) |Cap - Cap'|

    /// Best ungraphified bound computed on clique / line / affinity images
    /// embedded back as hypernetworks.
    double graphified_clique = 0.0;
    double graphified_line = 0.0;
    double graphified_node_affinity = 0.0;
    double graphified_edge_affinity = 0.0;

    double best = 0.0;

    /// Largest of the twelve ungraphified bounds.
    double best_direct() const;
};

/// Computes every bound. With include_graphified = false the graphified entries stay zero.
BoundReport lower_bounds(const Hypernetwork& h, const Hypernetwork& hp, bool include_graphified = true);

}  // namespace hypergh
