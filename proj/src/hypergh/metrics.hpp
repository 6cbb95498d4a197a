// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "hypergh/model.hpp"

namespace hypergh {

/// Knobs shared by the exact solvers.
struct SearchOptions {
    /// Upper limit on the estimated number of (node map, node back-map) leaves.
    double budget = 1e8;
    /// Slack added to every threshold comparison. Zero means strict.
    double tolerance = 0.0;

    /// Defaults, with HYPERGH_BUDGET overriding the budget when set to a positive number.
    static SearchOptions from_environment();
};

struct DistanceResult {
    double value = 0.0;
    /// For network distances psi == phi and psi_back == phi_back.
    MapQuadruple witness;
    bool exact = false;
};

/// The four functional (co)distortions of a map quadruple.
struct FunctionalDistortions {
    double dis = 0.0;            // dis(phi, psi)
    double dis_back = 0.0;       // dis(phi_back, psi_back)
    double codis_forward = 0.0;  // codis(phi, psi_back)
    double codis_backward = 0.0; // codis(phi_back, psi)

    double max() const;
};

double distortion_hyper(const Hypernetwork& h, const Hypernetwork& hp, const CorrespondencePair& cp);
double distortion_network(const Network& n, const Network& np, const Relation& r);

FunctionalDistortions functional_distortions(const Hypernetwork& h, const Hypernetwork& hp,
                                             const MapQuadruple& q);

/// log10 of |X'|^|X| * |X|^|X'|, the leaf count of the node-map enumeration.
double log10_map_pairs(std::size_t n, std::size_t np);

/// Finds a map quadruple whose four (co)distortions are all <= t (plus tolerance).
///
/// Node maps are enumerated depth-first in index order with pruning: every
/// chosen node pair narrows the admissible hyperedge partners of each y and
/// y', and a branch dies as soon as one of those sets is empty. The first
/// success is the lexicographically smallest (phi, phi_back), with psi and
/// psi_back taking the smallest admissible partner.
std::optional<MapQuadruple> decide_dh_leq(const Hypernetwork& h, const Hypernetwork& hp, double t,
                                          const SearchOptions& opts = {});

/// Single-relation variant for networks: a pair of maps (phi, phi_back) with
/// network distortion of graph(phi) + graph(phi_back)^T at most t.
std::optional<MapQuadruple> decide_dn_leq(const Network& n, const Network& np, double t,
                                          const SearchOptions& opts = {});

/// Exact hypernetwork distance; throws BudgetExceeded when the search is too large.
DistanceResult exact_dh(const Hypernetwork& h, const Hypernetwork& hp, const SearchOptions& opts = {});

/// Exact network Gromov-Hausdorff distance.
DistanceResult exact_dn(const Network& n, const Network& np, const SearchOptions& opts = {});

/// Alternating local search; an upper bound on exact_dh, deterministic in seed.
DistanceResult upper_bound_dh(const Hypernetwork& h, const Hypernetwork& hp, unsigned restarts = 8,
                              std::uint64_t seed = 0);

struct WeakIsomorphism {
    bool holds = false;
    std::optional<MapQuadruple> witness;
};

WeakIsomorphism is_weakly_isomorphic(const Hypernetwork& h, const Hypernetwork& hp,
                                     const SearchOptions& opts = {});

/// Both hypernetworks pulled back onto the common axes S and T of an optimal correspondence pair.
struct Alignment {
    Hypernetwork lifted;
    Hypernetwork lifted_prime;
    CorrespondencePair correspondence;
    double distance = 0.0;
};

Alignment align(const Hypernetwork& h, const Hypernetwork& hp, const SearchOptions& opts = {});

}  // namespace hypergh
