// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypergh/metrics.hpp"
#include "hypergh/model.hpp"

namespace hypergh {

/// Nonempty subsets of {0..n-1} as bitmasks, ordered by size and then
/// lexicographically by their sorted element lists.
std::vector<std::uint32_t> ordered_subsets(std::size_t n);

/// Identifier "{a,b,...}" built from the member identifiers.
std::string subset_label(std::uint32_t mask, const std::vector<std::string>& ids);

/// max of the two directed sup-inf values of omega restricted to rows A and columns B.
double hausdorff_kernel(const Matrix& omega, std::uint32_t rows, std::uint32_t cols);

inline constexpr std::size_t kNetworkHausdorffCap = 12;
inline constexpr std::size_t kHyperHausdorffCap = 16;

/// Network on the 2^|X| - 1 nonempty subsets; throws CapExceeded above cap nodes.
Network hausdorff_network(const Network& n, std::size_t cap = kNetworkHausdorffCap);

/// Hypernetwork on nonempty subsets of X and of Y; the cap bounds |X| + |Y|.
Hypernetwork hausdorff_hyper(const Hypernetwork& h, std::size_t cap = kHyperHausdorffCap);

/// Lifts each map of q to subsets by taking images and returns the four
/// (co)distortions of the lifted quadruple between the two Hausdorff hypernetworks.
FunctionalDistortions lift_map_distortions(const Hypernetwork& h, const Hypernetwork& hp,
                                           const MapQuadruple& q,
                                           std::size_t cap = kHyperHausdorffCap);

/// Closed interval [lo, hi] of path parameters s served by one intermediate node.
struct NnccInterval {
    std::size_t node = 0;
    double lo = 0.0;
    double hi = 0.0;
};

struct NnccTriple {
    std::size_t x0 = 0;
    std::size_t x1 = 0;
    std::size_t ybar = 0;
};

struct NnccVerdict {
    bool holds = true;
    /// First failing triple in (x0, x1, ybar) order and an open interval of
    /// path parameters that no node serves.
    std::optional<NnccTriple> failing;
    double gap_lo = 0.0;
    double gap_hi = 0.0;
    /// On success: for every triple, a chain of intervals covering [0, 1].
    std::vector<std::pair<NnccTriple, std::vector<NnccInterval>>> covers;
};

/// Decides the non-negative cross curvature condition with paths read as
/// arbitrary selections s -> x(s). Interval endpoints are computed in exact
/// rational arithmetic from the double inputs.
NnccVerdict nncc_check(const Hypernetwork& h, double tol = 0.0);

}  // namespace hypergh
