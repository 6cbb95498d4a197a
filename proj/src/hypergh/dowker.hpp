// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "hypergh/model.hpp"

namespace hypergh {

enum class Axis { Node, Edge };

using Simplex = std::vector<std::size_t>;

/// Simplices of the Dowker complex at delta: subsets of {x : omega(x, y) >= delta}
/// for some witness y, up to dimension max_dim. Sorted, each simplex sorted.
std::vector<Simplex> dowker_complex(const Hypernetwork& h, double delta, Axis axis,
                                    std::size_t max_dim);

struct FilteredSimplex {
    Simplex vertices;
    /// The simplex belongs to the complex at delta iff delta <= appearance.
    double appearance = 0.0;

    std::size_t dim() const { return vertices.size() - 1; }
};

/// Contravariant filtration: complexes grow as delta decreases.
struct FilteredComplex {
    Axis axis = Axis::Node;
    std::size_t max_dim = 0;
    /// Filtration order: appearance descending, then dimension, then vertex tuple.
    std::vector<FilteredSimplex> simplices;
};

/// Appearance of every simplex up to max_dim: max over witnesses y of min_{x in sigma} omega(x, y).
FilteredComplex dowker_filtration(const Hypernetwork& h, Axis axis, std::size_t max_dim = 2);

struct Bar {
    double birth = 0.0;
    /// -infinity for essential classes.
    double death = -std::numeric_limits<double>::infinity();

    bool essential() const { return death == -std::numeric_limits<double>::infinity(); }
    double length() const { return birth - death; }

    friend bool operator==(const Bar&, const Bar&) = default;
};

/// Bars per homology degree in delta coordinates (birth >= death).
struct Barcode {
    std::vector<std::vector<Bar>> degrees;

    const std::vector<Bar>& degree(std::size_t k) const;
    /// Same barcode without zero-length bars.
    Barcode without_zero_length() const;
};

/// GF(2) boundary-matrix reduction in the order t = -delta; degrees 0..k_max,
/// which must be below the filtration's max_dim.
Barcode persistence(const FilteredComplex& f, std::size_t k_max);

/// Bottleneck distance between degree-k diagrams; essential bars match only
/// essential bars (infinite distance when their counts differ).
double bottleneck(const Barcode& a, const Barcode& b, std::size_t k);

/// Largest degree-0..k_max bottleneck distance between node-axis barcodes; a lower bound on d_H.
double dowker_bound(const Hypernetwork& h, const Hypernetwork& hp, std::size_t k_max = 0);

}  // namespace hypergh
