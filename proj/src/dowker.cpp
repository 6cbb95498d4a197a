// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergh/dowker.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace hypergh {

namespace {

const Hypernetwork oriented(const Hypernetwork& h, Axis axis) {
    return axis == Axis::Node ? h : h.transposed();
}

// Calls visit(subset) for every nonempty subset of `pool` with at most max_size elements.
template <typename Visit>
void for_each_subset(const std::vector<std::size_t>& pool, std::size_t max_size, Visit&& visit) {
    Simplex current;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (!current.empty()) visit(current);
        if (current.size() == max_size) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            current.push_back(pool[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
}

}  // namespace

std::vector<Simplex> dowker_complex(const Hypernetwork& input, double delta, Axis axis,
                                    std::size_t max_dim) {
    const Hypernetwork h = oriented(input, axis);
    std::set<Simplex> simplices;
    for (std::size_t y = 0; y < h.num_edges(); ++y) {
        std::vector<std::size_t> witnessed;
        for (std::size_t x = 0; x < h.num_nodes(); ++x)
            if (h(x, y) >= delta) witnessed.push_back(x);
        for_each_subset(witnessed, max_dim + 1, [&](const Simplex& s) { simplices.insert(s); });
    }
    return {simplices.begin(), simplices.end()};
}

FilteredComplex dowker_filtration(const Hypernetwork& input, Axis axis, std::size_t max_dim) {
    const Hypernetwork h = oriented(input, axis);
    FilteredComplex f{axis, max_dim, {}};
    std::vector<std::size_t> all(h.num_nodes());
    for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
    for_each_subset(all, max_dim + 1, [&](const Simplex& s) {
        double appearance = -std::numeric_limits<double>::infinity();
        for (std::size_t y = 0; y < h.num_edges(); ++y) {
            double weakest = std::numeric_limits<double>::infinity();
            for (std::size_t x : s) weakest = std::min(weakest, h(x, y));
            appearance = std::max(appearance, weakest);
        }
        f.simplices.push_back({s, appearance});
    });
    std::sort(f.simplices.begin(), f.simplices.end(),
              [](const FilteredSimplex& a, const FilteredSimplex& b) {
                  if (a.appearance != b.appearance) return a.appearance > b.appearance;
                  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
                  return a.vertices < b.vertices;
              });
    return f;
}

// ---------------------------------------------------------------------------
// Persistence

const std::vector<Bar>& Barcode::degree(std::size_t k) const {
    static const std::vector<Bar> empty;
    return k < degrees.size() ? degrees[k] : empty;
}

Barcode Barcode::without_zero_length() const {
    Barcode out;
    for (const auto& bars : degrees) {
        auto& kept = out.degrees.emplace_back();
        std::copy_if(bars.begin(), bars.end(), std::back_inserter(kept),
                     [](const Bar& b) { return b.birth != b.death; });
    }
    return out;
}

Barcode persistence(const FilteredComplex& f, std::size_t k_max) {
    if (k_max >= f.max_dim && !(f.max_dim == 0 && k_max == 0)) {
        throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(k_max) +
                                                    " needs a filtration with max_dim > " +
                                                    std::to_string(k_max));
    }
    const std::size_t count = f.simplices.size();
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i) index.emplace(f.simplices[i].vertices, i);

    std::vector<std::vector<std::size_t>> columns(count);
    std::vector<std::ptrdiff_t> pivot_owner(count, -1);
    std::vector<bool> paired(count, false);

    Barcode code;
    code.degrees.resize(k_max + 1);

    for (std::size_t j = 0; j < count; ++j) {
        const Simplex& s = f.simplices[j].vertices;
        std::vector<std::size_t> col;
        if (s.size() > 1) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                col.push_back(index.at(face));
            }
            std::sort(col.begin(), col.end());
        }
        while (!col.empty() && pivot_owner[col.back()] >= 0) {
            const auto& other = columns[static_cast<std::size_t>(pivot_owner[col.back()])];
            std::vector<std::size_t> sum;
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(sum));
            col.swap(sum);
        }
        if (!col.empty()) {
            const std::size_t low = col.back();
            pivot_owner[low] = static_cast<std::ptrdiff_t>(j);
            paired[low] = paired[j] = true;
            const std::size_t k = f.simplices[low].dim();
            if (k <= k_max)
                code.degrees[k].push_back({f.simplices[low].appearance, f.simplices[j].appearance});
        }
        columns[j] = std::move(col);
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (paired[i]) continue;
        const std::size_t k = f.simplices[i].dim();
        if (k <= k_max) code.degrees[k].push_back({f.simplices[i].appearance});
    }
    for (auto& bars : code.degrees)
        std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
            if (a.birth != b.birth) return a.birth > b.birth;
            if (a.essential() != b.essential()) return a.essential();
            return a.death > b.death;
        });
    return code;
}

// ---------------------------------------------------------------------------
// Bottleneck distance

namespace {

double sup_distance(const Bar& a, const Bar& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

bool try_augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
                 std::vector<std::ptrdiff_t>& match_right, std::vector<char>& seen) {
    for (std::size_t v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        if (match_right[v] < 0 ||
            try_augment(static_cast<std::size_t>(match_right[v]), adj, match_right, seen)) {
            match_right[v] = static_cast<std::ptrdiff_t>(u);
            return true;
        }
    }
    return false;
}

// Perfect matching on the diagonal-augmented graph at radius eps.
bool matchable(const std::vector<Bar>& a, const std::vector<Bar>& b, double eps) {
    const std::size_t p = a.size();
    const std::size_t q = b.size();
    // left: a_0..a_{p-1}, diag(b_0)..diag(b_{q-1}); right: b_0..b_{q-1}, diag(a_0)..
    std::vector<std::vector<std::size_t>> adj(p + q);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j)
            if (sup_distance(a[i], b[j]) <= eps) adj[i].push_back(j);
        if (a[i].length() / 2.0 <= eps) adj[i].push_back(q + i);
    }
    for (std::size_t j = 0; j < q; ++j) {
        if (b[j].length() / 2.0 <= eps) adj[p + j].push_back(j);
        for (std::size_t i = 0; i < p; ++i) adj[p + j].push_back(q + i);
    }
    std::vector<std::ptrdiff_t> match_right(p + q, -1);
    for (std::size_t u = 0; u < p + q; ++u) {
        std::vector<char> seen(p + q, 0);
        if (!try_augment(u, adj, match_right, seen)) return false;
    }
    return true;
}

}  // namespace

double bottleneck(const Barcode& first, const Barcode& second, std::size_t k) {
    std::vector<Bar> a, b;
    std::vector<double> ess_a, ess_b;
    for (const Bar& bar : first.degree(k)) {
        if (bar.essential()) ess_a.push_back(bar.birth);
        else if (bar.length() > 0) a.push_back(bar);
    }
    for (const Bar& bar : second.degree(k)) {
        if (bar.essential()) ess_b.push_back(bar.birth);
        else if (bar.length() > 0) b.push_back(bar);
    }
    if (ess_a.size() != ess_b.size()) return std::numeric_limits<double>::infinity();
    std::sort(ess_a.begin(), ess_a.end());
    std::sort(ess_b.begin(), ess_b.end());
    double essential = 0.0;
    for (std::size_t i = 0; i < ess_a.size(); ++i)
        essential = std::max(essential, std::abs(ess_a[i] - ess_b[i]));

    std::vector<double> candidates{0.0};
    for (const Bar& x : a) {
        candidates.push_back(x.length() / 2.0);
        for (const Bar& y : b) candidates.push_back(sup_distance(x, y));
    }
    for (const Bar& y : b) candidates.push_back(y.length() / 2.0);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (matchable(a, b, candidates[mid])) hi = mid;
        else lo = mid + 1;
    }
    return std::max(essential, candidates[hi]);
}

double dowker_bound(const Hypernetwork& h, const Hypernetwork& hp, std::size_t k_max) {
    const Barcode a = persistence(dowker_filtration(h, Axis::Node, k_max + 1), k_max);
    const Barcode b = persistence(dowker_filtration(hp, Axis::Node, k_max + 1), k_max);
    double worst = 0.0;
    for (std::size_t k = 0; k <= k_max; ++k) worst = std::max(worst, bottleneck(a, b, k));
    return worst;
}

}  // namespace hypergh
