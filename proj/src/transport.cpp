// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include "hypergh/transport.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypergh {

using boost::multiprecision::cpp_rational;

std::vector<std::uint32_t> ordered_subsets(std::size_t n) {
    if (n >= 32) throw Error(ErrorCode::CapExceeded, "subset enumeration needs fewer than 32 elements");
    std::vector<std::uint32_t> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) out.push_back(m);
    auto members = [](std::uint32_t m) {
        std::vector<int> v;
        for (int i = 0; m; ++i, m >>= 1)
            if (m & 1u) v.push_back(i);
        return v;
    };
    std::sort(out.begin(), out.end(), [&](std::uint32_t a, std::uint32_t b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        if (ca != cb) return ca < cb;
        return members(a) < members(b);
    });
    return out;
}

std::string subset_label(std::uint32_t mask, const std::vector<std::string>& ids) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        if (!first) s += ',';
        s += ids[i];
        first = false;
    }
    return s + "}";
}

double hausdorff_kernel(const Matrix& omega, std::uint32_t rows, std::uint32_t cols) {
    const double inf = std::numeric_limits<double>::infinity();
    double forward = -inf, backward = -inf;
    for (std::size_t i = 0; i < omega.rows(); ++i) {
        if (!(rows >> i & 1u)) continue;
        double best = inf;
        for (std::size_t j = 0; j < omega.cols(); ++j)
            if (cols >> j & 1u) best = std::min(best, omega(i, j));
        forward = std::max(forward, best);
    }
    for (std::size_t j = 0; j < omega.cols(); ++j) {
        if (!(cols >> j & 1u)) continue;
        double best = inf;
        for (std::size_t i = 0; i < omega.rows(); ++i)
            if (rows >> i & 1u) best = std::min(best, omega(i, j));
        backward = std::max(backward, best);
    }
    return std::max(forward, backward);
}

namespace {

Matrix lift_kernel(const Matrix& omega, const std::vector<std::uint32_t>& rows,
                   const std::vector<std::uint32_t>& cols) {
    Matrix w(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) w(a, b) = hausdorff_kernel(omega, rows[a], cols[b]);
    return w;
}

std::vector<std::string> labels(const std::vector<std::uint32_t>& masks,
                                const std::vector<std::string>& ids) {
    std::vector<std::string> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(subset_label(m, ids));
    return out;
}

}  // namespace

Network hausdorff_network(const Network& n, std::size_t cap) {
    if (n.size() > cap) {
        throw Error(ErrorCode::CapExceeded, "network Hausdorff map limited to " + std::to_string(cap) +
                                                " nodes, got " + std::to_string(n.size()));
    }
    const auto subsets = ordered_subsets(n.size());
    return Network(labels(subsets, n.nodes()), lift_kernel(n.omega(), subsets, subsets));
}

Hypernetwork hausdorff_hyper(const Hypernetwork& h, std::size_t cap) {
    if (h.num_nodes() + h.num_edges() > cap) {
        throw Error(ErrorCode::CapExceeded, "hypernetwork Hausdorff map limited to |X| + |Y| <= " +
                                                std::to_string(cap));
    }
    const auto xs = ordered_subsets(h.num_nodes());
    const auto ys = ordered_subsets(h.num_edges());
    return Hypernetwork(labels(xs, h.nodes()), labels(ys, h.edges()), lift_kernel(h.omega(), xs, ys));
}

FunctionalDistortions lift_map_distortions(const Hypernetwork& h, const Hypernetwork& hp,
                                           const MapQuadruple& q, std::size_t cap) {
    if (!q.is_valid(h.num_nodes(), hp.num_nodes(), h.num_edges(), hp.num_edges())) {
        throw Error(ErrorCode::IndexOutOfRange, "map quadruple does not fit the hypernetworks");
    }
    const Hypernetwork lh = hausdorff_hyper(h, cap);
    const Hypernetwork lhp = hausdorff_hyper(hp, cap);

    auto lift = [](const std::vector<std::size_t>& map, std::size_t from, std::size_t to) {
        const auto src = ordered_subsets(from);
        const auto dst = ordered_subsets(to);
        std::unordered_map<std::uint32_t, std::size_t> index;
        for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
        std::vector<std::size_t> lifted(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            std::uint32_t image = 0;
            for (std::size_t e = 0; e < from; ++e)
                if (src[i] >> e & 1u) image |= std::uint32_t{1} << map[e];
            lifted[i] = index.at(image);
        }
        return lifted;
    };
    MapQuadruple lifted{lift(q.phi, h.num_nodes(), hp.num_nodes()),
                        lift(q.psi, h.num_edges(), hp.num_edges()),
                        lift(q.phi_back, hp.num_nodes(), h.num_nodes()),
                        lift(q.psi_back, hp.num_edges(), h.num_edges())};
    return functional_distortions(lh, lhp, lifted);
}

// ---------------------------------------------------------------------------
// NNCC

namespace {

struct ExactInterval {
    std::size_t node;
    cpp_rational lo;
    cpp_rational hi;
};

// Feasible s in [0, 1] for intermediate node xs, or nothing.
std::optional<ExactInterval> feasible_interval(const std::vector<std::vector<cpp_rational>>& w,
                                               std::size_t x0, std::size_t x1, std::size_t ybar,
                                               std::size_t xs, const cpp_rational& tol) {
    cpp_rational lo = 0, hi = 1;
    for (std::size_t y = 0; y < w[0].size(); ++y) {
        // c - tol <= a + s (b - a)
        const cpp_rational a = w[x0][ybar] - w[x0][y];
        const cpp_rational b = w[x1][ybar] - w[x1][y];
        const cpp_rational c = w[xs][ybar] - w[xs][y];
        const cpp_rational slope = b - a;
        const cpp_rational rhs = c - tol - a;
        if (slope == 0) {
            if (rhs > 0) return std::nullopt;
        } else if (slope > 0) {
            lo = std::max(lo, cpp_rational(rhs / slope));
        } else {
            hi = std::min(hi, cpp_rational(rhs / slope));
        }
        if (lo > hi) return std::nullopt;
    }
    return ExactInterval{xs, lo, hi};
}

}  // namespace

NnccVerdict nncc_check(const Hypernetwork& h, double tol) {
    if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be nonnegative");
    const std::size_t n = h.num_nodes();
    const std::size_t m = h.num_edges();
    std::vector<std::vector<cpp_rational>> w(n, std::vector<cpp_rational>(m));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < m; ++y) w[x][y] = cpp_rational(h(x, y));
    const cpp_rational exact_tol(tol);

    NnccVerdict verdict;
    for (std::size_t x0 = 0; x0 < n; ++x0)
        for (std::size_t x1 = 0; x1 < n; ++x1)
            for (std::size_t ybar = 0; ybar < m; ++ybar) {
                std::vector<ExactInterval> intervals;
                for (std::size_t xs = 0; xs < n; ++xs)
                    if (auto iv = feasible_interval(w, x0, x1, ybar, xs, exact_tol)) intervals.push_back(*iv);
                std::sort(intervals.begin(), intervals.end(),
                          [](const ExactInterval& a, const ExactInterval& b) {
                              if (a.lo != b.lo) return a.lo < b.lo;
                              return a.hi > b.hi;
                          });
                // Greedy sweep: extend the covered prefix [0, reach] as far as possible.
                std::vector<NnccInterval> chain;
                cpp_rational reach = 0;
                bool started = false;
                std::size_t i = 0;
                std::optional<std::pair<cpp_rational, cpp_rational>> gap;
                while (!(started && reach >= 1)) {
                    const ExactInterval* best = nullptr;
                    for (; i < intervals.size() && (started ? intervals[i].lo <= reach : intervals[i].lo <= 0); ++i)
                        if (!best || intervals[i].hi > best->hi) best = &intervals[i];
                    if (!best || (started && best->hi <= reach)) {
                        const cpp_rational next = i < intervals.size() ? intervals[i].lo : cpp_rational(1);
                        gap = {started ? reach : cpp_rational(0), next};
                        break;
                    }
                    chain.push_back({best->node, best->lo.convert_to<double>(), best->hi.convert_to<double>()});
                    reach = best->hi;
                    started = true;
                }
                const NnccTriple triple{x0, x1, ybar};
                if (gap) {
                    verdict.holds = false;
                    verdict.failing = triple;
                    verdict.gap_lo = gap->first.convert_to<double>();
                    verdict.gap_hi = gap->second.convert_to<double>();
                    verdict.covers.clear();
                    return verdict;
                }
                verdict.covers.emplace_back(triple, std::move(chain));
            }
    return verdict;
}

}  // namespace hypergh
