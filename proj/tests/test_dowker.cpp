// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hypergh/dowker.hpp"
#include "hypergh/metrics.hpp"
#include "oracles.hpp"

using namespace hypergh;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> distinct_values(const Hypernetwork& h) {
    std::vector<double> v(h.omega().values().begin(), h.omega().values().end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

TEST_CASE("Dowker complexes") {
    const auto h = oracle::figure_h();
    CHECK(dowker_complex(h, 0.8, Axis::Node, 2) == std::vector<Simplex>{{2}});
    CHECK(dowker_complex(h, 0.9, Axis::Node, 2).empty());
    const Hypernetwork pos(Matrix{{1, 2}, {3, 4}, {5, 6}});
    const auto all = dowker_complex(pos, 1, Axis::Node, 2);
    CHECK(all.size() == 7);
    CHECK(dowker_complex(pos, 1, Axis::Edge, 1).size() == 3);
}

TEST_CASE("filtration appearance values") {
    const auto h = oracle::figure_h();
    const auto f = dowker_filtration(h, Axis::Node, 2);
    for (const auto& s : f.simplices) {
        if (s.vertices == Simplex{1, 2}) CHECK(s.appearance == 0.2);
        if (s.vertices.size() == 1) {
            double cap = kNegInf;
            for (std::size_t y = 0; y < 4; ++y) cap = std::max(cap, h(s.vertices[0], y));
            CHECK(s.appearance == cap);
        }
    }
    // membership agrees with the literal complex at every distinct value
    for (double delta : distinct_values(h)) {
        std::vector<Simplex> from_filtration;
        for (const auto& s : f.simplices)
            if (delta <= s.appearance) from_filtration.push_back(s.vertices);
        std::sort(from_filtration.begin(), from_filtration.end());
        CHECK(from_filtration == dowker_complex(h, delta, Axis::Node, 2));
    }
    // faces never appear after their cofaces
    for (const auto& s : f.simplices)
        for (const auto& t : f.simplices)
            if (t.vertices.size() < s.vertices.size() &&
                std::includes(s.vertices.begin(), s.vertices.end(), t.vertices.begin(), t.vertices.end()))
                CHECK(t.appearance >= s.appearance);
}

TEST_CASE("persistence basics") {
    const Hypernetwork one(Matrix{{0.7}});
    auto b = persistence(dowker_filtration(one, Axis::Node, 1), 0);
    CHECK(b.degree(0) == std::vector<Bar>{{0.7}});

    // two vertices at 0.9 and 0.5, joined at 0.5
    const Hypernetwork two(Matrix{{0.9, 0.5}, {0, 0.5}});
    b = persistence(dowker_filtration(two, Axis::Node, 1), 0);
    CHECK(b.degree(0) == std::vector<Bar>{{0.9}, {0.5, 0.5}});

    CHECK_THROWS_AS(persistence(dowker_filtration(two, Axis::Node, 1), 1), Error);
}

TEST_CASE("figure barcodes and the Dowker bound") {
    const auto h = oracle::figure_h();
    const auto hp = oracle::figure_hprime();
    const auto bh = persistence(dowker_filtration(h, Axis::Node, 1), 0).without_zero_length();
    CHECK(bh.degree(0) == std::vector<Bar>{{0.8}, {0.6, 0.4}, {0.6, 0.2}});
    const auto bhp = persistence(dowker_filtration(hp, Axis::Node, 1), 0).without_zero_length();
    CHECK(bhp.degree(0) == std::vector<Bar>{{0.7}, {0.7, 0.3}, {0.7, 0.3}});
    CHECK(std::abs(dowker_bound(h, hp, 0) - 0.10) <= 1e-12);
    CHECK(dowker_bound(h, h, 1) == 0);
}

TEST_CASE("bottleneck distance") {
    Barcode a{{{{1.0}, {0.8, 0.2}}}};
    Barcode empty{{{}}};
    CHECK(bottleneck(a, a, 0) == 0);
    Barcode single{{{{0.8, 0.2}}}};
    CHECK(bottleneck(single, empty, 0) == doctest::Approx(0.3));
    CHECK(bottleneck(a, empty, 0) == std::numeric_limits<double>::infinity());
    Barcode shifted{{{{0.9}, {0.7, 0.2}}}};
    CHECK(bottleneck(a, shifted, 0) == doctest::Approx(0.1));

    // metric axioms on random finite barcodes
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> count(0, 4), val(0, 20);
    auto random_code = [&] {
        Barcode c{{{}}};
        for (int i = count(rng); i > 0; --i) {
            double p = val(rng) / 20.0, q = val(rng) / 20.0;
            c.degrees[0].push_back({std::max(p, q), std::min(p, q)});
        }
        return c;
    };
    for (int i = 0; i < 100; ++i) {
        const auto x = random_code(), y = random_code(), z = random_code();
        CHECK(bottleneck(x, y, 0) == bottleneck(y, x, 0));
        CHECK(bottleneck(x, z, 0) <= bottleneck(x, y, 0) + bottleneck(y, z, 0) + 1e-12);
        CHECK(bottleneck(x, x, 0) == 0);
    }
}

TEST_CASE("degree-0 persistence matches a union-find sweep") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 100; ++i) {
        const auto h = oracle::random_hyper(rng, 4);
        const auto b = persistence(dowker_filtration(h, Axis::Node, 1), 0).without_zero_length();
        CHECK(b.degree(0) == oracle::union_find_ph0(h));
    }
}

TEST_CASE("node and edge barcodes agree and persistence ignores orderings") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 60; ++i) {
        const auto h = oracle::random_hyper(rng, 4);
        const auto node = persistence(dowker_filtration(h, Axis::Node, 2), 1).without_zero_length();
        const auto edge = persistence(dowker_filtration(h, Axis::Edge, 2), 1).without_zero_length();
        CHECK(node.degree(0) == edge.degree(0));
        CHECK(node.degree(1) == edge.degree(1));
        const auto perm = persistence(dowker_filtration(oracle::shuffled(h, rng), Axis::Node, 2), 1);
        CHECK(perm.without_zero_length().degree(0) == node.degree(0));
        CHECK(perm.without_zero_length().degree(1) == node.degree(1));
    }
}

// Interleaving maps built from a pair of map pairs shift the filtration by
// the full distortion, which is twice d_H.
TEST_CASE("Dowker stability") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 60; ++i) {
        const auto a = oracle::random_hyper(rng);
        const auto b = oracle::random_hyper(rng);
        CHECK(dowker_bound(a, b, 1) <= 2 * exact_dh(a, b).value + 1e-12);
    }
}

TEST_CASE("single-entry pair attains twice d_H") {
    const Hypernetwork a(Matrix{{1.0}});
    const Hypernetwork b(Matrix{{0.0}});
    CHECK(exact_dh(a, b).value == 0.5);
    CHECK(dowker_bound(a, b, 0) == 1.0);
}
