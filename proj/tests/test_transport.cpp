// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hypergh/transport.hpp"
#include "oracles.hpp"

using namespace hypergh;

namespace {

/// Calls f on every map quadruple between the two shapes.
template <typename F>
void for_each_quadruple(std::size_t n, std::size_t np, std::size_t m, std::size_t mp, F&& f) {
    auto maps = [](std::size_t from, std::size_t to) {
        std::vector<std::vector<std::size_t>> out;
        std::size_t total = 1;
        for (std::size_t i = 0; i < from; ++i) total *= to;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<std::size_t> m(from);
            std::size_t c = code;
            for (std::size_t i = 0; i < from; ++i, c /= to) m[i] = c % to;
            out.push_back(m);
        }
        return out;
    };
    for (const auto& phi : maps(n, np))
        for (const auto& psi : maps(m, mp))
            for (const auto& phib : maps(np, n))
                for (const auto& psib : maps(mp, m)) f(MapQuadruple{phi, psi, phib, psib});
}

}  // namespace

TEST_CASE("subset ordering") {
    const auto s = ordered_subsets(3);
    CHECK(s == std::vector<std::uint32_t>{0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111});
    CHECK(subset_label(0b101, {"a", "b", "c"}) == "{a,c}");
}

TEST_CASE("network Hausdorff map") {
    CHECK(hausdorff_network(Network(Matrix{{2.5}})).omega() == Matrix{{2.5}});
    std::mt19937_64 rng(79);
    const auto d = oracle::random_metric(rng, 3);
    const auto lifted = hausdorff_network(d);
    const auto subsets = ordered_subsets(3);
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < subsets.size(); ++b)
            CHECK(lifted(a, b) ==
                  oracle::brute_hausdorff(d.omega(), oracle::members(subsets[a]), oracle::members(subsets[b])));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) CHECK(lifted(a, b) == d(a, b));
    CHECK_THROWS_AS(hausdorff_network(Network(Matrix(13, 13, 0.0))), Error);
}

TEST_CASE("hypernetwork Hausdorff map") {
    CHECK(hausdorff_hyper(Hypernetwork(Matrix{{-1}})).omega() == Matrix{{-1}});
    std::mt19937_64 rng(83);
    for (int i = 0; i < 30; ++i) {
        const auto h = oracle::random_hyper(rng, 3);
        const auto lifted = hausdorff_hyper(h);
        const auto xs = ordered_subsets(h.num_nodes());
        const auto ys = ordered_subsets(h.num_edges());
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = 0; b < ys.size(); ++b)
                CHECK(lifted(a, b) ==
                      oracle::brute_hausdorff(h.omega(), oracle::members(xs[a]), oracle::members(ys[b])));
        // singletons come first and reproduce h
        Matrix corner(h.num_nodes(), h.num_edges());
        for (std::size_t x = 0; x < h.num_nodes(); ++x)
            for (std::size_t y = 0; y < h.num_edges(); ++y) corner(x, y) = lifted(x, y);
        CHECK(is_strongly_isomorphic(Hypernetwork(corner), h));
    }
    CHECK_THROWS_AS(hausdorff_hyper(Hypernetwork(Matrix(9, 8, 0.0))), Error);
}

TEST_CASE("lifted distortions contract") {
    const auto h = oracle::figure_h();
    CHECK(lift_map_distortions(h, h, MapQuadruple::identity(5, 4)).max() == 0);
    const Hypernetwork one(Matrix{{1}}), two(Matrix{{1}, {1}});
    CHECK(lift_map_distortions(one, two, {{0}, {0}, {0, 0}, {0}}).max() == 0);

    std::mt19937_64 rng(89);
    for (int i = 0; i < 20; ++i) {
        const auto a = oracle::random_hyper(rng, 2);
        const auto b = oracle::random_hyper(rng, 2);
        for_each_quadruple(a.num_nodes(), b.num_nodes(), a.num_edges(), b.num_edges(), [&](const MapQuadruple& q) {
            const auto lifted = lift_map_distortions(a, b, q);
            const auto base = functional_distortions(a, b, q);
            CHECK(lifted.dis <= base.dis);
            CHECK(lifted.dis_back <= base.dis_back);
            CHECK(lifted.codis_forward <= base.codis_forward);
            CHECK(lifted.codis_backward <= base.codis_backward);
        });
        CHECK(exact_dh(hausdorff_hyper(a), hausdorff_hyper(b)).value <= exact_dh(a, b).value);
    }
}

TEST_CASE("NNCC trivial cases") {
    CHECK(nncc_check(Hypernetwork(Matrix{{1, 5, -2}})).holds);
    CHECK(nncc_check(Hypernetwork(Matrix{{1}, {3}, {0}})).holds);
    const auto v = nncc_check(oracle::figure_h());
    CHECK_FALSE(v.holds);
    REQUIRE(v.failing.has_value());
    CHECK(v.gap_lo < v.gap_hi);
    CHECK(v.gap_lo >= 0);
    CHECK(v.gap_hi <= 1);
    CHECK_THROWS_AS(nncc_check(oracle::figure_h(), -1), Error);
}

TEST_CASE("NNCC covers span the unit interval") {
    const Hypernetwork line(Matrix{{0, 1}, {1, 0}});
    const auto v = nncc_check(line);
    if (v.holds) {
        for (const auto& [triple, chain] : v.covers) {
            REQUIRE_FALSE(chain.empty());
            CHECK(chain.front().lo == 0);
            CHECK(chain.back().hi == 1);
            for (std::size_t i = 1; i < chain.size(); ++i) CHECK(chain[i].lo <= chain[i - 1].hi);
        }
    }
}

TEST_CASE("NNCC agrees with the grid oracle and is monotone in tol") {
    std::mt19937_64 rng(97);
    int holds = 0;
    for (int i = 0; i < 60; ++i) {
        const auto h = Hypernetwork(oracle::random_matrix(rng, 3, 3));
        CHECK(oracle::nncc_agrees(h, 0.0));
        const bool base = nncc_check(h, 0.0).holds;
        holds += base;
        if (base) {
            CHECK(nncc_check(h, 0.1).holds);
            CHECK(nncc_check(h, 1.0).holds);
        }
        CHECK(nncc_check(h, 10.0).holds);
    }
    MESSAGE("instances satisfying NNCC: " << holds << " / 60");
}
