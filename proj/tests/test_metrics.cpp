// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>

#include "hypergh/metrics.hpp"
#include "oracles.hpp"

using namespace hypergh;

namespace {

const Hypernetwork single(Matrix{{1}});
const Hypernetwork doubled(Matrix{{1}, {1}});
const Network swap_a(Matrix{{1, 0}, {0, 1}});
const Network swap_b(Matrix{{0, 1}, {1, 0}});

}  // namespace

TEST_CASE("distortion of explicit correspondences") {
    CorrespondencePair cp{{{0, 0}, {0, 1}}, {{0, 0}}};
    CHECK(distortion_hyper(single, doubled, cp) == 0.0);

    const auto h = oracle::figure_h();
    const auto hp = oracle::figure_hprime();
    CorrespondencePair full;
    for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t xp = 0; xp < 5; ++xp) full.s.emplace_back(x, xp);
    for (std::size_t y = 0; y < 4; ++y)
        for (std::size_t yp = 0; yp < 3; ++yp) full.t.emplace_back(y, yp);
    CHECK(distortion_hyper(h, hp, full) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(distortion_hyper(h, h, MapQuadruple::identity(5, 4).to_correspondence()) == 0.0);

    CHECK(distortion_network(swap_a, swap_b, {{0, 0}, {1, 1}}) == 1.0);
    CHECK(distortion_network(swap_a, swap_a, {{0, 0}, {1, 1}}) == 0.0);
    CHECK(distortion_network(Network(Matrix{{0.25}}), Network(Matrix{{1}}), {{0, 0}}) == 0.75);
    CHECK_THROWS_AS(distortion_hyper(single, doubled, {{{0, 5}}, {{0, 0}}}), Error);
}

TEST_CASE("functional distortions") {
    const auto h = oracle::figure_h();
    auto d = functional_distortions(h, h, MapQuadruple::identity(5, 4));
    CHECK(d.max() == 0.0);

    MapQuadruple q{{0}, {0}, {0, 0}, {0}};
    d = functional_distortions(single, doubled, q);
    CHECK(d.dis == 0);
    CHECK(d.dis_back == 0);
    CHECK(d.codis_forward == 0);
    CHECK(d.codis_backward == 0);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, 2);
    for (int i = 0; i < 40; ++i) {
        const auto a = oracle::random_hyper(rng);
        const auto b = oracle::random_hyper(rng);
        MapQuadruple r;
        for (std::size_t x = 0; x < a.num_nodes(); ++x) r.phi.push_back(pick(rng) % b.num_nodes());
        for (std::size_t y = 0; y < a.num_edges(); ++y) r.psi.push_back(pick(rng) % b.num_edges());
        for (std::size_t x = 0; x < b.num_nodes(); ++x) r.phi_back.push_back(pick(rng) % a.num_nodes());
        for (std::size_t y = 0; y < b.num_edges(); ++y) r.psi_back.push_back(pick(rng) % a.num_edges());
        const auto fd = functional_distortions(a, b, r);
        CHECK(fd.max() >= 2 * exact_dh(a, b).value);
        CHECK(fd.max() == distortion_hyper(a, b, r.to_correspondence()));
    }
}

TEST_CASE("decision procedure") {
    CHECK(decide_dh_leq(single, doubled, 0).has_value());
    CHECK(decide_dh_leq(from_network(swap_a), from_network(swap_b), 0).has_value());
    CHECK_FALSE(decide_dn_leq(swap_a, swap_b, 0.9).has_value());
    CHECK(decide_dn_leq(swap_a, swap_b, 1.0).has_value());

    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto a = oracle::random_hyper(rng);
        const auto b = oracle::random_hyper(rng);
        const double d = exact_dh(a, b).value;
        for (double t : {2 * d, 2 * d + 0.1, 2 * d + 1.0}) {
            auto q = decide_dh_leq(a, b, t);
            REQUIRE(q.has_value());
            CHECK(q->is_valid(a.num_nodes(), b.num_nodes(), a.num_edges(), b.num_edges()));
            CHECK(functional_distortions(a, b, *q).max() <= t);
        }
    }
}

TEST_CASE("exact distances on the worked examples") {
    CHECK(exact_dh(single, doubled).value == 0.0);
    CHECK(exact_dh(from_network(swap_a), from_network(swap_b)).value == 0.0);
    CHECK(exact_dn(swap_a, swap_b).value == 0.5);
    CHECK(exact_dn(swap_a, swap_a).value == 0.0);

    const auto h = oracle::figure_h();
    const auto r = exact_dh(h, oracle::figure_hprime());
    CHECK(r.exact);
    CHECK(r.value == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(functional_distortions(h, oracle::figure_hprime(), r.witness).max() == doctest::Approx(2 * r.value));
}

TEST_CASE("exact_dh matches exhaustive correspondence enumeration") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        const auto a = oracle::random_hyper(rng);
        const auto b = oracle::random_hyper(rng);
        const auto r = exact_dh(a, b);
        CHECK(r.value == oracle::brute_dh(a, b));
        CHECK(functional_distortions(a, b, r.witness).max() == 2 * r.value);
    }
}

TEST_CASE("exact_dn matches exhaustive relation enumeration") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 60; ++i) {
        const auto a = oracle::random_network(rng);
        const auto b = oracle::random_network(rng);
        const auto r = exact_dn(a, b);
        CHECK(r.value == oracle::brute_dn(a, b));
        CHECK(distortion_network(a, b, r.witness.to_correspondence().s) == 2 * r.value);
        CHECK(exact_dh(from_network(a), from_network(b)).value <= r.value);
    }
}

TEST_CASE("upper bound dominates the exact value and is seed-deterministic") {
    const auto h = oracle::figure_h();
    CHECK(upper_bound_dh(h, h).value == 0.0);
    CHECK(upper_bound_dh(single, doubled).value == 0.0);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        const auto a = oracle::random_hyper(rng);
        const auto b = oracle::random_hyper(rng);
        const auto u = upper_bound_dh(a, b, 4, 99);
        CHECK_FALSE(u.exact);
        CHECK(u.value >= exact_dh(a, b).value);
        CHECK(u.value == functional_distortions(a, b, u.witness).max() / 2);
        CHECK(upper_bound_dh(a, b, 4, 99).witness == u.witness);
    }
}

TEST_CASE("weak isomorphism") {
    const auto h = oracle::figure_h();
    auto w = is_weakly_isomorphic(single, doubled);
    CHECK(w.holds);
    REQUIRE(w.witness.has_value());
    CHECK(functional_distortions(single, doubled, *w.witness).max() == 0.0);
    CHECK(is_weakly_isomorphic(h, reduce(h)).holds);
    CHECK_FALSE(is_weakly_isomorphic(h, oracle::figure_hprime()).holds);
    Hypernetwork dup({"a", "b", "c"}, {"p", "q"}, Matrix{{1, 2}, {1, 2}, {3, 0}});
    CHECK(is_weakly_isomorphic(dup, reduce(dup)).holds);
}

TEST_CASE("alignment pulls both kernels onto common axes") {
    auto al = align(single, doubled);
    CHECK(al.lifted.num_nodes() == 2);
    CHECK(al.lifted.num_edges() == 1);
    CHECK(al.lifted.omega() == Matrix{{1}, {1}});
    CHECK(al.lifted_prime.omega() == Matrix{{1}, {1}});

    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        const auto a = oracle::random_hyper(rng);
        const auto b = oracle::random_hyper(rng);
        auto r = align(a, b);
        CHECK(Matrix::max_abs_difference(r.lifted.omega(), r.lifted_prime.omega()) / 2 == r.distance);
        CHECK(r.distance == exact_dh(a, b).value);
    }
}

TEST_CASE("budget") {
    SearchOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(exact_dh(oracle::figure_h(), oracle::figure_hprime(), tiny), Error);
    try {
        exact_dh(oracle::figure_h(), oracle::figure_hprime(), tiny);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    ::setenv("HYPERGH_BUDGET", "12.5", 1);
    CHECK(SearchOptions::from_environment().budget == 12.5);
    ::unsetenv("HYPERGH_BUDGET");
    CHECK(SearchOptions::from_environment().budget == 1e8);
}
