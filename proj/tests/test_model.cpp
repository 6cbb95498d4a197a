// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "hypergh/model.hpp"
#include "oracles.hpp"

using namespace hypergh;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("matrix basics") {
    Matrix m{{1, 2, 3}, {4, 5, 6}};
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == 6);
    CHECK(m.transposed()(2, 1) == 6);
    CHECK(m.transposed().transposed() == m);
    CHECK(Matrix::max_abs_difference(m, Matrix(2, 3, 1.0)) == 5);
    CHECK(code_of([] { Matrix::from_rows({{1, 2}, {3}}); }) == ErrorCode::ValidationError);
    CHECK(code_of([] { Matrix(2, 2, std::vector<double>{1, 2, 3}); }) == ErrorCode::ValidationError);
}

TEST_CASE("hypernetwork validation") {
    CHECK(code_of([] { Hypernetwork({}, {"y"}, Matrix(0, 1)); }) == ErrorCode::EmptyAxis);
    CHECK(code_of([] { Hypernetwork({"a", "a"}, {"y"}, Matrix(2, 1)); }) == ErrorCode::DuplicateIdentifier);
    CHECK(code_of([] {
              Hypernetwork({"a"}, {"y"}, Matrix{{std::numeric_limits<double>::quiet_NaN()}});
          }) == ErrorCode::NonFiniteWeight);
    CHECK(code_of([] { Hypernetwork({"a"}, {"y"}, Matrix{{std::numeric_limits<double>::infinity()}}); }) ==
          ErrorCode::NonFiniteWeight);
    CHECK(code_of([] { Hypernetwork({"a", "b"}, {"y"}, Matrix(1, 1)); }) == ErrorCode::ValidationError);
    CHECK(code_of([] { Network(Matrix(2, 3)); }) == ErrorCode::ValidationError);

    Hypernetwork h(Matrix{{1, 2}});
    CHECK(h.nodes() == std::vector<std::string>{"x1"});
    CHECK(h.edges() == std::vector<std::string>{"y1", "y2"});
    CHECK(h.transposed().num_nodes() == 2);
    CHECK(h.transposed()(1, 0) == 2);
}

TEST_CASE("figure hypernetworks load with the expected shapes") {
    const auto h = oracle::figure_h();
    CHECK(h.num_nodes() == 5);
    CHECK(h.num_edges() == 4);
    CHECK(h(2, 2) == doctest::Approx(0.8));
    CHECK(oracle::figure_hprime().num_edges() == 3);
}

TEST_CASE("correspondence checks") {
    CHECK(is_correspondence({{0, 0}, {1, 0}}, 2, 1));
    CHECK_FALSE(is_correspondence({{0, 0}}, 2, 1));
    CHECK_FALSE(is_correspondence({{0, 3}}, 1, 1));
    auto q = MapQuadruple::identity(2, 3);
    CHECK(q.is_valid(2, 2, 3, 3));
    CHECK_FALSE(q.is_valid(2, 2, 3, 2));
    auto cp = q.to_correspondence();
    CHECK(cp.s == Relation{{0, 0}, {1, 1}});
    CHECK(cp.t.size() == 3);
    CHECK(cp.is_valid(2, 2, 3, 3));

    MapQuadruple collapse{{0, 0}, {0}, {1}, {0}};
    auto c = collapse.to_correspondence();
    CHECK(c.s == Relation{{0, 0}, {1, 0}});
}

TEST_CASE("reduce merges identical rows and columns") {
    Hypernetwork h({"a", "b", "c"}, {"p", "q", "r"}, Matrix{{1, 1, 2}, {1, 1, 2}, {0, 0, 3}});
    auto r = reduce_with_maps(h);
    CHECK(r.reduced.num_nodes() == 2);
    CHECK(r.reduced.num_edges() == 2);
    CHECK(r.reduced.nodes() == std::vector<std::string>{"a", "c"});
    CHECK(r.reduced.edges() == std::vector<std::string>{"p", "r"});
    CHECK(r.node_class == std::vector<std::size_t>{0, 0, 1});
    CHECK(r.edge_representative == std::vector<std::size_t>{0, 2});
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) CHECK(h(x, y) == r.reduced(r.node_class[x], r.edge_class[y]));
    CHECK(reduce(r.reduced) == r.reduced);
}

TEST_CASE("strong isomorphism") {
    const Hypernetwork one(Matrix{{1}});
    const Hypernetwork two(Matrix{{1}, {1}});
    CHECK_FALSE(is_strongly_isomorphic(one, two));
    CHECK(is_strongly_isomorphic(one, one));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto h = oracle::random_hyper(rng, 4);
        CHECK(is_strongly_isomorphic(h, oracle::shuffled(h, rng)));
    }
    CHECK_FALSE(is_strongly_isomorphic(Hypernetwork(Matrix{{1, 0}, {0, 1}}), Hypernetwork(Matrix{{1, 1}, {0, 0}})));
}

TEST_CASE("from_network keeps the kernel") {
    Network n(Matrix{{0, 1}, {2, 0}});
    auto h = from_network(n);
    CHECK(h.nodes() == h.edges());
    CHECK(h.omega() == n.omega());
}
