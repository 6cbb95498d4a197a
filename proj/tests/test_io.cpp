// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hypergh/io.hpp"
#include "oracles.hpp"

using namespace hypergh;

namespace {

ErrorCode code_of(const std::string& text) {
    try {
        parse_json(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("dense and sparse JSON give the same model") {
    const std::string dense = R"({"nodes":["1","2","3","4","5"],"edges":["A","B","C","D"],
        "omega":[[0.2,0.4,0,0],[0.6,0,0.2,0],[0,0,0.8,0],[0,0.2,0.6,0.4],[0,0.6,0,0.4]]})";
    const std::string sparse = R"({"nodes":["1","2","3","4","5"],"edges":["A","B","C","D"],
        "omega":[["1","A",0.2],["1","B",0.4],["2","A",0.6],["2","C",0.2],["3","C",0.8],
                 ["4","B",0.2],["4","C",0.6],["4","D",0.4],
                 {"node":"5","edge":"B","value":0.6},["5","D",0.4]]})";
    const auto a = as_hypernetwork(parse_json(dense));
    const auto b = as_hypernetwork(parse_json(sparse));
    CHECK(a == oracle::figure_h());
    CHECK(a == b);
}

TEST_CASE("networks") {
    const auto m = parse_json(R"({"network":true,"nodes":["a","b"],"omega":[[0,1],[2,0]]})");
    REQUIRE(std::holds_alternative<Network>(m));
    CHECK(as_network(m)(1, 0) == 2);
    CHECK(as_hypernetwork(m).edges() == std::vector<std::string>{"a", "b"});
    CHECK(code_of(R"({"network":true,"nodes":["a","b"],"omega":[[0,1]]})") == ErrorCode::ValidationError);
    CHECK_THROWS_AS(as_network(parse_json(R"({"nodes":["a"],"edges":["p","q"],"omega":[[1,2]]})")), Error);
}

TEST_CASE("malformed inputs") {
    CHECK(code_of("{not json") == ErrorCode::ParseError);
    CHECK(code_of(R"({"nodes":["a"],"edges":["b"],"omega":[[1,2]]})") == ErrorCode::ValidationError);
    CHECK(code_of(R"({"nodes":["a","b"],"edges":["p"],"omega":[[1]]})") == ErrorCode::ValidationError);
    CHECK(code_of(R"({"nodes":["a"],"edges":["p"],"omega":[["a","q",1]]})") == ErrorCode::ValidationError);
    CHECK(code_of(R"({"nodes":["a"],"edges":["p"],"omega":[["a","p",1],["a","p",2]]})") ==
          ErrorCode::ValidationError);
    CHECK(code_of(R"({"nodes":["a","a"],"edges":["p"],"omega":[[1],[2]]})") == ErrorCode::ValidationError);
    CHECK(code_of(R"({"nodes":[],"edges":["p"],"omega":[]})") == ErrorCode::ValidationError);
    CHECK(code_of(R"({"nodes":["a"],"edges":["p"],"omega":[["x"]]})") == ErrorCode::ValidationError);
    CHECK(code_of(R"({"edges":["p"],"omega":[[1]]})") == ErrorCode::ValidationError);
    try {
        parse_json(R"({"nodes":["a"],"edges":["b"],"omega":[[1,2]]})");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("omega[0]") != std::string::npos);
    }
}

TEST_CASE("CSV") {
    const auto h = parse_csv("id,A,B\nx,0.5,1\ny,0,-2\n");
    CHECK(h.nodes() == std::vector<std::string>{"x", "y"});
    CHECK(h.edges() == std::vector<std::string>{"A", "B"});
    CHECK(h(1, 1) == -2);
    CHECK_THROWS_AS(parse_csv("id,A\nx,1,2\n"), Error);
    CHECK_THROWS_AS(parse_csv("id,A\nx,abc\n"), Error);
}

TEST_CASE("save and load round trip bit for bit") {
    const auto dir = std::filesystem::temp_directory_path() / "hypergh_io_test";
    std::filesystem::create_directories(dir);
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 20; ++i) {
        Matrix w(3, 2);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 2; ++c) w(r, c) = u(rng) / 7.0;
        const Hypernetwork h(w);
        const auto path = (dir / "h.json").string();
        save(path, to_json(h));
        CHECK(as_hypernetwork(load(path)) == h);
    }
    const Network n(Matrix{{0.1, 0.2}, {0.3, 1e-300}});
    const auto path = (dir / "n.json").string();
    save(path, to_json(n));
    CHECK(as_network(load(path)) == n);
    CHECK_THROWS_AS(load((dir / "missing.json").string()), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("result encoders") {
    const auto h = oracle::figure_h();
    const auto barcode = persistence(dowker_filtration(h, Axis::Node, 1), 0);
    const auto j = to_json(barcode);
    CHECK(j["degrees"][0][0]["death"].is_null());
    CHECK(to_json(summary(h))["capacity"] == 0.8);
    CHECK(to_json(nncc_check(h)).contains("witness"));
    CHECK(to_json(dendrogram(node_affinity(h)))["merges"].size() == 3);
    CHECK(to_json(exact_dh(h, h))["value"] == 0.0);
}

TEST_CASE("SVG output") {
    const auto h = oracle::figure_h();
    const auto svg = barcode_svg(persistence(dowker_filtration(h, Axis::Node, 1), 0), 0.8, 0.0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    const auto tree = dendrogram_svg(dendrogram(node_affinity(h)));
    CHECK(tree.find("<svg") != std::string::npos);
    CHECK(tree.find(">5<") != std::string::npos);
}
