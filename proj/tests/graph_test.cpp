// Copyright 2026 The tdcolor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tdc/errors.hpp"
#include "tdc/generators.hpp"
#include "tdc/graph.hpp"
#include "tdc/rng.hpp"

using namespace tdc;

TEST_CASE("edge list parsing accepts the canonical format") {
    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK_FALSE(p3.has_edge(0, 2));

    Graph c5 = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(c5.edge_count() == 5);
    CHECK(c5.min_degree() == 2);

    // comments do not count toward m; missing trailing newline is fine
    Graph with_comment = parse_edge_list("# a triangle\n3 3\n0 1\n# middle\n1 2\n0 2");
    CHECK(with_comment.edge_count() == 3);
}

TEST_CASE("edge list parsing rejects malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n0 1\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n2 2\n"),
                         doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n1 3\n"),
                         doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\nhello\n"),
                         doctest::Contains("two integers"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);       // too few
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);  // too many
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("serialization is canonical and round-trips") {
    Graph g(4);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    g.add_edge(0, 1);
    std::string text = to_edge_list(g);
    CHECK(text == "4 3\n0 1\n0 3\n2 3\n");
    CHECK(parse_edge_list(text) == g);
}

TEST_CASE("square of small graphs") {
    // path a-b-c becomes a triangle
    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(square(p3).edge_count() == 3);
    // C5 becomes K5
    CHECK(square(cycle(5)).edge_count() == 10);
    // Petersen has diameter 2: K10
    CHECK(square(petersen()).edge_count() == 45);
}

TEST_CASE("square agrees with the BFS oracle on random graphs") {
    Rng rng(5);
    for (int it = 0; it < 60; ++it) {
        Graph g = oracles::random_graph(3 + static_cast<int>(rng.below(9)), 1, 4, rng);
        Graph sq = square(g);
        CHECK(sq == oracles::square(g));
        for (auto [u, v] : g.edges()) CHECK(sq.has_edge(u, v));  // edges(g) survive
    }
}

TEST_CASE("two-distance neighborhoods") {
    Graph star = parse_edge_list("5 4\n0 1\n0 2\n0 3\n0 4\n");  // K1,4 centered at 0
    CHECK(two_distance_neighbors(star, 0) == std::vector<int>{1, 2, 3, 4});
    CHECK(two_distance_neighbors(star, 1) == std::vector<int>{0, 2, 3, 4});
    Graph c5 = cycle(5);
    CHECK(two_distance_neighbors(c5, 0).size() == 4);
    CHECK_THROWS_AS(two_distance_neighbors(c5, 9), PreconditionError);
}

TEST_CASE("d* is bounded by d(v) * Delta, with equality on uniform trees") {
    Rng rng(7);
    for (int it = 0; it < 40; ++it) {
        Graph t = oracles::random_tree(2 + static_cast<int>(rng.below(12)), rng);
        int delta = t.max_degree();
        for (int v = 0; v < t.vertex_count(); ++v) {
            int dstar = static_cast<int>(two_distance_neighbors(t, v).size());
            CHECK(dstar <= t.degree(v) * std::max(delta, 1));
        }
    }
    // complete binary-ish star of stars: center of K1,3 whose leaves have 2
    // extra leaves each reaches equality d* = 3 * 3
    Graph u(10);
    for (int leaf = 1; leaf <= 3; ++leaf) u.add_edge(0, leaf);
    int next = 4;
    for (int leaf = 1; leaf <= 3; ++leaf) {
        u.add_edge(leaf, next++);
        u.add_edge(leaf, next++);
    }
    CHECK(two_distance_neighbors(u, 0).size() == 9);
}

TEST_CASE("girth matches the oracle") {
    CHECK(girth(cycle(5)) == 5);
    CHECK(girth(parse_edge_list("4 3\n0 1\n1 2\n2 3\n")) == std::nullopt);
    CHECK(girth(petersen()) == 5);
    CHECK(girth(hoffman_singleton()) == 5);
    Rng rng(13);
    for (int it = 0; it < 60; ++it) {
        Graph g = oracles::random_graph(3 + static_cast<int>(rng.below(9)), 1, 3, rng);
        CHECK(girth(g) == oracles::girth(g));
    }
}

TEST_CASE("connected components and induced subgraphs") {
    Graph g = parse_edge_list("6 4\n0 1\n1 2\n3 4\n4 5\n");
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    Graph sub = induced_subgraph(g, comps[1]);
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 2);
}

TEST_CASE("path threads partition the degree-2 vertices") {
    // two claw centers joined through one 2-vertex: a single 1-path, plus the
    // four leaf edges as 0-paths
    Graph h = parse_edge_list("7 6\n0 1\n0 2\n0 3\n3 4\n4 5\n4 6\n");
    auto pd = enumerate_paths(h);
    CHECK(pd.two_regular_components.empty());
    int one_paths = 0, zero_paths = 0;
    for (const auto& t : pd.threads) {
        if (t.k() == 1) {
            ++one_paths;
            CHECK(t.endpoints == std::array<int, 2>{0, 4});
            CHECK(t.internals == std::vector<int>{3});
        }
        if (t.k() == 0) ++zero_paths;
    }
    CHECK(one_paths == 1);
    CHECK(zero_paths == 4);

    // pure cycle components are flagged, not threaded
    auto pd2 = enumerate_paths(cycle(5));
    CHECK(pd2.threads.empty());
    REQUIRE(pd2.two_regular_components.size() == 1);
    CHECK(pd2.two_regular_components[0].size() == 5);

    // a 3-path host: 3+-endvertices joined through three 2-vertices
    Graph host = parse_edge_list("9 8\n0 1\n0 2\n0 3\n3 4\n4 5\n5 6\n6 7\n6 8\n");
    auto pd3 = enumerate_paths(host);
    bool found3 = false;
    for (const auto& t : pd3.threads) {
        if (t.k() == 3) {
            found3 = true;
            CHECK(t.endpoints == std::array<int, 2>{0, 6});
            CHECK(t.internals == std::vector<int>{3, 4, 5});
        }
    }
    CHECK(found3);
}

TEST_CASE("every degree-2 vertex lies in exactly one thread or cycle component") {
    Rng rng(23);
    for (int it = 0; it < 50; ++it) {
        Graph g = oracles::random_graph(4 + static_cast<int>(rng.below(10)), 1, 3, rng);
        auto pd = enumerate_paths(g);
        std::vector<int> owner(g.vertex_count(), 0);
        for (const auto& t : pd.threads) {
            for (int v : t.internals) ++owner[v];
        }
        for (const auto& comp : pd.two_regular_components) {
            for (int v : comp) ++owner[v];
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) == 2) {
                CHECK(owner[v] == 1);
            } else {
                CHECK(owner[v] == 0);
            }
        }
    }
}
