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

#include "oracles.hpp"
#include "tdc/generators.hpp"
#include "tdc/graph.hpp"
#include "tdc/mad.hpp"
#include "tdc/rng.hpp"

using namespace tdc;

TEST_CASE("mad on known graphs") {
    CHECK(mad_exact(cycle(5)) == Rational(2));
    CHECK(mad_exact(petersen()) == Rational(3));
    CHECK(mad_exact(parse_edge_list("4 3\n0 1\n0 2\n0 3\n")) == Rational(3, 2));  // K1,3
    // trees: 2(n-1)/n
    CHECK(mad_exact(parse_edge_list("2 1\n0 1\n")) == Rational(1));
    CHECK(mad_exact(parse_edge_list("1 0\n")) == Rational(0));
    // K4 plus a pendant: the clique dominates
    Graph g = parse_edge_list("5 7\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n");
    CHECK(mad_exact(g) == Rational(3));
}

TEST_CASE("mad is at least the average degree, equal on regular graphs") {
    CHECK(average_degree(petersen()) == Rational(3));
    Rng rng(3);
    for (int it = 0; it < 40; ++it) {
        Graph g = oracles::random_graph(2 + static_cast<int>(rng.below(10)), 1, 3, rng);
        CHECK(mad_exact(g) >= average_degree(g));
    }
}

TEST_CASE("flow-based mad agrees with subset enumeration") {
    Rng rng(17);
    for (int it = 0; it < 60; ++it) {
        Graph g = oracles::random_graph(2 + static_cast<int>(rng.below(10)), 1, 3, rng);
        CHECK(mad_exact(g) == oracles::mad(g));
    }
    for (int it = 0; it < 20; ++it) {
        Graph g = oracles::random_graph(11, 1, 2, rng);  // denser
        CHECK(mad_exact(g) == oracles::mad(g));
    }
}

TEST_CASE("densest subgraph witness achieves the density") {
    Rng rng(29);
    for (int it = 0; it < 30; ++it) {
        Graph g = oracles::random_graph(3 + static_cast<int>(rng.below(9)), 1, 3, rng);
        auto ws = densest_subgraph(g);
        REQUIRE(!ws.empty());
        Graph h = induced_subgraph(g, ws);
        CHECK(Rational(2 * h.edge_count(), h.vertex_count()) == mad_exact(g));
    }
}

TEST_CASE("disconnected inputs take the maximum over components") {
    // C5 plus K4: mad comes from K4
    Graph g(9);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 5; i < 9; ++i) {
        for (int j = i + 1; j < 9; ++j) g.add_edge(i, j);
    }
    CHECK(mad_exact(g) == Rational(3));
}
