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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tdc/classify.hpp"
#include "tdc/generators.hpp"
#include "tdc/graph.hpp"
#include "tdc/rng.hpp"

using namespace tdc;
using fixtures::HostBuilder;

namespace {

// A (1,1,1)-vertex whose three far endvertices have the requested degrees
// (3 or 4). Returns (graph, center id).
std::pair<Graph, int> one_one_one(int d1, int d2, int d3) {
    HostBuilder h;
    int center = h.add();
    for (int far_degree : {d1, d2, d3}) {
        int far = far_degree == 4 ? h.anchor4() : h.anchor3();
        h.one_path(center, far);
    }
    return {h.build(), center};
}

}  // namespace

TEST_CASE("2-vertices are light; cycle vertices are degenerate") {
    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    VertexClass mid = classify_vertex(p3, 1);
    CHECK(mid.degree == 2);
    CHECK(mid.light);
    CHECK_FALSE(mid.two_regular);

    VertexClass on_cycle = classify_vertex(cycle(12), 3);
    CHECK(on_cycle.two_regular);
    CHECK_FALSE(on_cycle.light);
}

TEST_CASE("(1,1,1) flavors count 4-valent far ends") {
    auto [small_g, small_c] = one_one_one(3, 3, 3);
    CHECK(classify_vertex(small_g, small_c).flavor == Flavor::small);
    CHECK_FALSE(classify_vertex(small_g, small_c).light);

    auto [med_g, med_c] = one_one_one(3, 3, 4);
    VertexClass med = classify_vertex(med_g, med_c);
    CHECK(med.flavor == Flavor::medium);
    CHECK(med.light);

    auto [large_g, large_c] = one_one_one(4, 4, 3);
    VertexClass large = classify_vertex(large_g, large_c);
    CHECK(large.flavor == Flavor::large);
    CHECK(large.light);

    auto [huge_g, huge_c] = one_one_one(4, 4, 4);
    VertexClass huge = classify_vertex(huge_g, huge_c);
    CHECK(huge.flavor == Flavor::huge);
    CHECK_FALSE(huge.light);
}

TEST_CASE("signatures sort path classes descending") {
    HostBuilder h;
    int u = h.add();
    // one 0-path, one 1-path, one 2-path
    int t = h.anchor3();
    h.edge(u, t);
    h.one_path(u, h.anchor4());
    int far = h.anchor4();
    int m1 = h.grow(u);
    h.edge(m1, h.grow(far));
    Graph g = h.build();
    VertexClass c = classify_vertex(g, u);
    CHECK(c.degree == 3);
    CHECK(c.signature == std::vector<int>{2, 1, 0});
}

TEST_CASE("special (1,1,0)-vertices need a 3-neighbor and a small partner") {
    // u2 shares 2-neighbor u3 with the small (1,1,1)-vertex u4; its direct
    // neighbor t is a 3-vertex, the other 1-path ends in a 3-vertex z.
    HostBuilder h;
    int u2 = h.add();
    int t = h.anchor3();
    h.edge(u2, t);
    int z = h.anchor3();
    h.one_path(u2, z);
    int u4 = h.add();
    int u3 = h.one_path(u2, u4);
    h.one_path(u4, h.anchor3());
    h.one_path(u4, h.anchor3());
    Graph g = h.build();

    CHECK(classify_vertex(g, u4).flavor == Flavor::small);
    VertexClass c2 = classify_vertex(g, u2);
    CHECK(c2.is({1, 1, 0}));
    CHECK(c2.special);
    CHECK(classify_vertex(g, u3).degree == 2);

    // same picture with a 4-valent direct neighbor: not special
    HostBuilder h2;
    int w2 = h2.add();
    int t4 = h2.anchor4();
    h2.edge(w2, t4);
    h2.one_path(w2, h2.anchor3());
    int w4 = h2.add();
    h2.one_path(w2, w4);
    h2.one_path(w4, h2.anchor3());
    h2.one_path(w4, h2.anchor3());
    Graph g2 = h2.build();
    CHECK(classify_vertex(g2, w4).flavor == Flavor::small);
    CHECK_FALSE(classify_vertex(g2, w2).special);
}

namespace {

// Definition of light recomputed from raw degrees and threads, independently
// of the classifier.
bool light_by_definition(const Graph& g, int v) {
    auto pd = enumerate_paths(g);
    for (const auto& comp : pd.two_regular_components) {
        for (int x : comp) {
            if (x == v) return false;  // degenerate
        }
    }
    if (g.degree(v) == 2) return true;
    if (g.degree(v) != 3) return false;
    int one_paths = 0, fours = 0;
    for (const auto& t : pd.threads) {
        for (int side = 0; side < 2; ++side) {
            if (t.endpoints[side] == v && t.k() == 1) {
                ++one_paths;
                if (g.degree(t.endpoints[1 - side]) == 4) ++fours;
            }
        }
    }
    return one_paths == 3 && (fours == 1 || fours == 2);
}

}  // namespace

TEST_CASE("light agrees with the independent recomputation") {
    Rng rng(83);
    for (int it = 0; it < 40; ++it) {
        Graph g = oracles::random_graph(4 + static_cast<int>(rng.below(10)), 1, 3, rng);
        Classification cls = classify_graph(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(cls.of(v).light == light_by_definition(g, v));
        }
    }
    auto [med_g, med_c] = one_one_one(3, 4, 3);
    CHECK(light_by_definition(med_g, med_c));
    CHECK(classify_vertex(med_g, med_c).light);
}
