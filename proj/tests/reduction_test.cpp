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
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tdc/classify.hpp"
#include "tdc/errors.hpp"
#include "tdc/generators.hpp"
#include "tdc/graph.hpp"
#include "tdc/mad.hpp"
#include "tdc/reduction.hpp"

using namespace tdc;
using fixtures::HostBuilder;

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Round trip: color the reduced graph, lift, extend across the configuration,
// then verify the whole host at radius 2 with the 6-lists respected on the
// re-colored part.
void check_round_trip(const Graph& g, const ConfigurationMatch& m) {
    Reduction r = reduce(g, m);
    CHECK(r.reduced.vertex_count() == g.vertex_count() - static_cast<int>(m.removal.size()));

    Graph sub = induced_subgraph(g, r.kept);
    Coloring base = greedy_two_distance(sub);
    Coloring c(g.vertex_count(), kUncolored);
    for (std::size_t i = 0; i < r.kept.size(); ++i) c[r.kept[i]] = base[i];

    std::vector<std::vector<int>> lists(g.vertex_count(), {0, 1, 2, 3, 4, 5});
    extend_coloring(g, m, lists, c);

    CHECK(!verify_coloring(g, c, 2));
    for (int v : m.removal) {
        CHECK(c[v] >= 0);
        CHECK(c[v] <= 5);
    }
    for (int v : m.uncolor) {
        CHECK(c[v] >= 0);
        CHECK(c[v] <= 5);
    }
}

// Arms for the 4-vertex figures. Each returns the distance-2 vertex ("far
// light vertex") of the arm it builds.
int arm_two_path(HostBuilder& h, int u) {
    int w = h.anchor4();
    int a = h.grow(u);
    int b = h.grow(a);
    h.edge(b, w);
    return b;
}

int arm_medium(HostBuilder& h, int u) {
    int v = h.add();
    h.one_path(u, v);
    h.one_path(v, h.anchor3());
    h.one_path(v, h.anchor3());
    return v;
}

// The ballast web: ten 4-valent walls on a ring with two 2-vertices per gap,
// plus one-internal tendrils wall i -> wall i+4. Girth 10, mad exactly 5/2,
// and no detector fires anywhere in it.
Graph wall_web() {
    HostBuilder h;
    int wall[10];
    for (int i = 0; i < 10; ++i) wall[i] = h.add();
    for (int i = 0; i < 10; ++i) {
        int a = h.grow(wall[i]);
        int b = h.grow(a);
        h.edge(b, wall[(i + 1) % 10]);
    }
    for (int i = 0; i < 10; ++i) h.one_path(wall[i], wall[(i + 4) % 10]);
    return h.build();
}

}  // namespace

TEST_CASE("a vertex of degree at most one is the first reduction") {
    Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    auto m = find_configuration(g);
    REQUIRE(m.has_value());
    CHECK(m->lemma == Lemma::L8);
    CHECK(m->removal == std::vector<int>{0});
    check_round_trip(g, *m);

    Graph iso(1);
    auto m2 = find_configuration(iso);
    REQUIRE(m2.has_value());
    CHECK(m2->lemma == Lemma::L8);
}

TEST_CASE("three consecutive 2-vertices reduce by removal") {
    HostBuilder h;
    int a = h.anchor3();
    int b = h.anchor3();
    int p = h.grow(a);
    int q = h.grow(p);
    int r = h.grow(q);
    h.edge(r, b);
    Graph g = h.build();
    auto m = find_configuration(g);
    REQUIRE(m.has_value());
    CHECK(m->lemma == Lemma::L9);
    CHECK(as_set(m->removal) == std::set<int>{p, q, r});
    CHECK(m->uncolor.empty());
    CHECK_FALSE(m->gadget.has_value());
    check_round_trip(g, *m);
}

TEST_CASE("a 2-path with a 3-valent endvertex reduces") {
    HostBuilder h;
    int u = h.add();
    h.boost2(u);
    int x = h.anchor4();
    int a = h.grow(u);
    int b = h.grow(a);
    h.edge(b, x);
    Graph g = h.build();
    REQUIRE(g.degree(u) == 3);
    REQUIRE(g.degree(x) == 4);
    auto m = find_configuration(g);
    REQUIRE(m.has_value());
    CHECK(m->lemma == Lemma::L10);
    CHECK(m->anchor == u);
    CHECK(as_set(m->removal) == std::set<int>{a, b});
    check_round_trip(g, *m);
}

TEST_CASE("two (1,1,1)-vertices sharing a 2-neighbor reduce unless both large") {
    HostBuilder h;
    int u = h.add();
    int v = h.add();
    int m1 = h.one_path(u, v);
    int w = h.anchor3();
    int a = h.one_path(u, w);
    int b = h.one_path(u, h.anchor4());
    h.one_path(v, h.anchor4());
    h.one_path(v, h.anchor4());
    Graph g = h.build();
    REQUIRE(classify_vertex(g, u).flavor == Flavor::medium);
    REQUIRE(classify_vertex(g, v).flavor == Flavor::large);

    auto m = find_configuration(g);
    REQUIRE(m.has_value());
    CHECK(m->lemma == Lemma::L11);
    CHECK(m->anchor == u);
    CHECK(as_set(m->removal) == std::set<int>{u, m1, a, b});
    CHECK(m->uncolor == std::vector<int>{v});
    CHECK(m->greedy_first == std::vector<int>{b});
    REQUIRE(m->gadget == GadgetId::a);
    check_round_trip(g, *m);

    // both large: no reduction from this pair, and nothing else matches
    HostBuilder h2;
    int u2 = h2.add();
    int v2 = h2.add();
    h2.one_path(u2, v2);
    for (int i = 0; i < 2; ++i) h2.one_path(u2, h2.anchor4());
    for (int i = 0; i < 2; ++i) h2.one_path(v2, h2.anchor4());
    Graph g2 = h2.build();
    REQUIRE(classify_vertex(g2, u2).flavor == Flavor::large);
    auto none = find_configuration(g2);
    CHECK_FALSE(none.has_value());
}

TEST_CASE("a special (1,1,0)-vertex with two 3-valent far ends reduces") {
    HostBuilder h;
    int u2 = h.add();
    int t = h.anchor3();
    h.edge(u2, t);
    int z = h.anchor3();
    int u1 = h.one_path(u2, z);
    int u4 = h.add();
    int u3 = h.one_path(u2, u4);
    h.one_path(u4, h.anchor3());
    h.one_path(u4, h.anchor3());
    Graph g = h.build();
    REQUIRE(classify_vertex(g, u2).special);

    auto m = find_configuration(g);
    REQUIRE(m.has_value());
    CHECK(m->lemma == Lemma::L12);
    CHECK(m->anchor == u2);
    CHECK(as_set(m->removal) == std::set<int>{u1, u2, u3});
    CHECK(m->uncolor == std::vector<int>{u4});
    REQUIRE(m->gadget == GadgetId::a);
    check_round_trip(g, *m);

    // with a 4-vertex across one 1-path the vertex is no longer reducible
    HostBuilder h2;
    int w2 = h2.add();
    int t2 = h2.anchor3();
    h2.edge(w2, t2);
    h2.one_path(w2, h2.anchor4());
    int w4 = h2.add();
    h2.one_path(w2, w4);
    h2.one_path(w4, h2.anchor3());
    h2.one_path(w4, h2.anchor3());
    Graph g2 = h2.build();
    REQUIRE(classify_vertex(g2, w2).special);
    auto none = find_configuration(g2);
    CHECK_FALSE(none.has_value());
}

TEST_CASE("4-vertex with four paths: two light far vertices force 4-valent others") {
    SUBCASE("both light arms are 2-vertices") {
        HostBuilder h;
        int u = h.add();
        int v1 = arm_two_path(h, u);
        int v2 = arm_two_path(h, u);
        h.one_path(u, h.anchor3());
        h.one_path(u, h.anchor4());
        Graph g = h.build();
        auto m = find_configuration(g);
        REQUIRE(m.has_value());
        CHECK(m->lemma == Lemma::L13);
        CHECK(m->anchor == u);
        REQUIRE(m->gadget == GadgetId::b);
        CHECK(m->removal.size() == 7);
        CHECK(as_set(m->removal).count(v1) == 1);
        CHECK(as_set(m->removal).count(v2) == 1);
        check_round_trip(g, *m);
    }
    SUBCASE("one 2-vertex and one light (1,1,1)") {
        HostBuilder h;
        int u = h.add();
        arm_two_path(h, u);
        int v2 = arm_medium(h, u);
        h.one_path(u, h.anchor3());
        h.one_path(u, h.anchor4());
        Graph g = h.build();
        REQUIRE(classify_vertex(g, v2).flavor == Flavor::medium);
        auto m = find_configuration(g);
        REQUIRE(m.has_value());
        CHECK(m->lemma == Lemma::L13);
        REQUIRE(m->gadget == GadgetId::c);
        CHECK(m->removal.size() == 9);
        check_round_trip(g, *m);
    }
    SUBCASE("two light (1,1,1)-vertices") {
        HostBuilder h;
        int u = h.add();
        arm_medium(h, u);
        arm_medium(h, u);
        h.one_path(u, h.anchor3());
        h.one_path(u, h.anchor4());
        Graph g = h.build();
        auto m = find_configuration(g);
        REQUIRE(m.has_value());
        CHECK(m->lemma == Lemma::L13);
        REQUIRE(m->gadget == GadgetId::d);
        CHECK(m->removal.size() == 11);
        check_round_trip(g, *m);
    }
    SUBCASE("no reduction when the two non-light far vertices are 4-valent") {
        HostBuilder h;
        int u = h.add();
        arm_two_path(h, u);
        arm_two_path(h, u);
        h.one_path(u, h.anchor4());
        h.one_path(u, h.anchor4());
        Graph g = h.build();
        CHECK_FALSE(find_configuration(g).has_value());
    }
}

namespace {

// The L14 fixture: a 4-vertex u with a 3-valent direct neighbor, two light
// arms and a configurable third arm.
struct L14Host {
    Graph g;
    int u;
    int third;  // the prohibited far vertex
};

enum class Third { two_path, special_vertex, medium_111, huge_111 };

L14Host l14_host(bool arm1_medium, bool arm2_medium, Third third_kind) {
    HostBuilder h;
    int u = h.add();
    int t = h.anchor3();
    h.edge(u, t);
    arm1_medium ? arm_medium(h, u) : arm_two_path(h, u);
    arm2_medium ? arm_medium(h, u) : arm_two_path(h, u);
    int third = -1;
    switch (third_kind) {
        case Third::two_path: third = arm_two_path(h, u); break;
        case Third::special_vertex: {
            int s = h.add();
            h.one_path(u, s);
            int ts = h.anchor3();
            h.edge(s, ts);
            int sm = h.add();
            h.one_path(s, sm);
            h.one_path(sm, h.anchor3());
            h.one_path(sm, h.anchor3());
            third = s;
            break;
        }
        case Third::medium_111: {
            int v3 = h.add();
            h.one_path(u, v3);
            h.one_path(v3, h.anchor3());
            h.one_path(v3, h.anchor3());
            third = v3;
            break;
        }
        case Third::huge_111: {
            int v3 = h.add();
            h.one_path(u, v3);
            h.one_path(v3, h.anchor4());
            h.one_path(v3, h.anchor4());
            third = v3;
            break;
        }
    }
    return {h.build(), u, third};
}

}  // namespace

TEST_CASE("4-vertex with a 3-neighbor: prohibited third far vertices reduce") {
    SUBCASE("third is a 2-vertex: plain shapes") {
        auto host = l14_host(false, false, Third::two_path);
        auto m = find_configuration(host.g);
        REQUIRE(m.has_value());
        CHECK(m->lemma == Lemma::L14);
        CHECK(m->anchor == host.u);
        REQUIRE(m->gadget == GadgetId::e);
        CHECK(m->uncolor.empty());
        CHECK(as_set(m->removal).count(host.third) == 1);
        check_round_trip(host.g, *m);
    }
    SUBCASE("third is special: the long-arm shapes") {
        auto host = l14_host(false, false, Third::special_vertex);
        REQUIRE(classify_vertex(host.g, host.third).special);
        auto m = find_configuration(host.g);
        REQUIRE(m.has_value());
        CHECK(m->lemma == Lemma::L14);
        REQUIRE(m->gadget == GadgetId::h);
        CHECK(m->removal.size() == 8);  // the 8-vertex instance vanishes entirely
        check_round_trip(host.g, *m);
    }
    SUBCASE("third special, one forked light arm") {
        auto host = l14_host(false, true, Third::special_vertex);
        auto m = find_configuration(host.g);
        REQUIRE(m.has_value());
        CHECK(m->lemma == Lemma::L14);
        REQUIRE(m->gadget == GadgetId::i);
        check_round_trip(host.g, *m);
    }
    SUBCASE("third special, both light arms forked") {
        auto host = l14_host(true, true, Third::special_vertex);
        auto m = find_configuration(host.g);
        REQUIRE(m.has_value());
        CHECK(m->lemma == Lemma::L14);
        REQUIRE(m->gadget == GadgetId::j);
        CHECK(m->removal.size() == 12);
        check_round_trip(host.g, *m);
    }
    SUBCASE("third is a medium (1,1,1): treated like the special case") {
        auto host = l14_host(false, false, Third::medium_111);
        auto m = find_configuration(host.g);
        REQUIRE(m.has_value());
        CHECK(m->lemma == Lemma::L14);
        REQUIRE(m->gadget == GadgetId::h);
        check_round_trip(host.g, *m);
    }
    SUBCASE("third is huge: removed around it, then uncolored") {
        auto host = l14_host(false, false, Third::huge_111);
        REQUIRE(classify_vertex(host.g, host.third).flavor == Flavor::huge);
        auto m = find_configuration(host.g);
        REQUIRE(m.has_value());
        CHECK(m->lemma == Lemma::L14);
        REQUIRE(m->gadget == GadgetId::e);
        CHECK(m->uncolor == std::vector<int>{host.third});
        CHECK(as_set(m->removal).count(host.third) == 0);
        check_round_trip(host.g, *m);
    }
    SUBCASE("third huge with one forked arm") {
        auto host = l14_host(false, true, Third::huge_111);
        auto m = find_configuration(host.g);
        REQUIRE(m.has_value());
        REQUIRE(m->gadget == GadgetId::f);
        CHECK(m->uncolor == std::vector<int>{host.third});
        check_round_trip(host.g, *m);
    }
    SUBCASE("third huge with both arms forked") {
        auto host = l14_host(true, true, Third::huge_111);
        auto m = find_configuration(host.g);
        REQUIRE(m.has_value());
        REQUIRE(m->gadget == GadgetId::g);
        check_round_trip(host.g, *m);
    }
    SUBCASE("an allowed third far vertex leaves nothing to reduce") {
        // third arm leads to a 4-vertex: every detector stays silent
        HostBuilder h;
        int u = h.add();
        int t = h.anchor3();
        h.edge(u, t);
        arm_two_path(h, u);
        arm_two_path(h, u);
        h.one_path(u, h.anchor4());
        Graph g = h.build();
        CHECK_FALSE(find_configuration(g).has_value());
    }
}

TEST_CASE("the tight wall web contains no reducible configuration") {
    Graph web = wall_web();
    CHECK(web.min_degree() == 2);
    CHECK(web.max_degree() == 4);
    CHECK(girth(web) == 10);
    CHECK(mad_exact(web) == Rational(5, 2));  // exactly the threshold
    CHECK_FALSE(find_configuration(web).has_value());
}

TEST_CASE("reduce rejects stale matches") {
    Graph g = cycle(12);
    ConfigurationMatch m;
    m.removal = {40};
    CHECK_THROWS_AS(reduce(g, m), PreconditionError);
    m.removal = {};
    CHECK_THROWS_AS(reduce(g, m), PreconditionError);
}

TEST_CASE("constructive coloring handles trees, cycles and corpus graphs") {
    // bounded-degree random trees
    Rng rng(97);
    for (int it = 0; it < 10; ++it) {
        HostBuilder h;
        int n = 20 + static_cast<int>(rng.below(30));
        std::vector<int> degree(n, 0);
        h.add();
        for (int v = 1; v < n; ++v) {
            int parent;
            do {
                parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
            } while (degree[parent] >= 4);
            h.add();
            h.edge(parent, v);
            ++degree[parent];
            ++degree[v];
        }
        Graph t = h.build();
        auto res = color_constructive(t, ListAssignment::uniform(n, 6));
        CHECK(!verify_coloring(t, res.coloring, 2));
    }

    // C10 with identical lists; its square needs only 4 colors
    Graph c10 = cycle(10);
    CHECK(oracles::chromatic(square(c10)) == 4);
    auto res = color_constructive(c10, ListAssignment::uniform(10, 6));
    CHECK(!verify_coloring(c10, res.coloring, 2));

    // a long cycle goes through the direct path as a 2-regular component
    Graph c30 = cycle(30);
    auto res30 = color_constructive(c30, ListAssignment::uniform(30, 6));
    CHECK(!verify_coloring(c30, res30.coloring, 2));

    // corpus instances with uniform and with random lists
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Graph g = random_sparse(70, 10, seed);
        auto uni = color_constructive(g, ListAssignment::uniform(70, 6));
        CHECK(!verify_coloring(g, uni.coloring, 2));
        CHECK(!uni.trace.empty());
        ListAssignment rnd;
        rnd.lists.resize(70);
        for (auto& l : rnd.lists) l = rng.sample_subset(11, 6);
        auto adv = color_constructive(g, rnd);
        CHECK(!verify_coloring(g, adv.coloring, 2));
        for (int v = 0; v < 70; ++v) {
            const auto& lv = rnd.lists[v];
            CHECK(std::find(lv.begin(), lv.end(), adv.coloring[v]) != lv.end());
        }
    }
}

TEST_CASE("constructive coloring enforces its hypotheses") {
    CHECK_THROWS_WITH_AS(
        color_constructive(hoffman_singleton(), ListAssignment::uniform(50, 6)),
        doctest::Contains("max degree"), PreconditionError);
    // girth 5 below both 10 and the flagged 9
    CHECK_THROWS_WITH_AS(color_constructive(petersen(), ListAssignment::uniform(10, 6)),
                         doctest::Contains("girth"), PreconditionError);
    // short lists
    Graph c12 = cycle(12);
    CHECK_THROWS_WITH_AS(color_constructive(c12, ListAssignment::uniform(12, 5)),
                         doctest::Contains("6 colors"), PreconditionError);
    // mad exactly 5/2 is not accepted
    CHECK_THROWS_WITH_AS(color_constructive(wall_web(), ListAssignment::uniform(40, 6)),
                         doctest::Contains("mad"), PreconditionError);
}

TEST_CASE("girth 9 inputs need the explicit flag") {
    // find a seed whose instance has girth exactly 9
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = random_sparse(50, 9, seed);
        if (girth(g) != 9) continue;
        CHECK_THROWS_AS(color_constructive(g, ListAssignment::uniform(50, 6)),
                        PreconditionError);
        ConstructiveOptions opts;
        opts.accept_girth_9 = true;
        auto res = color_constructive(g, ListAssignment::uniform(50, 6), opts);
        CHECK(!verify_coloring(g, res.coloring, 2));
        return;
    }
    FAIL("no girth-9 instance found among 50 seeds");
}

TEST_CASE("disconnected inputs are colored per component") {
    // corpus graph plus a far-away cycle
    Graph base = random_sparse(40, 10, 2);
    HostBuilder h;
    for (int v = 0; v < base.vertex_count(); ++v) h.add();
    for (auto [a, b] : base.edges()) h.edge(a, b);
    int first = h.add();
    int prev = first;
    for (int i = 1; i < 12; ++i) prev = h.grow(prev);
    h.edge(prev, first);
    Graph g = h.build();
    auto res = color_constructive(g, ListAssignment::uniform(g.vertex_count(), 6));
    CHECK(!verify_coloring(g, res.coloring, 2));
}
