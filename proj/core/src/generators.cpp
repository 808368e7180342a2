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

#include "tdc/generators.hpp"

#include <algorithm>
#include <deque>

#include "tdc/errors.hpp"
#include "tdc/mad.hpp"
#include "tdc/rational.hpp"
#include "tdc/rng.hpp"

namespace tdc {

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph hoffman_singleton() {
    // Pentagon Ph: ids 5h+j, j ~ j+-1; pentagram Qi: ids 25+5i+j, j ~ j+-2;
    // Ph(j) ~ Qi(h*i + j mod 5).
    Graph g(50);
    for (int h = 0; h < 5; ++h) {
        for (int j = 0; j < 5; ++j) {
            g.add_edge(5 * h + j, 5 * h + (j + 1) % 5);
        }
    }
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            int a = 25 + 5 * i + j;
            int b = 25 + 5 * i + (j + 2) % 5;
            if (!g.has_edge(std::min(a, b), std::max(a, b))) g.add_edge(a, b);
        }
    }
    for (int h = 0; h < 5; ++h) {
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                g.add_edge(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
            }
        }
    }
    return g;
}

Graph fig4_girth4(int delta) {
    if (delta < 2) throw PreconditionError("fig4_girth4 needs delta >= 2");
    const int u = 0, v = 1;
    const int a = delta + 1, b = delta + 2;
    Graph g(delta + 3);
    for (int i = 0; i < delta - 1; ++i) {
        g.add_edge(u, 2 + i);
        g.add_edge(v, 2 + i);
    }
    g.add_edge(u, a);
    g.add_edge(a, b);
    g.add_edge(b, v);
    return g;
}

namespace {

// Vertex ids of the girth-5 example.
enum Fig5 : int {
    f5_u1 = 0,
    f5_u2 = 1,
    f5_u3 = 2,
    f5_u4 = 3,
    f5_u7 = 4,
    f5_u5 = 5,
    f5_u6 = 6,
    f5_u2p = 7,  // u2'
    f5_a = 8,    // joins u3 and u6
    f5_b = 9,    // joins u1 and u7
    f5_c = 10,   // joins u6 and u7
};

}  // namespace

Graph fig4_girth5() {
    Graph g(11);
    g.add_edge(f5_u1, f5_u2);
    g.add_edge(f5_u2, f5_u3);
    g.add_edge(f5_u3, f5_u4);
    g.add_edge(f5_u4, f5_u7);
    g.add_edge(f5_u1, f5_u5);
    g.add_edge(f5_u5, f5_u4);
    g.add_edge(f5_u1, f5_u6);
    g.add_edge(f5_u6, f5_u2p);
    g.add_edge(f5_u2p, f5_u4);
    g.add_edge(f5_u3, f5_a);
    g.add_edge(f5_a, f5_u6);
    g.add_edge(f5_u1, f5_b);
    g.add_edge(f5_b, f5_u7);
    g.add_edge(f5_u6, f5_c);
    g.add_edge(f5_c, f5_u7);
    return g;
}

std::vector<std::string> fig4_girth5_checklist() {
    Graph g = fig4_girth5();
    std::vector<std::string> out;
    auto dist2 = [&](int a, int b) {
        auto nb = two_distance_neighbors(g, a);
        return std::binary_search(nb.begin(), nb.end(), b);
    };
    auto line = [&](bool ok, const std::string& what) {
        out.push_back(std::string(ok ? "ok  " : "FAIL") + " " + what);
    };
    line(g.vertex_count() == 11, "11 vertices");
    line(g.max_degree() == 4, "max degree 4");
    line(girth(g) == std::optional<int>(5), "girth 5");
    bool five_cycle = g.has_edge(f5_u1, f5_u2) && g.has_edge(f5_u2, f5_u3) &&
                      g.has_edge(f5_u3, f5_u4) && g.has_edge(f5_u4, f5_u5) &&
                      g.has_edge(f5_u5, f5_u1);
    line(five_cycle, "u1..u5 form a 5-cycle");
    bool u6_all = true;
    for (int v : {f5_u1, f5_u2, f5_u3, f5_u4, f5_u5}) u6_all = u6_all && dist2(f5_u6, v);
    line(u6_all, "u6 sees u1..u5");
    bool u2p_sees = true;
    for (int v : {f5_u1, f5_u3, f5_u4, f5_u5, f5_u6}) u2p_sees = u2p_sees && dist2(f5_u2p, v);
    line(u2p_sees, "u2' sees u1,u3,u4,u5,u6");
    line(!dist2(f5_u2p, f5_u2), "u2' does not see u2");
    bool u7_all = true;
    for (int v : {f5_u1, f5_u2p, f5_u3, f5_u4, f5_u5, f5_u6}) u7_all = u7_all && dist2(f5_u7, v);
    line(u7_all, "u7 sees representatives of all six color classes");
    return out;
}

namespace {

Graph wegner(int delta, bool with_xy_edge) {
    if (delta < 4 || delta % 2 != 0) {
        throw PreconditionError("wegner construction supports even delta >= 4 only");
    }
    const int half = delta / 2;
    const int a = half - 1;  // common neighbors of x and y
    const int b = half;      // of z and x
    const int c = half;      // of y and z
    const int x = 0, y = 1, z = 2;
    Graph g(3 + a + b + c);
    int next = 3;
    for (int i = 0; i < a; ++i, ++next) {
        g.add_edge(x, next);
        g.add_edge(y, next);
    }
    for (int i = 0; i < b; ++i, ++next) {
        g.add_edge(z, next);
        g.add_edge(x, next);
    }
    for (int i = 0; i < c; ++i, ++next) {
        g.add_edge(y, next);
        g.add_edge(z, next);
    }
    if (with_xy_edge) g.add_edge(x, y);
    return g;
}

}  // namespace

Graph wegner_g3(int delta) { return wegner(delta, true); }
Graph wegner_g4(int delta) { return wegner(delta, false); }

namespace {

// Planar growth state: a combinatorial embedding maintained as face cycles.
// Starting from one cycle and only ever inserting ears inside an existing
// face keeps the graph planar and 2-connected, so faces stay simple cycles.
struct EarBuilder {
    int target_n;
    int target_girth;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<int>> faces;

    int vertex_count() const { return static_cast<int>(adj.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    int bfs_dist(int s, int t) const {
        std::vector<int> dist(adj.size(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (x == t) return dist[x];
            for (int y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        return -1;
    }

    // Splits face `fi` with an ear of `len` edges between positions i and j.
    void insert_ear(int fi, int i, int j, int len) {
        std::vector<int>& f = faces[fi];
        if (i > j) std::swap(i, j);
        int u = f[i], v = f[j];
        std::vector<int> internals;
        for (int k = 0; k < len - 1; ++k) {
            adj.emplace_back();
            internals.push_back(vertex_count() - 1);
        }
        int prev = u;
        for (int w : internals) {
            add_edge(prev, w);
            prev = w;
        }
        add_edge(prev, v);

        std::vector<int> face_a(f.begin() + i, f.begin() + j + 1);
        face_a.insert(face_a.end(), internals.rbegin(), internals.rend());
        std::vector<int> face_b(f.begin() + j, f.end());
        face_b.insert(face_b.end(), f.begin(), f.begin() + i + 1);
        face_b.insert(face_b.end(), internals.begin(), internals.end());
        faces[fi] = std::move(face_a);
        faces.push_back(std::move(face_b));
    }
};

bool try_grow(EarBuilder& b, Rng& rng) {
    const int g0 = b.target_girth;
    const long iter_budget = 200L * b.target_n;
    for (long iter = 0; iter < iter_budget; ++iter) {
        int n = b.vertex_count();
        bool need_vertices = n < b.target_n;
        bool need_delta = true;
        for (int v = 0; v < n && need_delta; ++v) {
            if (b.degree(v) == 4) need_delta = false;
        }
        if (!need_vertices && !need_delta) return true;

        int fi = static_cast<int>(rng.below(b.faces.size()));
        const auto& f = b.faces[fi];
        if (f.size() < 4) continue;
        int i = static_cast<int>(rng.below(f.size()));
        int j = static_cast<int>(rng.below(f.size()));
        if (i == j || f[i] == f[j]) continue;
        int u = f[i], v = f[j];
        if (b.degree(u) >= 4 || b.degree(v) >= 4) continue;
        // Push the other endpoint toward degree-3 vertices so some vertex
        // eventually reaches degree 4.
        if (need_delta && !need_vertices && b.degree(u) != 3 && b.degree(v) != 3) continue;

        int dist = b.bfs_dist(u, v);
        int lmin = std::max(1, g0 - dist);
        int room = b.target_n - n;
        int len;
        if (need_vertices) {
            len = std::max(lmin, 4 + static_cast<int>(rng.below(4)));
            if (len - 1 > room) len = room + 1;
            if (len < lmin) continue;  // cannot fit a girth-safe ear here
        } else {
            if (lmin > 1) continue;  // only chords are affordable now
            len = 1;
        }
        b.insert_ear(fi, i, j, len);
    }
    return false;
}

}  // namespace

Graph random_sparse(int n, int target_girth, std::uint64_t seed) {
    if (n < 10) throw PreconditionError("random_sparse needs n >= 10");
    if (target_girth != 9 && target_girth != 10) {
        throw PreconditionError("target girth must be 9 or 10");
    }
    for (std::uint64_t attempt = 0; attempt < 300; ++attempt) {
        Rng rng(seed * 0x100000001b3ULL + attempt);
        EarBuilder b;
        b.target_n = n;
        b.target_girth = target_girth;
        b.adj.resize(target_girth);
        std::vector<int> face;
        for (int i = 0; i < target_girth; ++i) {
            b.add_edge(i, (i + 1) % target_girth);
            face.push_back(i);
        }
        b.faces.push_back(face);
        std::reverse(face.begin(), face.end());
        b.faces.push_back(face);

        if (!try_grow(b, rng)) continue;
        if (b.vertex_count() != n) continue;

        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v : b.adj[u]) {
                if (u < v) edges.emplace_back(u, v);
            }
        }
        Graph g = Graph::from_edges(n, edges);

        if (g.max_degree() != 4 || g.min_degree() < 2) continue;
        if (connected_components(g).size() != 1) continue;
        auto gi = girth(g);
        if (!gi || *gi < target_girth) continue;
        if (!(mad_exact(g) < Rational(5, 2))) continue;
        return g;
    }
    throw Error("random_sparse: generation budget exhausted; try a larger n");
}

}  // namespace tdc
