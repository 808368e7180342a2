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

#include "tdc/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "tdc/errors.hpp"

namespace tdc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop rejected");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) throw PreconditionError("duplicate edge rejected");
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max<int>(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = degree(0);
    for (const auto& a : adj_) d = std::min<int>(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    int seen = 0;
    Graph g;

    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long a = -1, b = -1;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) fail("expected two integers");
        if (n < 0) {
            if (a < 0 || b < 0) fail("negative counts in header");
            n = static_cast<int>(a);
            m = static_cast<int>(b);
            g = Graph(n);
            continue;
        }
        if (seen == m) fail("more than the declared " + std::to_string(m) + " edges");
        if (a < 0 || b < 0 || a >= n || b >= n) fail("vertex id out of range");
        if (a == b) fail("self-loop");
        int u = static_cast<int>(std::min(a, b));
        int v = static_cast<int>(std::max(a, b));
        if (g.has_edge(u, v)) fail("duplicate edge");
        g.add_edge(u, v);
        ++seen;
    }
    ++lineno;
    if (n < 0) fail("missing header line \"n m\"");
    if (seen != m) fail("declared " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return g;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph square(const Graph& g) {
    const int n = g.vertex_count();
    Graph sq(n);
    std::vector<char> mark(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) {
            if (u > v && !mark[u]) {
                mark[u] = 1;
                sq.add_edge(v, u);
            }
            for (int w : g.neighbors(u)) {
                if (w > v && !mark[w]) {
                    mark[w] = 1;
                    sq.add_edge(v, w);
                }
            }
        }
        for (int u : g.neighbors(v)) {
            mark[u] = 0;
            for (int w : g.neighbors(u)) mark[w] = 0;
        }
    }
    return sq;
}

std::vector<int> two_distance_neighbors(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
    std::vector<char> mark(g.vertex_count(), 0);
    std::vector<int> out;
    for (int u : g.neighbors(v)) {
        if (!mark[u]) {
            mark[u] = 1;
            out.push_back(u);
        }
        for (int w : g.neighbors(u)) {
            if (w != v && !mark[w]) {
                mark[w] = 1;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Shortest u-v path length with edge (u,v) removed; -1 if disconnected.
int bfs_without_edge(const Graph& g, int u, int v) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> q;
    dist[u] = 0;
    q.push_back(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.neighbors(x)) {
            if (x == u && y == v) continue;
            if (x == v && y == u) continue;
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                if (y == v) return dist[y];
                q.push_back(y);
            }
        }
    }
    return dist[v];
}

}  // namespace

std::optional<int> girth(const Graph& g) {
    // Per-edge breadth-first search: the shortest cycle through edge (u,v) is
    // 1 + the shortest alternative u-v path.
    std::optional<int> best;
    for (auto [u, v] : g.edges()) {
        int d = bfs_without_edge(g, u, v);
        if (d >= 0 && (!best || d + 1 < *best)) best = d + 1;
    }
    return best;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> q{s};
        comp[s] = id;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            out[id].push_back(x);
            for (int y : g.neighbors(x)) {
                if (comp[y] < 0) {
                    comp[y] = id;
                    q.push_back(y);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) pos[vertices[i]] = i;
    Graph sub(static_cast<int>(vertices.size()));
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        for (int u : g.neighbors(vertices[i])) {
            if (pos[u] > i) sub.add_edge(i, pos[u]);
        }
    }
    return sub;
}

PathDecomposition enumerate_paths(const Graph& g) {
    const int n = g.vertex_count();
    PathDecomposition out;
    std::vector<char> used(n, 0);  // consumed degree-2 vertices

    auto walk = [&](int anchor, int first) {
        // Walk the chain of degree-2 vertices starting at `first`.
        PathThread t;
        t.endpoints = {anchor, -1};
        int prev = anchor;
        int cur = first;
        while (g.degree(cur) == 2) {
            t.internals.push_back(cur);
            used[cur] = 1;
            int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
        }
        t.endpoints[1] = cur;
        if (t.endpoints[0] > t.endpoints[1]) {
            std::swap(t.endpoints[0], t.endpoints[1]);
            std::reverse(t.internals.begin(), t.internals.end());
        }
        out.threads.push_back(std::move(t));
    };

    for (int a = 0; a < n; ++a) {
        if (g.degree(a) == 2) continue;
        for (int w : g.neighbors(a)) {
            if (g.degree(w) == 2) {
                if (!used[w]) walk(a, w);
            } else if (a < w) {
                out.threads.push_back(PathThread{{a, w}, {}});
            }
        }
    }

    // Remaining degree-2 vertices belong to components that are pure cycles.
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (g.degree(s) != 2 || used[s] || seen[s]) continue;
        std::vector<int> cyc;
        int prev = -1, cur = s;
        do {
            seen[cur] = 1;
            cyc.push_back(cur);
            int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
        } while (cur != s);
        std::sort(cyc.begin(), cyc.end());
        out.two_regular_components.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace tdc
