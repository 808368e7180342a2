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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdc {

// Simple undirected graph on vertex ids 0..n-1. Adjacency lists are kept
// sorted; no self-loops, no parallel edges. Graphs are immutable once built
// (builders return by value) and safe to share across threads.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);  // throws on loops, duplicates, bad ids

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

  private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Canonical edge-list document. Line 1 is "n m"; then exactly m lines "u v"
// with 0 <= u < v < n. Lines starting with '#' are comments and do not count
// toward m. Parsing rejects malformed lines, out-of-range ids, self-loops and
// duplicate edges, naming the offending line.
Graph parse_edge_list(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string to_edge_list(const Graph& g);

// u ~ v in the square iff 1 <= dist(u,v) <= 2 in g.
Graph square(const Graph& g);

// N*(v): vertices at distance 1 or 2 from v, excluding v. Sorted.
std::vector<int> two_distance_neighbors(const Graph& g, int v);

// Length of a shortest cycle; nullopt for forests. Component-wise minimum.
std::optional<int> girth(const Graph& g);

// Vertex sets of connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Induced subgraph on `vertices` (sorted ascending); new id i corresponds to
// vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// A maximal chain of degree-2 vertices between two anchors of degree != 2.
// A proper k-path has both anchors of degree >= 3; a thread keeps
// whatever anchors the host graph provides. Both endpoints may coincide
// (a cycle re-entering its sole anchor). k == 0 threads are plain edges
// between anchors.
struct PathThread {
    std::array<int, 2> endpoints;  // endpoints[0] <= endpoints[1]
    std::vector<int> internals;    // ordered from endpoints[0] to endpoints[1]
    int k() const { return static_cast<int>(internals.size()); }
};

struct PathDecomposition {
    std::vector<PathThread> threads;
    // Components in which every vertex has degree 2 (pure cycles); these hold
    // no threads.
    std::vector<std::vector<int>> two_regular_components;
    bool has_two_regular() const { return !two_regular_components.empty(); }
};

// Every degree-2 vertex lands in exactly one thread or one flagged 2-regular
// component; every anchor-anchor edge appears as a 0-thread.
PathDecomposition enumerate_paths(const Graph& g);

}  // namespace tdc
