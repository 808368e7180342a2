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

// Host-graph fixtures for the taxonomy and reducibility tests. Figures from
// the structural arguments need anchors of degree 3 or 4 whose surroundings
// add no reducible configuration of their own; the two "caps" below do that
// (they contain no 2-vertex chains, no special vertices and no 4-vertices,
// so none of the detectors fire inside them).

#pragma once

#include <utility>
#include <vector>

#include "tdc/graph.hpp"

namespace fixtures {

class HostBuilder {
  public:
    int add() {
        adj_.emplace_back();
        return static_cast<int>(adj_.size()) - 1;
    }

    void edge(int u, int v) { edges_.emplace_back(u, v); }

    // New vertex adjacent to `from`.
    int grow(int from) {
        int v = add();
        edge(from, v);
        return v;
    }

    // 1-path from a to b through a fresh 2-vertex; returns the internal.
    int one_path(int a, int b) {
        int m = add();
        edge(a, m);
        edge(m, b);
        return m;
    }

    // Pendant triangle with one 2-vertex inside: raises deg(x) by 2 and adds
    // no configuration (its vertices are (1,0,0)-ish 3-vertices).
    void boost2(int x) {
        int p = add(), q = add(), r = add();
        edge(x, p);
        edge(x, q);
        edge(p, q);
        edge(p, r);
        edge(q, r);
    }

    // Pendant K4 attached by one edge: raises deg(x) by 1, adds no
    // configuration (its vertices have no incident 1+-paths).
    void boost1(int x) {
        int a = add(), b = add(), c = add(), d = add();
        edge(x, a);
        edge(a, b);
        edge(a, c);
        edge(a, d);
        edge(b, c);
        edge(b, d);
        edge(c, d);
    }

    // Degree-3 terminator: a fresh vertex held at degree 3 by a triangle cap.
    int anchor3() {
        int v = add();
        boost2(v);
        return v;
    }

    // Degree-4 terminator (wants exactly one more incident edge from the
    // figure; callers attach precisely one path to it).
    int anchor4() {
        int v = add();
        boost2(v);
        boost1(v);
        return v;
    }

    tdc::Graph build() const {
        return tdc::Graph::from_edges(static_cast<int>(adj_.size()), edges_);
    }

  private:
    std::vector<char> adj_;  // only the count matters
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace fixtures
