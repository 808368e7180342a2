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

#include <string>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

// Flavor of a (1,1,1)-vertex: how many of the three far endvertices across
// its 1-paths are 4-vertices (0 = small, 1 = medium, 2 = large, 3 = huge).
enum class Flavor { none, small, medium, large, huge };

std::string to_string(Flavor f);

struct VertexClass {
    int degree = 0;
    // Length classes of the incident paths, sorted descending; one entry per
    // incident edge. Empty for 2-vertices (they lie on paths) and for
    // vertices of 2-regular components.
    std::vector<int> signature;
    Flavor flavor = Flavor::none;  // only for (1,1,1)-vertices
    bool special = false;          // special (1,1,0)-vertex
    bool light = false;            // 2-vertex, medium or large (1,1,1)-vertex
    bool two_regular = false;      // lies on an all-degree-2 cycle component

    bool is(std::initializer_list<int> sig) const {
        return signature == std::vector<int>(sig);
    }
};

// One incident path of a 3+-vertex, as seen from that vertex.
struct IncidentPath {
    int thread = -1;    // index into PathDecomposition::threads
    int k = 0;          // number of internal 2-vertices
    int first = -1;     // neighbor along this path (internal if k>0, else far end)
    int second = -1;    // vertex at distance 2 along the path (-1 for 0-paths)
    int far_end = -1;   // the other endpoint (anchor)
};

struct Classification {
    PathDecomposition paths;
    std::vector<VertexClass> cls;
    // For every vertex of degree != 2: its incident paths in neighbor order.
    std::vector<std::vector<IncidentPath>> incident;

    const VertexClass& of(int v) const { return cls[v]; }
};

Classification classify_graph(const Graph& g);

// Convenience wrapper for a single vertex.
VertexClass classify_vertex(const Graph& g, int v);

}  // namespace tdc
