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

#include "tdc/classify.hpp"

#include <algorithm>

#include "tdc/errors.hpp"

namespace tdc {

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::none: return "none";
        case Flavor::small: return "small";
        case Flavor::medium: return "medium";
        case Flavor::large: return "large";
        case Flavor::huge: return "huge";
    }
    return "?";
}

Classification classify_graph(const Graph& g) {
    const int n = g.vertex_count();
    Classification out;
    out.paths = enumerate_paths(g);
    out.cls.assign(n, {});
    out.incident.assign(n, {});

    std::vector<char> on_cycle(n, 0);
    for (const auto& comp : out.paths.two_regular_components) {
        for (int v : comp) on_cycle[v] = 1;
    }

    // Index threads by their first internal vertex and by anchor edges.
    std::vector<int> thread_of_internal(n, -1);
    for (int t = 0; t < static_cast<int>(out.paths.threads.size()); ++t) {
        for (int v : out.paths.threads[t].internals) thread_of_internal[v] = t;
    }

    for (int v = 0; v < n; ++v) {
        VertexClass& c = out.cls[v];
        c.degree = g.degree(v);
        c.two_regular = on_cycle[v] != 0;
        if (c.degree == 2) {
            c.light = !c.two_regular;  // light by definition; cycles are degenerate
            continue;
        }
        for (int w : g.neighbors(v)) {
            IncidentPath p;
            p.first = w;
            if (g.degree(w) == 2) {
                p.thread = thread_of_internal[w];
                const PathThread& t = out.paths.threads[p.thread];
                p.k = t.k();
                // Orient the thread as seen from v.
                bool from_front = t.internals.front() == w && t.endpoints[0] == v;
                bool from_back = t.internals.back() == w && t.endpoints[1] == v;
                if (from_front) {
                    p.far_end = t.endpoints[1];
                    p.second = t.k() >= 2 ? t.internals[1] : t.endpoints[1];
                } else if (from_back) {
                    p.far_end = t.endpoints[0];
                    p.second = t.k() >= 2 ? t.internals[t.k() - 2] : t.endpoints[0];
                } else {
                    throw InternalCheckFailure("thread orientation mismatch");
                }
            } else {
                p.k = 0;
                p.far_end = w;
                p.second = -1;
            }
            out.incident[v].push_back(p);
            c.signature.push_back(p.k);
        }
        std::sort(c.signature.rbegin(), c.signature.rend());
    }

    // Flavors need all degrees; specials need all flavors. Two passes.
    for (int v = 0; v < n; ++v) {
        VertexClass& c = out.cls[v];
        if (c.degree == 3 && c.is({1, 1, 1})) {
            int fours = 0;
            for (const auto& p : out.incident[v]) {
                if (g.degree(p.far_end) == 4) ++fours;
            }
            switch (fours) {
                case 0: c.flavor = Flavor::small; break;
                case 1: c.flavor = Flavor::medium; break;
                case 2: c.flavor = Flavor::large; break;
                default: c.flavor = Flavor::huge; break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        VertexClass& c = out.cls[v];
        if (c.degree == 3 && c.is({1, 1, 0})) {
            bool has_3_neighbor = false;
            bool shares_with_small = false;
            for (const auto& p : out.incident[v]) {
                if (p.k == 0 && g.degree(p.far_end) == 3) has_3_neighbor = true;
                if (p.k == 1 && out.cls[p.far_end].flavor == Flavor::small) {
                    shares_with_small = true;
                }
            }
            c.special = has_3_neighbor && shares_with_small;
        }
        c.light = (c.degree == 2 && !c.two_regular) || c.flavor == Flavor::medium ||
                  c.flavor == Flavor::large;
    }
    return out;
}

VertexClass classify_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
    return classify_graph(g).cls[v];
}

}  // namespace tdc
