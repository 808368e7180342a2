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

#include <optional>
#include <string>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

// Per-vertex color; kUncolored marks unassigned slots of a partial coloring.
inline constexpr int kUncolored = -1;
using Coloring = std::vector<int>;

bool is_total(const Coloring& c);

struct ListAssignment {
    std::vector<std::vector<int>> lists;  // each sorted ascending, nonempty
    static ListAssignment uniform(int n, int k);
};

struct SizeProfile {
    std::vector<int> sizes;  // all >= 1
};

struct ColorViolation {
    int u, v;
};

// Checks color distinctness for all pairs within `radius` (1 or 2); returns
// the lexicographically first offending pair, or nullopt when valid. Partial
// colorings are a precondition error naming the unassigned vertices.
std::optional<ColorViolation> verify_coloring(const Graph& g, const Coloring& c, int radius);

// Proper coloring with at most `budget` colors, or nullopt (UNSAT).
// Saturation-degree branch and bound; deterministic.
std::optional<Coloring> chromatic_exact(const Graph& g, int budget);

struct ChromaticResult {
    int value;
    Coloring witness;
};

// Exact chromatic number with witness.
ChromaticResult chromatic_number(const Graph& g);

// chi^2 with a radius-2-valid witness: the chromatic number of square(g).
ChromaticResult two_distance_chromatic(const Graph& g);

// Canonical-order greedy on the square; uses at most Delta^2+1 colors.
Coloring greedy_two_distance(const Graph& g);

// Total coloring with c(v) in L(v) and no monochromatic constraint edge, or
// nullopt when none exists. Exhaustive backtracking with forward pruning.
std::optional<Coloring> list_color(const Graph& constraints, const ListAssignment& L);

// Serialization used by reports: colorings as lines "v c", list assignments
// as lines "v: c1,c2,...".
std::string coloring_to_text(const Coloring& c);
std::string lists_to_text(const ListAssignment& L);
ListAssignment lists_from_text(const std::string& text, int n);

}  // namespace tdc
