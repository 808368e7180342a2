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

// Independent brute-force oracles. These deliberately use different
// algorithms than the library so the two sides can check each other.

#pragma once

#include <optional>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"
#include "tdc/rational.hpp"
#include "tdc/rng.hpp"

namespace oracles {

// Shortest cycle via breadth-first search from every vertex.
std::optional<int> girth(const tdc::Graph& g);

// Square via all-pairs BFS truncated at depth 2.
tdc::Graph square(const tdc::Graph& g);

// Max over all nonempty vertex subsets of 2|E(H)|/|V(H)|. Exponential; n <= 20.
tdc::Rational mad(const tdc::Graph& g);

// Chromatic number by enumerating set partitions in first-use canonical order.
int chromatic(const tdc::Graph& g);

// List colorability by full product enumeration over the lists.
bool list_colorable(const tdc::Graph& constraints, const tdc::ListAssignment& L);

// Random simple graph on n vertices; each edge kept with probability num/den.
tdc::Graph random_graph(int n, int num, int den, tdc::Rng& rng);

// Random tree on n vertices (uniform attachment).
tdc::Graph random_tree(int n, tdc::Rng& rng);

}  // namespace oracles
