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

#include "tdc/graph.hpp"
#include "tdc/rational.hpp"

namespace tdc {

// Average degree 2|E|/|V|; zero for the empty vertex set is not a case (n >= 1).
Rational average_degree(const Graph& g);

// Maximum over nonempty subgraphs H of 2|E(H)|/|V(H)|, exactly. Computed via
// Goldberg's max-flow characterization of the densest subgraph with an exact
// Dinkelbach iteration over rational guesses, so no tolerance is involved.
Rational mad_exact(const Graph& g);

// A vertex set achieving the maximum density |E(H)|/|V(H)| (sorted); the
// whole-graph witness behind mad_exact.
std::vector<int> densest_subgraph(const Graph& g);

}  // namespace tdc
