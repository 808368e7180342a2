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
#include <utility>
#include <vector>

#include "tdc/classify.hpp"
#include "tdc/coloring.hpp"
#include "tdc/gadgets.hpp"
#include "tdc/graph.hpp"

namespace tdc {

// The reducible configurations, in the priority order the detector scans.
enum class Lemma { L8, L9, L10, L11, L12, L13, L14 };

std::string to_string(Lemma l);

struct ConfigurationMatch {
    Lemma lemma = Lemma::L8;
    int anchor = -1;  // lemma-specific primary vertex; lowest-id tie break
    // Vertices deleted before the recursive coloring call.
    std::vector<int> removal;
    // Vertices kept in the reduced graph but stripped of their color before
    // the extension.
    std::vector<int> uncolor;
    // Vertices colored greedily before the gadget instance is solved.
    std::vector<int> greedy_first;
    // Extension recipe: gadget id plus gadget-label -> host-vertex map for
    // everything not handled greedily. Absent for the ad-hoc lemmas.
    std::optional<GadgetId> gadget;
    std::vector<std::pair<std::string, int>> gadget_map;
    // Figure labels for reports.
    std::vector<std::pair<std::string, int>> note_map;
};

// First configuration in lemma order (L8..L14), lowest anchor first within a
// lemma. NONE when the graph contains no reducible configuration (pure-cycle
// components never match; the caller handles them directly).
std::optional<ConfigurationMatch> find_configuration(const Graph& g);

struct Reduction {
    Graph reduced;
    std::vector<int> kept;  // reduced id -> host id
};

// Deletes the match's removal set. The match must come from
// find_configuration on this very graph.
Reduction reduce(const Graph& g, const ConfigurationMatch& m);

// Completes `coloring` (total on V minus removal, in host ids) across the
// removed and uncolored vertices: greedy_first vertices first, then the
// gadget sub-instance via the backtracking list solver, after checking each
// mapped vertex's remaining list against the gadget profile.
void extend_coloring(const Graph& g, const ConfigurationMatch& m,
                     const std::vector<std::vector<int>>& lists, Coloring& coloring);

struct ConstructiveOptions {
    bool accept_girth_9 = false;
    int base_threshold = 12;  // solve directly at or below this order
};

struct ReductionStep {
    Lemma lemma;
    int anchor;
    int order;  // |V| of the graph the step fired on
};

struct ConstructiveResult {
    Coloring coloring;
    std::vector<ReductionStep> trace;
};

// The constructive colorer: colors any graph with max degree at
// most 4, girth at least 10 (9 behind the flag), mad < 5/2, from lists of
// size at least 6, by repeatedly removing a reducible configuration and
// extending the recursive coloring back across it. Throws PreconditionError
// when a hypothesis fails and TheoremFalsified when no configuration exists
// on a non-base instance (expected unreachable).
ConstructiveResult color_constructive(const Graph& g, const ListAssignment& L,
                                      const ConstructiveOptions& opts = {});

}  // namespace tdc
