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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tdc/choosability.hpp"
#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"

namespace tdc {

// The ten reducible coloring gadgets, lettered a..j. Each is a labeled tree
// with a minimum list-size profile; its coloring constraints are exactly the
// square of the tree (the gadget always sits in a host sparse enough that no
// outside path shortens internal distances).
enum class GadgetId { a, b, c, d, e, f, g, h, i, j };

GadgetId gadget_id_from_string(std::string_view s);
std::string to_string(GadgetId id);
const std::vector<GadgetId>& all_gadget_ids();

struct Gadget {
    GadgetId id;
    std::vector<std::string> labels;  // "u0","u1",...,"u3'","u3''","v3","v3'","v5","v5'"
    Graph graph;
    Graph constraints;  // square(graph)
    SizeProfile profile;

    int size() const { return graph.vertex_count(); }
    int index(std::string_view label) const;  // throws on unknown label
};

const Gadget& gadget(GadgetId id);

struct BranchTrace {
    std::vector<std::string> branches;  // claim outcomes, outermost first
    std::vector<std::string> steps;     // individual coloring actions

    std::string text() const;
};

struct ProcedureResult {
    bool ok = false;
    Coloring coloring;  // gadget-indexed, total when ok
    BranchTrace trace;
    std::string failure;  // set when !ok
};

// Replays the gadget's coloring procedure on lists meeting the profile
// (extra colors are trimmed from the high end). Each claim of the argument
// is tested; a failed hypothesis takes that claim's early-exit
// coloring order, otherwise the derived fact feeds the final order. A step
// that cannot be completed yields ok == false with the full branch trace.
ProcedureResult extend_procedure(GadgetId id, const ListAssignment& lists);

// Catalog of branch ids extend_procedure can emit for this gadget (top-level
// claims of its own procedure; sub-procedure branches belong to their own
// gadget).
const std::vector<std::string>& procedure_branches(GadgetId id);

// Choosability check of (constraints, profile) in the requested mode.
ChoosableReport verify_gadget(GadgetId id, bool exhaustive, std::uint64_t trials_or_budget,
                              std::uint64_t seed);

struct CrossCheckReport {
    GadgetId id;
    std::uint64_t trials = 0;
    std::uint64_t valid = 0;
    std::uint64_t seed = 0;
    std::map<std::string, std::uint64_t> branch_hits;
    std::vector<std::string> uncovered;  // catalog entries never exercised
    bool ok = false;
    std::string first_failure;

    std::string text() const;
};

// Samples random admissible list assignments (mixed universes plus targeted
// couplings so every claim branch gets exercised), asserting on every sample
// that the replayed procedure yields a valid list coloring and that the
// backtracking solver agrees the instance is satisfiable.
CrossCheckReport cross_check_procedure(GadgetId id, std::uint64_t trials, std::uint64_t seed);

}  // namespace tdc
