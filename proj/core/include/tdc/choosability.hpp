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
#include <optional>
#include <string>

#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"

namespace tdc {

inline constexpr std::uint64_t kDefaultChoosableBudget = 100'000'000ULL;

struct ChoosableReport {
    bool choosable = false;  // no counterexample found (certain in exhaustive mode)
    std::optional<ListAssignment> counterexample;
    std::uint64_t assignments_checked = 0;
    std::string mode;  // "exhaustive" or "randomized"
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;  // randomized mode only
};

// Upper bound on the number of list assignments the exhaustive mode will
// enumerate (saturating); used for the budget refusal.
std::uint64_t choosability_enumeration_bound(const SizeProfile& profile);

// Decides whether every list assignment with |L(v)| = profile(v) admits a
// proper coloring of `constraints`. Assignments are enumerated with a
// first-use (restricted-growth) canonical color order, so verdicts cover all
// assignments up to color renaming. Refuses (BudgetExceededError, naming the
// bound) when the enumeration bound exceeds `budget`. Any counterexample is
// re-checked against list_color before being reported.
ChoosableReport check_choosable_exhaustive(const Graph& constraints, const SizeProfile& profile,
                                           std::uint64_t budget = kDefaultChoosableBudget);

// Samples `trials` random assignments meeting the profile (mixed color
// universes, deterministic in `seed`) and reports the first failure, if any.
ChoosableReport check_choosable_randomized(const Graph& constraints, const SizeProfile& profile,
                                           std::uint64_t trials, std::uint64_t seed);

}  // namespace tdc
