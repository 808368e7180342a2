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

#include "tdc/choosability.hpp"

#include <algorithm>
#include <numeric>

#include "tdc/errors.hpp"
#include "tdc/rng.hpp"

namespace tdc {

namespace {

void validate(const Graph& constraints, const SizeProfile& profile) {
    if (static_cast<int>(profile.sizes.size()) != constraints.vertex_count()) {
        throw PreconditionError("profile size does not match vertex count");
    }
    for (int s : profile.sizes) {
        if (s < 1) throw PreconditionError("profile sizes must be >= 1");
    }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = saturating_mul(r, n - k + i);
        if (r == UINT64_MAX) return r;
        r /= i;
    }
    return r;
}

// Enumerates lists in first-use canonical order: vertex 0 gets {0..k0-1};
// each later vertex picks a subset of the colors already in use plus a block
// of fresh ones.
class ExhaustiveChecker {
  public:
    ExhaustiveChecker(const Graph& constraints, const SizeProfile& profile, std::uint64_t budget)
        : g_(constraints), profile_(profile.sizes), budget_(budget) {
        lists_.lists.assign(g_.vertex_count(), {});
    }

    ChoosableReport run() {
        ChoosableReport rep;
        rep.mode = "exhaustive";
        found_ = std::nullopt;
        checked_ = 0;
        recurse(0, 0);
        rep.assignments_checked = checked_;
        rep.choosable = !found_.has_value();
        if (found_) {
            // Independent re-check of the counterexample.
            if (list_color(g_, *found_)) {
                throw InternalCheckFailure("counterexample re-check found a coloring");
            }
            rep.counterexample = *found_;
        }
        return rep;
    }

  private:
    void recurse(int v, int colors_used) {
        if (found_) return;
        if (v == g_.vertex_count()) {
            ++checked_;
            if (checked_ > budget_) {
                throw BudgetExceededError("exhaustive budget exceeded during enumeration");
            }
            if (!list_color(g_, lists_)) found_ = lists_;
            return;
        }
        const int k = profile_[v];
        // Choose j old colors and k - j fresh ones.
        for (int j = std::min(k, colors_used); j >= 0; --j) {
            std::vector<int> pick(j);
            // Enumerate j-subsets of {0..colors_used-1} in lexicographic order.
            std::vector<int> idx(j);
            std::iota(idx.begin(), idx.end(), 0);
            for (;;) {
                auto& lv = lists_.lists[v];
                lv.clear();
                for (int i : idx) lv.push_back(i);
                for (int f = 0; f < k - j; ++f) lv.push_back(colors_used + f);
                recurse(v + 1, colors_used + (k - j));
                if (found_) return;
                // next subset
                int i = j - 1;
                while (i >= 0 && idx[i] == colors_used - j + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
            }
            if (j == 0) break;  // idx empty: single iteration
        }
        lists_.lists[v].clear();
    }

    const Graph& g_;
    const std::vector<int>& profile_;
    std::uint64_t budget_;
    ListAssignment lists_;
    std::optional<ListAssignment> found_;
    std::uint64_t checked_ = 0;
};

}  // namespace

std::uint64_t choosability_enumeration_bound(const SizeProfile& profile) {
    std::uint64_t bound = 1;
    std::uint64_t used = 0;
    for (int k : profile.sizes) {
        std::uint64_t ways = 0;
        for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(k, used); ++j) {
            ways += binomial_saturating(used, j);
            if (ways == UINT64_MAX) break;
        }
        bound = saturating_mul(bound, std::max<std::uint64_t>(ways, 1));
        used += static_cast<std::uint64_t>(k);
    }
    return bound;
}

ChoosableReport check_choosable_exhaustive(const Graph& constraints, const SizeProfile& profile,
                                           std::uint64_t budget) {
    validate(constraints, profile);
    std::uint64_t bound = choosability_enumeration_bound(profile);
    if (bound > budget) {
        throw BudgetExceededError("exhaustive choosability refused: enumeration bound " +
                                  (bound == UINT64_MAX ? std::string(">= 2^64")
                                                       : std::to_string(bound)) +
                                  " exceeds budget " + std::to_string(budget) +
                                  "; use randomized mode");
    }
    return ExhaustiveChecker(constraints, profile, budget).run();
}

ChoosableReport check_choosable_randomized(const Graph& constraints, const SizeProfile& profile,
                                           std::uint64_t trials, std::uint64_t seed) {
    validate(constraints, profile);
    if (trials < 1) throw PreconditionError("randomized mode needs trials >= 1");
    ChoosableReport rep;
    rep.mode = "randomized";
    rep.seed = seed;
    rep.trials = trials;
    Rng rng(seed);
    const int n = constraints.vertex_count();
    int max_size = *std::max_element(profile.sizes.begin(), profile.sizes.end());
    int total = std::accumulate(profile.sizes.begin(), profile.sizes.end(), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        // Small universes are the adversarial ones; rotate over a palette of
        // sizes from "tight" to "all lists disjoint".
        int universe;
        switch (t % 5) {
            case 0: universe = max_size; break;
            case 1: universe = max_size + 1; break;
            case 2: universe = max_size + 2; break;
            case 3: universe = std::max(max_size, 2 * max_size - 1); break;
            default: universe = std::max(max_size, total); break;
        }
        ListAssignment L;
        L.lists.resize(n);
        for (int v = 0; v < n; ++v) L.lists[v] = rng.sample_subset(universe, profile.sizes[v]);
        ++rep.assignments_checked;
        if (!list_color(constraints, L)) {
            rep.counterexample = L;
            rep.choosable = false;
            return rep;
        }
    }
    rep.choosable = true;
    return rep;
}

}  // namespace tdc
