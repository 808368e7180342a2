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

#include "tdc/coloring.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "tdc/errors.hpp"

namespace tdc {

bool is_total(const Coloring& c) {
    return std::none_of(c.begin(), c.end(), [](int x) { return x == kUncolored; });
}

ListAssignment ListAssignment::uniform(int n, int k) {
    ListAssignment L;
    std::vector<int> colors(k);
    for (int i = 0; i < k; ++i) colors[i] = i;
    L.lists.assign(n, colors);
    return L;
}

std::optional<ColorViolation> verify_coloring(const Graph& g, const Coloring& c, int radius) {
    if (radius != 1 && radius != 2) throw PreconditionError("radius must be 1 or 2");
    if (static_cast<int>(c.size()) != g.vertex_count()) {
        throw PreconditionError("coloring size does not match vertex count");
    }
    std::vector<int> missing;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c[v] == kUncolored) missing.push_back(v);
    }
    if (!missing.empty()) {
        std::string msg = "coloring not total; unassigned:";
        for (int v : missing) msg += " " + std::to_string(v);
        throw PreconditionError(msg);
    }
    std::optional<ColorViolation> best;
    auto consider = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (c[u] != c[v]) return;
        if (!best || u < best->u || (u == best->u && v < best->v)) best = ColorViolation{u, v};
    };
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (radius == 1) {
            for (int u : g.neighbors(v)) {
                if (u > v) consider(v, u);
            }
        } else {
            for (int u : two_distance_neighbors(g, v)) {
                if (u > v) consider(v, u);
            }
        }
    }
    return best;
}

namespace {

// DSATUR branch and bound. Finds a proper coloring with < `limit` colors if
// one exists, improving the incumbent as it goes.
class DsaturSolver {
  public:
    explicit DsaturSolver(const Graph& g) : g_(g), color_(g.vertex_count(), kUncolored) {}

    // Best coloring with at most `budget` colors, nullopt if none.
    std::optional<Coloring> decide(int budget) {
        best_count_ = budget + 1;
        best_.clear();
        search(0, 0);
        if (best_.empty()) return std::nullopt;
        return best_;
    }

    // Exact optimum (assumes n >= 1).
    ChromaticResult optimum() {
        best_count_ = g_.vertex_count() + 1;
        best_.clear();
        lower_bound_ = greedy_clique_size();
        search(0, 0);
        return ChromaticResult{best_count_, best_};
    }

  private:
    // A maximal clique by greedy extension, in vertex order from a max-degree
    // seed; only used as a pruning floor.
    int greedy_clique_size() {
        int seed = 0;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (g_.degree(v) > g_.degree(seed)) seed = v;
        }
        std::vector<int> clique{seed};
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (v == seed) continue;
            bool ok = std::all_of(clique.begin(), clique.end(),
                                  [&](int u) { return g_.has_edge(u, v); });
            if (ok) clique.push_back(v);
        }
        return static_cast<int>(clique.size());
    }

    int pick_vertex(int used_colors) const {
        int best = -1, best_sat = -1, best_deg = -1;
        std::vector<char> seen(used_colors + 1);
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (color_[v] != kUncolored) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0;
            for (int u : g_.neighbors(v)) {
                int c = color_[u];
                if (c != kUncolored && !seen[c]) {
                    seen[c] = 1;
                    ++sat;
                }
            }
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void search(int colored, int used_colors) {
        if (used_colors >= best_count_) return;
        if (best_count_ <= lower_bound_) return;  // provably optimal already
        if (colored == g_.vertex_count()) {
            best_count_ = used_colors;
            best_ = color_;
            return;
        }
        int v = pick_vertex(used_colors);
        std::vector<char> banned(used_colors + 1, 0);
        for (int u : g_.neighbors(v)) {
            if (color_[u] != kUncolored) banned[color_[u]] = 1;
        }
        for (int c = 0; c < used_colors; ++c) {
            if (banned[c]) continue;
            color_[v] = c;
            search(colored + 1, used_colors);
            color_[v] = kUncolored;
        }
        if (used_colors + 1 < best_count_) {
            color_[v] = used_colors;
            search(colored + 1, used_colors + 1);
            color_[v] = kUncolored;
        }
    }

    const Graph& g_;
    Coloring color_;
    Coloring best_;
    int best_count_ = 0;
    int lower_bound_ = 0;
};

}  // namespace

std::optional<Coloring> chromatic_exact(const Graph& g, int budget) {
    if (budget < 1) throw PreconditionError("color budget must be >= 1");
    if (g.vertex_count() == 0) return Coloring{};
    return DsaturSolver(g).decide(budget);
}

ChromaticResult chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return {0, {}};
    return DsaturSolver(g).optimum();
}

ChromaticResult two_distance_chromatic(const Graph& g) {
    return chromatic_number(square(g));
}

Coloring greedy_two_distance(const Graph& g) {
    Graph sq = square(g);
    Coloring c(g.vertex_count(), kUncolored);
    std::vector<char> banned(g.vertex_count() + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : sq.neighbors(v)) {
            if (c[u] != kUncolored) banned[c[u]] = 1;
        }
        int pick = 0;
        while (banned[pick]) ++pick;
        c[v] = pick;
        for (int u : sq.neighbors(v)) {
            if (c[u] != kUncolored) banned[c[u]] = 0;
        }
    }
    return c;
}

namespace {

// Backtracking list coloring with forward pruning: always branch on an
// uncolored vertex with the fewest remaining colors.
class ListColorSolver {
  public:
    ListColorSolver(const Graph& constraints, const ListAssignment& L)
        : g_(constraints), lists_(L.lists), color_(constraints.vertex_count(), kUncolored) {}

    std::optional<Coloring> solve() {
        if (static_cast<int>(lists_.size()) != g_.vertex_count()) {
            throw PreconditionError("list assignment does not match vertex count");
        }
        for (const auto& l : lists_) {
            if (l.empty()) throw PreconditionError("empty color list");
        }
        if (run(0)) return color_;
        return std::nullopt;
    }

  private:
    int remaining(int v) const {
        int count = 0;
        for (int c : lists_[v]) {
            if (allowed(v, c)) ++count;
        }
        return count;
    }

    bool allowed(int v, int c) const {
        for (int u : g_.neighbors(v)) {
            if (color_[u] == c) return false;
        }
        return true;
    }

    bool run(int colored) {
        if (colored == g_.vertex_count()) return true;
        int v = -1, best = INT_MAX;
        for (int x = 0; x < g_.vertex_count(); ++x) {
            if (color_[x] != kUncolored) continue;
            int r = remaining(x);
            if (r < best) {
                best = r;
                v = x;
            }
        }
        if (best == 0) return false;
        for (int c : lists_[v]) {
            if (!allowed(v, c)) continue;
            color_[v] = c;
            if (run(colored + 1)) return true;
            color_[v] = kUncolored;
        }
        return false;
    }

    const Graph& g_;
    const std::vector<std::vector<int>>& lists_;
    Coloring color_;
};

}  // namespace

std::optional<Coloring> list_color(const Graph& constraints, const ListAssignment& L) {
    return ListColorSolver(constraints, L).solve();
}

std::string coloring_to_text(const Coloring& c) {
    std::ostringstream out;
    for (std::size_t v = 0; v < c.size(); ++v) out << v << ' ' << c[v] << '\n';
    return out.str();
}

std::string lists_to_text(const ListAssignment& L) {
    std::ostringstream out;
    for (std::size_t v = 0; v < L.lists.size(); ++v) {
        out << v << ": ";
        for (std::size_t i = 0; i < L.lists[v].size(); ++i) {
            if (i) out << ',';
            out << L.lists[v][i];
        }
        out << '\n';
    }
    return out.str();
}

ListAssignment lists_from_text(const std::string& text, int n) {
    ListAssignment L;
    L.lists.assign(n, {});
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<char> seen(n, 0);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int v;
        char colon;
        if (!(ls >> v >> colon) || colon != ':' || v < 0 || v >= n) {
            throw ParseError("line " + std::to_string(lineno) + ": expected \"v: c1,c2,...\"");
        }
        if (seen[v]) throw ParseError("line " + std::to_string(lineno) + ": repeated vertex");
        seen[v] = 1;
        std::string rest;
        std::getline(ls, rest);
        std::istringstream cs(rest);
        std::string tok;
        while (std::getline(cs, tok, ',')) {
            if (tok.find_first_not_of(" \t") == std::string::npos) continue;
            L.lists[v].push_back(std::stoi(tok));
        }
        if (L.lists[v].empty()) {
            throw ParseError("line " + std::to_string(lineno) + ": empty list");
        }
        std::sort(L.lists[v].begin(), L.lists[v].end());
        L.lists[v].erase(std::unique(L.lists[v].begin(), L.lists[v].end()), L.lists[v].end());
    }
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) throw ParseError("no list given for vertex " + std::to_string(v));
    }
    return L;
}

}  // namespace tdc
