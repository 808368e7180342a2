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

#include "tdc/reduction.hpp"

#include <algorithm>
#include <set>

#include "tdc/errors.hpp"
#include "tdc/mad.hpp"
#include "tdc/rational.hpp"

namespace tdc {

std::string to_string(Lemma l) {
    switch (l) {
        case Lemma::L8: return "L8";
        case Lemma::L9: return "L9";
        case Lemma::L10: return "L10";
        case Lemma::L11: return "L11";
        case Lemma::L12: return "L12";
        case Lemma::L13: return "L13";
        case Lemma::L14: return "L14";
    }
    return "?";
}

namespace {

bool all_distinct(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// --- L8: a vertex of degree at most 1 --------------------------------------

std::optional<ConfigurationMatch> match_l8(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) <= 1) {
            ConfigurationMatch m;
            m.lemma = Lemma::L8;
            m.anchor = v;
            m.removal = {v};
            m.note_map = {{"v", v}};
            return m;
        }
    }
    return std::nullopt;
}

// --- L9: a 3+-path (three consecutive 2-vertices) ---------------------------

std::optional<ConfigurationMatch> match_l9(const Classification& c) {
    const PathThread* best = nullptr;
    for (const auto& t : c.paths.threads) {
        if (t.k() >= 3 && (!best || t.internals[0] < best->internals[0])) best = &t;
    }
    if (!best) return std::nullopt;
    ConfigurationMatch m;
    m.lemma = Lemma::L9;
    m.anchor = best->internals[0];
    m.removal = {best->internals[0], best->internals[1], best->internals[2]};
    m.note_map = {{"u", best->internals[0]}, {"v", best->internals[1]}, {"w", best->internals[2]}};
    return m;
}

// --- L10: a 2-path with a 3-vertex endvertex --------------------------------

std::optional<ConfigurationMatch> match_l10(const Graph& g, const Classification& c) {
    std::optional<ConfigurationMatch> out;
    for (const auto& t : c.paths.threads) {
        if (t.k() != 2) continue;
        int u = -1;
        if (g.degree(t.endpoints[0]) == 3) {
            u = t.endpoints[0];
        } else if (g.degree(t.endpoints[1]) == 3) {
            u = t.endpoints[1];
        } else {
            continue;
        }
        ConfigurationMatch m;
        m.lemma = Lemma::L10;
        m.anchor = u;
        int v = u == t.endpoints[0] ? t.internals[0] : t.internals[1];
        int w = u == t.endpoints[0] ? t.internals[1] : t.internals[0];
        int x = u == t.endpoints[0] ? t.endpoints[1] : t.endpoints[0];
        m.removal = {v, w};
        m.note_map = {{"u", u}, {"v", v}, {"w", w}, {"x", x}};
        if (!out || m.anchor < out->anchor) out = m;
    }
    return out;
}

// --- L11: two (1,1,1)-vertices joined by a 1-path, not both large -----------

std::optional<ConfigurationMatch> match_l11(const Graph& g, const Classification& c) {
    std::optional<ConfigurationMatch> out;
    for (const auto& t : c.paths.threads) {
        if (t.k() != 1) continue;
        int a = t.endpoints[0], b = t.endpoints[1];
        if (!c.of(a).is({1, 1, 1}) || !c.of(b).is({1, 1, 1})) continue;
        for (int u : {std::min(a, b), std::max(a, b)}) {
            if (c.of(u).flavor == Flavor::large) continue;
            int v = u == a ? b : a;
            int u1 = t.internals[0];
            // u's other two 1-paths; w is the far end of degree 3 (exists
            // because u is not large and v is itself a 3-vertex).
            int u2 = -1, u3 = -1, w = -1, x = -1;
            for (const auto& p : c.incident[u]) {
                if (p.first == u1) continue;
                if (u2 < 0 && g.degree(p.far_end) == 3) {
                    u2 = p.first;
                    w = p.far_end;
                } else {
                    u3 = p.first;
                    x = p.far_end;
                }
            }
            if (u2 < 0 || u3 < 0) continue;
            if (!all_distinct({u, v, u1, u2, u3, w, x})) continue;
            ConfigurationMatch m;
            m.lemma = Lemma::L11;
            m.anchor = u;
            m.removal = {u, u1, u2, u3};
            m.uncolor = {v};
            m.greedy_first = {u3};
            m.gadget = GadgetId::a;
            m.gadget_map = {{"u1", u2}, {"u2", u}, {"u3", u1}, {"u4", v}};
            m.note_map = {{"u", u}, {"v", v}, {"u1", u1}, {"u2", u2}, {"u3", u3}, {"w", w}};
            if (!out || m.anchor < out->anchor) out = m;
            break;
        }
    }
    return out;
}

// --- L12: a special (1,1,0)-vertex with no 4-vertex across either 1-path ----

std::optional<ConfigurationMatch> match_l12(const Graph& g, const Classification& c) {
    for (int u2 = 0; u2 < g.vertex_count(); ++u2) {
        if (!c.of(u2).special) continue;
        std::vector<const IncidentPath*> one_paths;
        for (const auto& p : c.incident[u2]) {
            if (p.k == 1) one_paths.push_back(&p);
        }
        if (one_paths.size() != 2) continue;
        if (g.degree(one_paths[0]->far_end) != 3 || g.degree(one_paths[1]->far_end) != 3) {
            continue;
        }
        // u4 is the small (1,1,1) witness; u1 the other 2-neighbor.
        const IncidentPath* toward_small = nullptr;
        const IncidentPath* other = nullptr;
        for (const auto* p : one_paths) {
            if (!toward_small && c.of(p->far_end).flavor == Flavor::small) {
                toward_small = p;
            } else {
                other = p;
            }
        }
        if (!toward_small || !other) continue;
        int u3 = toward_small->first;
        int u4 = toward_small->far_end;
        int u1 = other->first;
        if (!all_distinct({u1, u2, u3, u4, other->far_end})) continue;
        ConfigurationMatch m;
        m.lemma = Lemma::L12;
        m.anchor = u2;
        m.removal = {u1, u2, u3};
        m.uncolor = {u4};
        m.gadget = GadgetId::a;
        m.gadget_map = {{"u1", u1}, {"u2", u2}, {"u3", u3}, {"u4", u4}};
        m.note_map = {{"u1", u1}, {"u2", u2}, {"u3", u3}, {"u4", u4}};
        return m;
    }
    return std::nullopt;
}

// --- L13 / L14 shared pieces -------------------------------------------------

// The two fork tips of a light (1,1,1)-vertex `v` seen across `via` from the
// 4-vertex: its other two 2-neighbors, ordered so the tip whose far end is a
// 3-vertex comes first (that position carries the larger profile).
struct ForkTips {
    int toward_3 = -1;  // tip mapped to the list-size-3 leaf
    int toward_4 = -1;  // tip mapped to the list-size-2 leaf
    std::vector<int> far_ends;
};

std::optional<ForkTips> fork_tips(const Graph& g, const Classification& c, int v, int via) {
    ForkTips out;
    std::vector<std::pair<int, int>> tips;  // (tip, far_end)
    for (const auto& p : c.incident[v]) {
        if (p.first == via) continue;
        if (p.k != 1) return std::nullopt;
        tips.emplace_back(p.first, p.far_end);
    }
    if (tips.size() != 2) return std::nullopt;
    // Prefer the genuinely 3-valent far end for the 3-list slot.
    if (g.degree(tips[0].second) != 3 && g.degree(tips[1].second) == 3) {
        std::swap(tips[0], tips[1]);
    }
    if (g.degree(tips[0].second) != 3) return std::nullopt;  // not medium/large
    out.toward_3 = tips[0].first;
    out.toward_4 = tips[1].first;
    out.far_ends = {tips[0].second, tips[1].second};
    return out;
}

// Kind of a distance-2-along-path vertex from the 4-vertex's point of view.
enum class FarKind { two_vertex, light_111, other };

FarKind far_kind(const Classification& c, const IncidentPath& p) {
    const VertexClass& k = c.of(p.second);
    if (k.degree == 2) return FarKind::two_vertex;
    if (k.flavor == Flavor::medium || k.flavor == Flavor::large) return FarKind::light_111;
    return FarKind::other;
}

// Builds the removal set and gadget mapping shared by L13 and L14. `arms`
// holds the light pair (v1 slot, v2 slot): per slot the incident path and,
// for (1,1,1) far vertices, the fork tips.
struct LightArm {
    const IncidentPath* path;
    std::optional<ForkTips> tips;  // engaged iff the far vertex is a light (1,1,1)
};

// Chooses v1 = 2-vertex slot first, as the written cases do.
bool order_arms(LightArm& a1, LightArm& a2) {
    bool a1_two = !a1.tips.has_value();
    bool a2_two = !a2.tips.has_value();
    if (!a1_two && a2_two) std::swap(a1, a2);
    return true;
}

}  // namespace

// --- L13: a 4-vertex with four 1+-paths, two light far vertices and a third
// of degree at most 3 ---------------------------------------------------------

namespace {

std::optional<ConfigurationMatch> match_l13(const Graph& g, const Classification& c) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) != 4) continue;
        const auto& inc = c.incident[u];
        if (inc.size() != 4) continue;
        bool shape_ok = std::all_of(inc.begin(), inc.end(),
                                    [](const IncidentPath& p) { return p.k == 1 || p.k == 2; });
        if (!shape_ok) continue;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (far_kind(c, inc[i]) == FarKind::other) continue;
                if (far_kind(c, inc[j]) == FarKind::other) continue;
                std::vector<int> rest;
                for (int r = 0; r < 4; ++r) {
                    if (r != i && r != j) rest.push_back(r);
                }
                for (int pick : {0, 1}) {
                    int r3 = rest[pick], r4 = rest[1 - pick];
                    if (g.degree(inc[r3].second) > 3) continue;

                    LightArm a1{&inc[i], std::nullopt}, a2{&inc[j], std::nullopt};
                    if (far_kind(c, inc[i]) == FarKind::light_111) {
                        a1.tips = fork_tips(g, c, inc[i].second, inc[i].first);
                        if (!a1.tips) continue;
                    }
                    if (far_kind(c, inc[j]) == FarKind::light_111) {
                        a2.tips = fork_tips(g, c, inc[j].second, inc[j].first);
                        if (!a2.tips) continue;
                    }
                    order_arms(a1, a2);

                    ConfigurationMatch m;
                    m.lemma = Lemma::L13;
                    m.anchor = u;
                    m.removal = {u, inc[0].first, inc[1].first, inc[2].first, inc[3].first,
                                 a1.path->second, a2.path->second};
                    m.note_map = {{"u", u},
                                  {"u3", inc[r3].first},
                                  {"v3", inc[r3].second},
                                  {"u4", inc[r4].first},
                                  {"v4", inc[r4].second},
                                  {"v1", a1.path->second},
                                  {"v2", a2.path->second}};
                    if (!a1.tips && !a2.tips) {
                        m.gadget = GadgetId::b;
                        m.gadget_map = {{"u3", u},
                                        {"u1", inc[r3].first},
                                        {"u2", inc[r4].first},
                                        {"u3'", a1.path->first},
                                        {"u3''", a1.path->second},
                                        {"u4", a2.path->first},
                                        {"u5", a2.path->second}};
                    } else if (a1.tips && a2.tips) {
                        m.gadget = GadgetId::d;
                        for (int tip : {a1.tips->toward_3, a1.tips->toward_4,
                                        a2.tips->toward_3, a2.tips->toward_4}) {
                            m.removal.push_back(tip);
                        }
                        m.gadget_map = {{"u3", u},
                                        {"u1", inc[r3].first},
                                        {"u2", inc[r4].first},
                                        {"u3'", a1.path->first},
                                        {"u3''", a1.path->second},
                                        {"v3", a1.tips->toward_3},
                                        {"v3'", a1.tips->toward_4},
                                        {"u4", a2.path->first},
                                        {"u5", a2.path->second},
                                        {"v5", a2.tips->toward_3},
                                        {"v5'", a2.tips->toward_4}};
                    } else {
                        // a1 is the 2-vertex arm after ordering; a2 carries the fork.
                        m.gadget = GadgetId::c;
                        m.removal.push_back(a2.tips->toward_3);
                        m.removal.push_back(a2.tips->toward_4);
                        m.gadget_map = {{"u3", u},
                                        {"u1", inc[r3].first},
                                        {"u2", inc[r4].first},
                                        {"u4", a1.path->first},
                                        {"u5", a1.path->second},
                                        {"u3'", a2.path->first},
                                        {"u3''", a2.path->second},
                                        {"v3", a2.tips->toward_3},
                                        {"v3'", a2.tips->toward_4}};
                    }
                    if (!all_distinct(m.removal)) continue;
                    return m;
                }
            }
        }
    }
    return std::nullopt;
}

// --- L14: a 4-vertex with a 3-neighbor, three 1+-paths, two light far
// vertices and a prohibited third ---------------------------------------------

std::optional<ConfigurationMatch> match_l14(const Graph& g, const Classification& c) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) != 4) continue;
        const auto& inc = c.incident[u];
        std::vector<const IncidentPath*> paths;
        const IncidentPath* zero = nullptr;
        bool shape_ok = true;
        for (const auto& p : inc) {
            if (p.k == 0) {
                if (zero) shape_ok = false;  // needs exactly one 0-path
                zero = &p;
            } else if (p.k == 1 || p.k == 2) {
                paths.push_back(&p);
            } else {
                shape_ok = false;
            }
        }
        if (!shape_ok || !zero || paths.size() != 3) continue;
        if (g.degree(zero->far_end) != 3) continue;
        int t = zero->far_end;

        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                if (far_kind(c, *paths[i]) == FarKind::other) continue;
                if (far_kind(c, *paths[j]) == FarKind::other) continue;
                int r = 3 - i - j;
                const IncidentPath& third = *paths[r];
                const VertexClass& v3c = c.of(third.second);

                bool prohibited = v3c.degree == 2 || v3c.special || v3c.is({1, 1, 1});
                if (!prohibited) continue;
                if (v3c.flavor == Flavor::small) {
                    throw InternalCheckFailure(
                        "small (1,1,1)-vertex across a 1-path from a 4-vertex");
                }

                LightArm a1{paths[i], std::nullopt}, a2{paths[j], std::nullopt};
                if (far_kind(c, *paths[i]) == FarKind::light_111) {
                    a1.tips = fork_tips(g, c, paths[i]->second, paths[i]->first);
                    if (!a1.tips) continue;
                }
                if (far_kind(c, *paths[j]) == FarKind::light_111) {
                    a2.tips = fork_tips(g, c, paths[j]->second, paths[j]->first);
                    if (!a2.tips) continue;
                }
                order_arms(a1, a2);

                ConfigurationMatch m;
                m.lemma = Lemma::L14;
                m.anchor = u;
                m.note_map = {{"u", u},
                              {"t", t},
                              {"u3", third.first},
                              {"v3", third.second},
                              {"v1", a1.path->second},
                              {"v2", a2.path->second}};

                bool huge = v3c.flavor == Flavor::huge;
                // N'(v3): for a 3-valent non-huge v3, the 2-neighbor v whose
                // far end is another 3-vertex; huge and 2-valent v3 take none.
                int v = -1;
                if (v3c.degree == 3 && !huge) {
                    for (const auto& p : c.incident[third.second]) {
                        if (p.first == third.first) continue;
                        if (p.k == 1 && g.degree(p.far_end) == 3) {
                            v = p.first;
                            break;
                        }
                    }
                    if (v < 0) continue;  // distinctness/shape guard
                }

                std::vector<int> base = {u,
                                         a1.path->first,
                                         a2.path->first,
                                         third.first,
                                         a1.path->second,
                                         a2.path->second,
                                         third.second};
                auto add_tips = [&](std::vector<int>& into) {
                    if (a1.tips) {
                        into.push_back(a1.tips->toward_3);
                        into.push_back(a1.tips->toward_4);
                    }
                    if (a2.tips) {
                        into.push_back(a2.tips->toward_3);
                        into.push_back(a2.tips->toward_4);
                    }
                };

                // The three written shapes: both arms plain, one fork, two forks.
                GadgetId plain[3] = {GadgetId::e, GadgetId::f, GadgetId::g};
                GadgetId with_v[3] = {GadgetId::h, GadgetId::i, GadgetId::j};
                int forks = (a1.tips ? 1 : 0) + (a2.tips ? 1 : 0);

                if (huge || v3c.degree == 2) {
                    m.gadget = plain[forks];
                } else {
                    m.gadget = with_v[forks];
                }

                m.removal = base;
                add_tips(m.removal);
                if (v >= 0) m.removal.push_back(v);
                if (huge) {
                    // Remove everything except v3 itself, then uncolor it.
                    m.removal.erase(std::find(m.removal.begin(), m.removal.end(), third.second));
                    m.uncolor = {third.second};
                }
                std::vector<int> named = m.removal;
                named.insert(named.end(), m.uncolor.begin(), m.uncolor.end());
                if (!all_distinct(named)) continue;  // only possible below girth 10

                m.gadget_map = {{"u3", u},
                                {"u2" , third.first},
                                {"u1", third.second}};
                if (v >= 0) m.gadget_map.emplace_back("u0", v);
                if (!a1.tips && !a2.tips) {
                    m.gadget_map.emplace_back("u3'", a1.path->first);
                    m.gadget_map.emplace_back("u3''", a1.path->second);
                    m.gadget_map.emplace_back("u4", a2.path->first);
                    m.gadget_map.emplace_back("u5", a2.path->second);
                } else if (a1.tips && a2.tips) {
                    m.gadget_map.emplace_back("u3'", a1.path->first);
                    m.gadget_map.emplace_back("u3''", a1.path->second);
                    m.gadget_map.emplace_back("v3", a1.tips->toward_3);
                    m.gadget_map.emplace_back("v3'", a1.tips->toward_4);
                    m.gadget_map.emplace_back("u4", a2.path->first);
                    m.gadget_map.emplace_back("u5", a2.path->second);
                    m.gadget_map.emplace_back("v5", a2.tips->toward_3);
                    m.gadget_map.emplace_back("v5'", a2.tips->toward_4);
                } else {
                    // a1 plain, a2 forked.
                    m.gadget_map.emplace_back("u4", a1.path->first);
                    m.gadget_map.emplace_back("u5", a1.path->second);
                    m.gadget_map.emplace_back("u3'", a2.path->first);
                    m.gadget_map.emplace_back("u3''", a2.path->second);
                    m.gadget_map.emplace_back("v3", a2.tips->toward_3);
                    m.gadget_map.emplace_back("v3'", a2.tips->toward_4);
                }
                return m;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ConfigurationMatch> find_configuration(const Graph& g) {
    if (auto m = match_l8(g)) return m;
    Classification c = classify_graph(g);
    if (auto m = match_l9(c)) return m;
    if (auto m = match_l10(g, c)) return m;
    if (auto m = match_l11(g, c)) return m;
    if (auto m = match_l12(g, c)) return m;
    if (auto m = match_l13(g, c)) return m;
    if (auto m = match_l14(g, c)) return m;
    return std::nullopt;
}

Reduction reduce(const Graph& g, const ConfigurationMatch& m) {
    std::vector<char> removed(g.vertex_count(), 0);
    for (int v : m.removal) {
        if (v < 0 || v >= g.vertex_count() || removed[v]) {
            throw PreconditionError("stale configuration match");
        }
        removed[v] = 1;
    }
    if (m.removal.empty()) throw PreconditionError("empty removal set");
    Reduction r;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!removed[v]) r.kept.push_back(v);
    }
    r.reduced = induced_subgraph(g, r.kept);
    return r;
}

namespace {

// Remaining colors of host vertex v: its list minus every color already
// placed within distance two in the host graph.
std::vector<int> remaining_list(const Graph& g, const std::vector<std::vector<int>>& lists,
                                const Coloring& c, int v) {
    std::vector<int> out = lists[v];
    for (int u : two_distance_neighbors(g, v)) {
        if (c[u] != kUncolored) {
            out.erase(std::remove(out.begin(), out.end(), c[u]), out.end());
        }
    }
    return out;
}

bool within_two(const Graph& g, int a, int b) {
    if (g.has_edge(a, b)) return true;
    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);
    std::size_t i = 0, j = 0;
    while (i < na.size() && j < nb.size()) {
        if (na[i] == nb[j]) return true;
        na[i] < nb[j] ? ++i : ++j;
    }
    return false;
}

}  // namespace

void extend_coloring(const Graph& g, const ConfigurationMatch& m,
                     const std::vector<std::vector<int>>& lists, Coloring& coloring) {
    for (int v : m.uncolor) coloring[v] = kUncolored;
    for (int v : m.removal) coloring[v] = kUncolored;

    for (int v : m.greedy_first) {
        std::vector<int> rem = remaining_list(g, lists, coloring, v);
        if (rem.empty()) {
            throw InternalCheckFailure("greedy extension stuck at vertex " + std::to_string(v) +
                                       " (" + to_string(m.lemma) + ")");
        }
        coloring[v] = rem.front();
    }

    std::vector<int> rest;
    for (int v : m.removal) {
        if (coloring[v] == kUncolored) rest.push_back(v);
    }
    for (int v : m.uncolor) rest.push_back(v);
    std::sort(rest.begin(), rest.end());

    ListAssignment sub;
    sub.lists.resize(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
        sub.lists[i] = remaining_list(g, lists, coloring, rest[i]);
    }

    if (m.gadget) {
        const Gadget& gad = gadget(*m.gadget);
        if (m.gadget_map.size() != rest.size()) {
            throw InternalCheckFailure("gadget map does not cover the extension instance");
        }
        auto pos_of = [&](int host) {
            auto it = std::lower_bound(rest.begin(), rest.end(), host);
            if (it == rest.end() || *it != host) {
                throw InternalCheckFailure("gadget map names a vertex outside the instance");
            }
            return static_cast<int>(it - rest.begin());
        };
        // Sufficiency of the remaining lists against the figure's size labels:
        // this is exactly the counting that justifies each size label.
        for (const auto& [label, host] : m.gadget_map) {
            int need = gad.profile.sizes[gad.index(label)];
            int have = static_cast<int>(sub.lists[pos_of(host)].size());
            if (have < need) {
                throw InternalCheckFailure("remaining list at " + std::to_string(host) + " (" +
                                           label + " of gadget " + to_string(*m.gadget) +
                                           ") has " + std::to_string(have) + " < " +
                                           std::to_string(need) + " colors");
            }
        }
        // The host-square structure of the instance must be the gadget's
        // constraint graph, label for label.
        for (const auto& [la, ha] : m.gadget_map) {
            for (const auto& [lb, hb] : m.gadget_map) {
                if (la >= lb) continue;
                bool host_adj = within_two(g, ha, hb);
                bool gad_adj = gad.constraints.has_edge(gad.index(la), gad.index(lb));
                if (host_adj != gad_adj) {
                    throw InternalCheckFailure("extension instance is not the gadget: " + la +
                                               "-" + lb + " mismatch");
                }
            }
        }
    }

    Graph constraints(static_cast<int>(rest.size()));
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            if (within_two(g, rest[i], rest[j])) {
                constraints.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    auto solved = list_color(constraints, sub);
    if (!solved) {
        throw InternalCheckFailure("extension instance unsolvable (" + to_string(m.lemma) + ")");
    }
    for (std::size_t i = 0; i < rest.size(); ++i) coloring[rest[i]] = (*solved)[i];
}

namespace {

class ConstructiveSolver {
  public:
    ConstructiveSolver(const ConstructiveOptions& opts) : opts_(opts) {}

    std::vector<ReductionStep> trace;

    Coloring solve(const Graph& g, const std::vector<std::vector<int>>& lists) {
        const int n = g.vertex_count();
        if (n == 0) return {};
        auto comps = connected_components(g);
        if (comps.size() > 1) {
            Coloring c(n, kUncolored);
            for (const auto& comp : comps) {
                Graph sub = induced_subgraph(g, comp);
                std::vector<std::vector<int>> sub_lists(comp.size());
                for (std::size_t i = 0; i < comp.size(); ++i) sub_lists[i] = lists[comp[i]];
                Coloring sc = solve(sub, sub_lists);
                for (std::size_t i = 0; i < comp.size(); ++i) c[comp[i]] = sc[i];
            }
            return c;
        }

        bool all_two = g.min_degree() == 2 && g.max_degree() == 2;
        if (n <= opts_.base_threshold || all_two) {
            ListAssignment L;
            L.lists = lists;
            auto direct = list_color(square(g), L);
            if (!direct) {
                throw TheoremFalsified("base instance admits no coloring", to_edge_list(g));
            }
            return *direct;
        }

        auto m = find_configuration(g);
        if (!m) {
            throw TheoremFalsified("no reducible configuration on a non-base instance",
                                   to_edge_list(g));
        }
        trace.push_back({m->lemma, m->anchor, n});

        Reduction r = reduce(g, *m);
        std::vector<std::vector<int>> sub_lists(r.kept.size());
        for (std::size_t i = 0; i < r.kept.size(); ++i) sub_lists[i] = lists[r.kept[i]];
        Coloring sub = solve(r.reduced, sub_lists);

        Coloring c(n, kUncolored);
        for (std::size_t i = 0; i < r.kept.size(); ++i) c[r.kept[i]] = sub[i];
        extend_coloring(g, *m, lists, c);
        return c;
    }

  private:
    ConstructiveOptions opts_;
};

}  // namespace

ConstructiveResult color_constructive(const Graph& g, const ListAssignment& L,
                                      const ConstructiveOptions& opts) {
    const int n = g.vertex_count();
    if (static_cast<int>(L.lists.size()) != n) {
        throw PreconditionError("list assignment does not match vertex count");
    }
    for (const auto& l : L.lists) {
        if (static_cast<int>(l.size()) < 6) {
            throw PreconditionError("every list must hold at least 6 colors");
        }
    }
    if (g.max_degree() > 4) throw PreconditionError("max degree exceeds 4");
    int need_girth = opts.accept_girth_9 ? 9 : 10;
    auto gi = girth(g);
    if (gi && *gi < need_girth) {
        throw PreconditionError("girth " + std::to_string(*gi) + " below required " +
                                std::to_string(need_girth));
    }
    if (n >= 1 && !(mad_exact(g) < Rational(5, 2))) {
        throw PreconditionError("mad(G) is not below 5/2");
    }

    ConstructiveSolver solver(opts);
    ConstructiveResult res;
    res.coloring = solver.solve(g, L.lists);
    res.trace = std::move(solver.trace);
    if (n > 0) {
        if (verify_coloring(g, res.coloring, 2)) {
            throw InternalCheckFailure("constructive coloring failed verification");
        }
        for (int v = 0; v < n; ++v) {
            const auto& lv = L.lists[v];
            if (std::find(lv.begin(), lv.end(), res.coloring[v]) == lv.end()) {
                throw InternalCheckFailure("constructive coloring left its list");
            }
        }
    }
    return res;
}

}  // namespace tdc
