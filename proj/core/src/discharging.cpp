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

#include "tdc/discharging.hpp"

#include <algorithm>

#include "tdc/errors.hpp"
#include "tdc/mad.hpp"

namespace tdc {

Rational ChargeLedger::total() const {
    Rational t;
    for (const auto& r : final_charge) t += r;
    return t;
}

std::vector<Rational> initial_charges(const Graph& g) {
    std::vector<Rational> mu(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) mu[v] = Rational(4 * g.degree(v) - 10);
    return mu;
}

namespace {

// (1,1^-,0)-vertex: a 3-vertex whose paths are a 1-path, a (<=1)-path and a
// 0-path.
bool is_11minus0(const VertexClass& c) { return c.is({1, 1, 0}) || c.is({1, 0, 0}); }

}  // namespace

ChargeLedger run_discharging(const Graph& g) {
    if (g.vertex_count() > 0 && g.min_degree() < 2) {
        throw PreconditionError("discharging requires minimum degree >= 2");
    }
    if (g.max_degree() > 4) {
        throw PreconditionError("discharging requires maximum degree <= 4");
    }

    Classification cls = classify_graph(g);
    ChargeLedger ledger;
    ledger.initial = initial_charges(g);

    for (const auto& comp : cls.paths.two_regular_components) {
        for (int v : comp) ledger.two_regular_vertices.push_back(v);
    }
    std::sort(ledger.two_regular_vertices.begin(), ledger.two_regular_vertices.end());

    // R0: both endpoint slots of every 1+-path pay 1 to each internal vertex.
    for (int t = 0; t < static_cast<int>(cls.paths.threads.size()); ++t) {
        const PathThread& th = cls.paths.threads[t];
        if (th.k() == 0) continue;
        for (int side = 0; side < 2; ++side) {
            for (int internal : th.internals) {
                ledger.transfers.push_back({th.endpoints[side], internal, Rational(1), "R0", t});
            }
        }
    }

    // R1: every 4-vertex pays 1 to each 3-valent neighbor.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4) continue;
        for (int w : g.neighbors(v)) {
            if (g.degree(w) == 3) {
                ledger.transfers.push_back({v, w, Rational(1), "R1", -1});
            }
        }
    }

    // R2: payments along 1-paths, by the receiving endpoint's class.
    for (int t = 0; t < static_cast<int>(cls.paths.threads.size()); ++t) {
        const PathThread& th = cls.paths.threads[t];
        if (th.k() != 1) continue;
        for (int side = 0; side < 2; ++side) {
            int giver = th.endpoints[side];
            int recv = th.endpoints[1 - side];
            const VertexClass& gc = cls.of(giver);
            const VertexClass& rc = cls.of(recv);
            if (rc.flavor == Flavor::small && is_11minus0(gc)) {
                ledger.transfers.push_back({giver, recv, Rational(1, 3), "R2i", t});
            }
            if (g.degree(giver) == 4) {
                if (rc.flavor == Flavor::medium) {
                    ledger.transfers.push_back({giver, recv, Rational(1), "R2ii", t});
                } else if (rc.flavor == Flavor::large) {
                    ledger.transfers.push_back({giver, recv, Rational(1, 2), "R2iii", t});
                } else if (rc.flavor == Flavor::huge) {
                    ledger.transfers.push_back({giver, recv, Rational(1, 3), "R2iv", t});
                } else if (rc.special) {
                    ledger.transfers.push_back({giver, recv, Rational(1, 3), "R2v", t});
                }
            }
        }
    }

    ledger.final_charge = ledger.initial;
    for (const auto& tr : ledger.transfers) {
        ledger.final_charge[tr.from] -= tr.amount;
        ledger.final_charge[tr.to] += tr.amount;
    }

    Rational before, after;
    for (const auto& r : ledger.initial) before += r;
    for (const auto& r : ledger.final_charge) after += r;
    if (before != after) {
        throw InternalCheckFailure("discharging did not preserve the total charge");
    }
    return ledger;
}

namespace {

struct CaseOutcome {
    std::string case_id;
    Rational bound;
    bool in_analysis = true;
    std::string note;
};

CaseOutcome classify_case(const Graph& g, const Classification& cls, int u) {
    const VertexClass& c = cls.of(u);
    CaseOutcome out;

    if (c.two_regular) {
        out.case_id = "outside";
        out.bound = Rational(0);
        out.in_analysis = false;
        out.note = "2-regular component; excluded by the connectivity/Delta hypotheses";
        return out;
    }

    if (c.degree == 2) {
        out.case_id = "1.two-vertex";
        out.bound = Rational(0);
        return out;
    }

    if (c.degree == 3) {
        if (!c.signature.empty() && c.signature.front() >= 3) {
            out = {"outside", Rational(0), false, "incident 3+-path; L9 applies"};
            return out;
        }
        if (!c.signature.empty() && c.signature.front() == 2) {
            out = {"outside", Rational(0), false, "3-vertex on a 2-path; L10 applies"};
            return out;
        }
        if (c.is({1, 1, 1})) {
            switch (c.flavor) {
                case Flavor::small: {
                    // All three far ends must pay 1/3; they cannot be
                    // (1,1,1)-vertices themselves.
                    for (const auto& p : cls.incident[u]) {
                        if (cls.of(p.far_end).is({1, 1, 1})) {
                            out = {"outside", Rational(0), false,
                                   "small (1,1,1) sharing a 2-neighbor with a (1,1,1); L11"};
                            return out;
                        }
                    }
                    out = {"2.111-small", Rational(0), true, ""};
                    return out;
                }
                case Flavor::medium: out = {"2.111-medium", Rational(0), true, ""}; return out;
                case Flavor::large: out = {"2.111-large", Rational(0), true, ""}; return out;
                case Flavor::huge: out = {"2.111-huge", Rational(0), true, ""}; return out;
                default: break;
            }
        }
        if (c.is({1, 1, 0})) {
            int t = -1;
            std::vector<int> fars;
            for (const auto& p : cls.incident[u]) {
                if (p.k == 0) t = p.far_end;
                else fars.push_back(p.far_end);
            }
            bool small_far = std::any_of(fars.begin(), fars.end(), [&](int f) {
                return cls.of(f).flavor == Flavor::small;
            });
            if (!small_far) {
                out = {"2.110-no-small", Rational(0), true, ""};
                return out;
            }
            if (g.degree(t) == 4) {
                out = {"2.110-4-neighbor", Rational(1, 3), true, ""};
                return out;
            }
            // Special vertex: the verification needs a 4-vertex across the
            // other 1-path (that is exactly the reduced configuration of L12).
            bool four_far = std::any_of(fars.begin(), fars.end(),
                                        [&](int f) { return g.degree(f) == 4; });
            if (!four_far) {
                out = {"outside", Rational(0), false,
                       "special (1,1,0) with no 4-vertex across a 1-path; L12"};
                return out;
            }
            out = {"2.110-special", Rational(0), true, ""};
            return out;
        }
        if (c.is({1, 0, 0})) {
            out = {"2.100", Rational(2, 3), true, ""};
            return out;
        }
        out = {"2.000", Rational(2), true, ""};
        return out;
    }

    // Degree 4.
    if (!c.signature.empty() && c.signature.front() >= 3) {
        out = {"outside", Rational(0), false, "incident 3+-path; L9 applies"};
        return out;
    }
    const auto& inc = cls.incident[u];
    int zero_paths = 0;
    int light_far = 0;
    std::vector<const IncidentPath*> long_paths;
    for (const auto& p : inc) {
        if (p.k == 0) {
            ++zero_paths;
        } else {
            long_paths.push_back(&p);
            if (cls.of(p.second).light) ++light_far;
        }
    }

    if (zero_paths == 0) {
        if (light_far <= 1) {
            out = {"3.1111-few-light", Rational(0), true, ""};
            return out;
        }
        // Two or more light far vertices: the other two must be 4-vertices.
        int heavy = 0;
        for (const auto* p : long_paths) {
            if (g.degree(p->second) >= 4) ++heavy;
        }
        if (heavy < 2) {
            out = {"outside", Rational(0), false,
                   "two light far vertices without two 4-valent ones; L13"};
            return out;
        }
        out = {"3.1111-two-light", Rational(0), true, ""};
        return out;
    }

    if (zero_paths == 1) {
        int t = -1;
        for (const auto& p : inc) {
            if (p.k == 0) t = p.far_end;
        }
        if (g.degree(t) == 4) {
            out = {"3.1110-4-neighbor", Rational(0), true, ""};
            return out;
        }
        if (light_far <= 1) {
            out = {"3.1110-few-light", Rational(1, 3), true, ""};
            return out;
        }
        // Two light far vertices: the third must be a non-special (1,1,0),
        // a (1,0,0) or a 4-vertex.
        bool third_ok = false;
        for (const auto* p : long_paths) {
            const VertexClass& fc = cls.of(p->second);
            if (fc.light) continue;
            bool prohibited = fc.degree == 2 || fc.special || fc.is({1, 1, 1});
            if (!prohibited) third_ok = true;
        }
        if (light_far >= 3 || !third_ok) {
            out = {"outside", Rational(0), false,
                   "two light far vertices with a prohibited third; L14"};
            return out;
        }
        out = {"3.1110-two-light", Rational(0), true, ""};
        return out;
    }

    out = {"3.xx00", Rational(0), true, ""};
    return out;
}

}  // namespace

CertifyReport certify_nonnegative(const Graph& g, const ChargeLedger& ledger) {
    if (static_cast<int>(ledger.final_charge.size()) != g.vertex_count()) {
        throw PreconditionError("ledger does not match graph");
    }
    Classification cls = classify_graph(g);
    CertifyReport rep;
    rep.all_nonnegative = true;
    rep.all_in_analysis = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        CaseOutcome c = classify_case(g, cls, v);
        VertexCertificate row;
        row.v = v;
        row.mu = ledger.initial[v];
        row.mu_star = ledger.final_charge[v];
        row.case_id = c.case_id;
        row.bound = c.bound;
        row.in_case_analysis = c.in_analysis;
        row.note = c.note;
        row.ok = c.in_analysis && row.mu_star >= c.bound;
        if (row.mu_star < Rational(0)) rep.all_nonnegative = false;
        if (!c.in_analysis) rep.all_in_analysis = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

EquationOneResult check_equation_1(const Graph& g) {
    EquationOneResult r;
    r.sum = Rational(8 * static_cast<std::int64_t>(g.edge_count()) -
                     10 * static_cast<std::int64_t>(g.vertex_count()));
    if (g.vertex_count() == 0) {
        r.consistent = true;
        return r;
    }
    bool sparse = mad_exact(g) < Rational(5, 2);
    r.consistent = !sparse || r.sum < Rational(0);
    return r;
}

}  // namespace tdc
