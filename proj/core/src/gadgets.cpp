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

#include "tdc/gadgets.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "tdc/errors.hpp"
#include "tdc/rng.hpp"

namespace tdc {

namespace {

struct GadgetSpec {
    const char* labels;   // comma separated
    const char* edges;    // comma separated "x-y" label pairs
    const char* profile;  // comma separated ints, same order as labels
};

// Vertex labels, tree edges and list-size profile for each gadget. Gadgets
// c,d augment b with leaf forks; f,g augment e; i,j augment h.
const GadgetSpec kSpecs[10] = {
    // a: the 4-path
    {"u1,u2,u3,u4", "u1-u2,u2-u3,u3-u4", "2,2,3,2"},
    // b: 4-star at u3 with two length-2 arms
    {"u1,u2,u3,u4,u5,u3',u3''", "u1-u3,u2-u3,u3-u4,u4-u5,u3-u3',u3'-u3''", "3,2,3,5,2,5,2"},
    // c: b plus a leaf fork on u3''
    {"u1,u2,u3,u4,u5,u3',u3'',v3,v3'",
     "u1-u3,u2-u3,u3-u4,u4-u5,u3-u3',u3'-u3'',u3''-v3,u3''-v3'", "3,2,4,5,2,6,4,3,2"},
    // d: c plus a leaf fork on u5
    {"u1,u2,u3,u4,u5,u3',u3'',v3,v3',v5,v5'",
     "u1-u3,u2-u3,u3-u4,u4-u5,u3-u3',u3'-u3'',u3''-v3,u3''-v3',u5-v5,u5-v5'",
     "3,2,4,6,4,6,4,3,2,3,2"},
    // e: 3-star at u3, three length-2 arms
    {"u1,u2,u3,u4,u5,u3',u3''", "u1-u2,u2-u3,u3-u4,u4-u5,u3-u3',u3'-u3''", "2,3,3,4,2,4,2"},
    // f: e plus a leaf fork on u3''
    {"u1,u2,u3,u4,u5,u3',u3'',v3,v3'",
     "u1-u2,u2-u3,u3-u4,u4-u5,u3-u3',u3'-u3'',u3''-v3,u3''-v3'", "2,3,3,4,2,5,4,3,2"},
    // g: f plus a leaf fork on u5
    {"u1,u2,u3,u4,u5,u3',u3'',v3,v3',v5,v5'",
     "u1-u2,u2-u3,u3-u4,u4-u5,u3-u3',u3'-u3'',u3''-v3,u3''-v3',u5-v5,u5-v5'",
     "2,3,3,5,4,5,4,3,2,3,2"},
    // h: e with the u1 arm extended by u0
    {"u0,u1,u2,u3,u4,u5,u3',u3''", "u0-u1,u1-u2,u2-u3,u3-u4,u4-u5,u3-u3',u3'-u3''",
     "2,2,4,3,4,2,4,2"},
    // i: h plus a leaf fork on u3''
    {"u0,u1,u2,u3,u4,u5,u3',u3'',v3,v3'",
     "u0-u1,u1-u2,u2-u3,u3-u4,u4-u5,u3-u3',u3'-u3'',u3''-v3,u3''-v3'", "2,2,4,3,4,2,5,4,3,2"},
    // j: i plus a leaf fork on u5
    {"u0,u1,u2,u3,u4,u5,u3',u3'',v3,v3',v5,v5'",
     "u0-u1,u1-u2,u2-u3,u3-u4,u4-u5,u3-u3',u3'-u3'',u3''-v3,u3''-v3',u5-v5,u5-v5'",
     "2,2,4,3,5,4,5,4,3,2,3,2"},
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
}

Gadget make_gadget(GadgetId id) {
    const GadgetSpec& spec = kSpecs[static_cast<int>(id)];
    Gadget g;
    g.id = id;
    g.labels = split(spec.labels, ',');
    g.graph = Graph(static_cast<int>(g.labels.size()));
    for (const auto& e : split(spec.edges, ',')) {
        auto parts = split(e, '-');
        g.graph.add_edge(g.index(parts[0]), g.index(parts[1]));
    }
    g.constraints = square(g.graph);
    for (const auto& p : split(spec.profile, ',')) g.profile.sizes.push_back(std::stoi(p));
    return g;
}

const std::array<Gadget, 10>& table() {
    static const std::array<Gadget, 10> t = [] {
        std::array<Gadget, 10> a;
        for (int i = 0; i < 10; ++i) a[i] = make_gadget(static_cast<GadgetId>(i));
        return a;
    }();
    return t;
}

}  // namespace

GadgetId gadget_id_from_string(std::string_view s) {
    if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'j') {
        return static_cast<GadgetId>(s[0] - 'a');
    }
    throw PreconditionError("unknown gadget id: " + std::string(s));
}

std::string to_string(GadgetId id) { return std::string(1, static_cast<char>('a' + static_cast<int>(id))); }

const std::vector<GadgetId>& all_gadget_ids() {
    static const std::vector<GadgetId> ids = [] {
        std::vector<GadgetId> v;
        for (int i = 0; i < 10; ++i) v.push_back(static_cast<GadgetId>(i));
        return v;
    }();
    return ids;
}

int Gadget::index(std::string_view label) const {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (labels[i] == label) return i;
    }
    throw PreconditionError("gadget " + to_string(id) + " has no vertex " + std::string(label));
}

const Gadget& gadget(GadgetId id) { return table()[static_cast<int>(id)]; }

std::string BranchTrace::text() const {
    std::ostringstream out;
    out << "branches:";
    for (const auto& b : branches) out << ' ' << b;
    out << '\n';
    for (const auto& s : steps) out << "  " << s << '\n';
    return out.str();
}

namespace {

// ---------------------------------------------------------------------------
// Procedure engine. All coloring acts on the top-level gadget's vertex space;
// a View names the vertices of the (sub-)gadget currently being argued about.
// Sub-procedures run on an isomorphic subtree after the colored outside
// vertices have been folded into the remaining lists.
// ---------------------------------------------------------------------------

using Set = std::vector<int>;  // sorted color set

Set set_minus(const Set& a, const Set& b) {
    Set out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Set set_and(const Set& a, const Set& b) {
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Set set_or(const Set& a, const Set& b) {
    Set out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class ProcedureRunner {
  public:
    ProcedureRunner(GadgetId id, const ListAssignment& input) : top_(gadget(id)) {
        const int n = top_.size();
        if (static_cast<int>(input.lists.size()) != n) {
            throw PreconditionError("list assignment does not match gadget size");
        }
        lists_.resize(n);
        for (int v = 0; v < n; ++v) {
            Set l = input.lists[v];
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
            if (static_cast<int>(l.size()) < top_.profile.sizes[v]) {
                throw PreconditionError("list of " + top_.labels[v] + " smaller than profile");
            }
            l.resize(top_.profile.sizes[v]);  // trim extras from the high end
            lists_[v] = std::move(l);
        }
        color_.assign(n, kUncolored);
    }

    ProcedureResult run() {
        ProcedureResult res;
        try {
            View w;
            w.shape = &top_;
            w.to_host.resize(top_.size());
            std::iota(w.to_host.begin(), w.to_host.end(), 0);
            dispatch(top_.id, w, "");
            for (int v = 0; v < top_.size(); ++v) {
                if (color_[v] == kUncolored) {
                    throw ProcedureFailure("procedure left " + top_.labels[v] + " uncolored",
                                           trace_.text());
                }
            }
            res.ok = true;
            res.coloring = color_;
        } catch (const ProcedureFailure& f) {
            res.ok = false;
            res.failure = f.what();
        }
        res.trace = trace_;
        return res;
    }

  private:
    struct View {
        const Gadget* shape;       // gadget whose argument is being replayed
        std::vector<int> to_host;  // shape vertex -> top-level vertex
    };

    [[noreturn]] void fail(const std::string& msg) {
        throw ProcedureFailure("procedure step failed: " + msg, trace_.text());
    }

    void branch(const std::string& id) { trace_.branches.push_back(id); }

    int host(const View& w, const char* label) const { return w.to_host[w.shape->index(label)]; }

    const Set& list(const View& w, const char* label) const { return lists_[host(w, label)]; }

    // Colors still open for `label`: its list minus the colors of colored
    // vertices within distance two of it in the top-level gadget.
    Set avail(int hv) const {
        Set out = lists_[hv];
        for (int u : top_.constraints.neighbors(hv)) {
            if (color_[u] != kUncolored) {
                out.erase(std::remove(out.begin(), out.end(), color_[u]), out.end());
            }
        }
        return out;
    }

    void put(int hv, int c, const std::string& why) {
        if (std::find(lists_[hv].begin(), lists_[hv].end(), c) == lists_[hv].end()) {
            fail("color " + std::to_string(c) + " not in list of " + top_.labels[hv]);
        }
        for (int u : top_.constraints.neighbors(hv)) {
            if (color_[u] == c) {
                fail("color " + std::to_string(c) + " clashes with " + top_.labels[u]);
            }
        }
        color_[hv] = c;
        trace_.steps.push_back(top_.labels[hv] + " := " + std::to_string(c) + "  (" + why + ")");
    }

    // Smallest color of `from` that is still available for `label`.
    void color_from(const View& w, const char* label, const Set& from, const std::string& why) {
        int hv = host(w, label);
        Set ok = set_and(avail(hv), from);
        if (ok.empty()) fail("no color in the required set for " + top_.labels[hv]);
        put(hv, ok.front(), why);
    }

    void greedy(const View& w, std::initializer_list<const char*> order) {
        for (const char* label : order) {
            int hv = host(w, label);
            Set ok = avail(hv);
            if (ok.empty()) fail("no color left for " + top_.labels[hv]);
            put(hv, ok.front(), "greedy");
        }
    }

    // "color x and y with the same color c" (they must not see each other).
    void color_pair(const View& w, const char* a, const char* b, int c) {
        put(host(w, a), c, std::string("pair with ") + b);
        put(host(w, b), c, std::string("pair with ") + a);
    }

    // A fact the procedure derives from earlier claims. A violation
    // means the transcription or the argument is wrong; never fall through.
    void derived(bool condition, const std::string& what) {
        if (!condition) fail("derived fact violated: " + what);
    }

    // Enter the sub-gadget `sub` whose vertices map onto this view's labels
    // via `relabel` (pairs of sub-label -> host-side label). The remaining
    // lists of the mapped vertices are trimmed to the sub profile.
    View enter_sub(const View& w, GadgetId sub, const char* tag,
                   const std::vector<std::pair<const char*, const char*>>& relabel) {
        const Gadget& sg = gadget(sub);
        View nw;
        nw.shape = &sg;
        nw.to_host.assign(sg.size(), -1);
        for (auto [sub_label, host_label] : relabel) {
            nw.to_host[sg.index(sub_label)] = host(w, host_label);
        }
        for (int sv = 0; sv < sg.size(); ++sv) {
            if (nw.to_host[sv] < 0) fail("sub-gadget relabel incomplete");
        }
        // The sub shape must be the induced structure of the mapped vertices.
        for (auto [a, b] : sg.graph.edges()) {
            if (!top_.graph.has_edge(nw.to_host[a], nw.to_host[b])) {
                fail("sub-gadget edge missing in host");
            }
        }
        for (int sv = 0; sv < sg.size(); ++sv) {
            int hv = nw.to_host[sv];
            Set rem = avail(hv);
            if (static_cast<int>(rem.size()) < sg.profile.sizes[sv]) {
                fail("remaining list of " + top_.labels[hv] + " below sub-profile of " +
                     to_string(sub) + "." + sg.labels[sv]);
            }
            rem.resize(sg.profile.sizes[sv]);
            lists_[hv] = std::move(rem);
        }
        trace_.steps.push_back(std::string("continue via gadget ") + to_string(sub) + " [" + tag +
                               "]");
        return nw;
    }

    void dispatch(GadgetId id, const View& w, const std::string& prefix) {
        prefix_ = prefix;
        switch (id) {
            case GadgetId::a: return proc_i(w);
            case GadgetId::b: return proc_ii(w);
            case GadgetId::c: return proc_iii(w);
            case GadgetId::d: return proc_iv(w);
            case GadgetId::e: return proc_v(w);
            case GadgetId::f: return proc_vi(w);
            case GadgetId::g: return proc_vii(w);
            case GadgetId::h: return proc_viii(w);
            case GadgetId::i: return proc_ix(w);
            case GadgetId::j: return proc_x(w);
        }
        fail("unknown gadget");
    }

    void sub_dispatch(GadgetId id, const View& w) {
        std::string saved = prefix_;
        dispatch(id, w, saved + to_string(id) + "/");
        prefix_ = saved;
    }

    void claim_branch(const std::string& id) { branch(prefix_ + id); }

    // ---- the ten procedures -------------------------------------------------

    void proc_i(const View& w) {
        if (list(w, "u1") == list(w, "u2")) {
            claim_branch("i.lists-equal");
            color_from(w, "u3", set_minus(list(w, "u3"), list(w, "u2")), "u3 off L(u2)");
            greedy(w, {"u4", "u2", "u1"});
        } else {
            claim_branch("i.lists-differ");
            color_from(w, "u2", set_minus(list(w, "u2"), list(w, "u1")), "u2 off L(u1)");
            greedy(w, {"u4", "u3", "u1"});
        }
    }

    void proc_ii(const View& w) {
        Set c1 = set_and(list(w, "u5"), list(w, "u1"));
        if (!c1.empty()) {
            claim_branch("ii.u5-meets-u1");
            color_pair(w, "u1", "u5", c1.front());
            greedy(w, {"u2", "u3", "u3''", "u3'", "u4"});
            return;
        }
        Set c2 = set_and(list(w, "u5"), list(w, "u2"));
        if (!c2.empty()) {
            claim_branch("ii.u5-meets-u2");
            color_pair(w, "u2", "u5", c2.front());
            greedy(w, {"u1", "u3", "u3''", "u3'", "u4"});
            return;
        }
        Set c3 = set_and(list(w, "u5"), list(w, "u3'"));
        if (!c3.empty()) {
            claim_branch("ii.u5-meets-u3'");
            color_pair(w, "u3'", "u5", c3.front());
            greedy(w, {"u3''", "u3", "u2", "u1", "u4"});
            return;
        }
        Set c4 = set_and(list(w, "u5"), list(w, "u3"));
        if (!c4.empty()) {
            claim_branch("ii.u5-meets-u3");
            color_from(w, "u3", c4, "u3 from L(u5) cap L(u3)");
            greedy(w, {"u5", "u3''", "u2", "u1", "u4", "u3'"});
            return;
        }
        claim_branch("ii.u5-disjoint");
        greedy(w, {"u2", "u1", "u3", "u3''", "u3'", "u4", "u5"});
    }

    void proc_iii(const View& w) {
        Set escape = set_minus(list(w, "v3'"), list(w, "v3"));
        if (!escape.empty()) {
            claim_branch("iii.fork-escape");
            color_from(w, "v3'", escape, "v3' off L(v3)");
            View sub = enter_sub(w, GadgetId::b, "iii",
                                 {{"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u4"},
                                  {"u5", "u5"},
                                  {"u3'", "u3'"},
                                  {"u3''", "u3''"}});
            sub_dispatch(GadgetId::b, sub);
            greedy(w, {"v3"});
            return;
        }
        claim_branch("iii.fork-contained");
        Set pick = set_minus(list(w, "u3''"), list(w, "v3"));
        derived(!pick.empty(), "L(u3'') exceeds L(v3)");
        derived(set_and(pick, list(w, "v3'")).empty(), "x off L(v3') by containment");
        color_from(w, "u3''", pick, "u3'' off L(v3)");
        greedy(w, {"u2", "u1", "u3", "u5", "u4", "u3'", "v3'", "v3"});
    }

    void proc_iv(const View& w) {
        Set esc5 = set_minus(list(w, "v5'"), list(w, "v5"));
        if (!esc5.empty()) {
            claim_branch("iv.fork5-escape");
            color_from(w, "v5'", esc5, "v5' off L(v5)");
            View sub = enter_sub(w, GadgetId::c, "iv",
                                 {{"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u4"},
                                  {"u5", "u5"},
                                  {"u3'", "u3'"},
                                  {"u3''", "u3''"},
                                  {"v3", "v3"},
                                  {"v3'", "v3'"}});
            sub_dispatch(GadgetId::c, sub);
            greedy(w, {"v5"});
            return;
        }
        Set esc3 = set_minus(list(w, "v3'"), list(w, "v3"));
        if (!esc3.empty()) {
            claim_branch("iv.fork3-escape");
            color_from(w, "v3'", esc3, "v3' off L(v3)");
            // Mirror image: the surviving fork hangs off the u4-u5 arm.
            View sub = enter_sub(w, GadgetId::c, "iv-mirror",
                                 {{"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u3'"},
                                  {"u5", "u3''"},
                                  {"u3'", "u4"},
                                  {"u3''", "u5"},
                                  {"v3", "v5"},
                                  {"v3'", "v5'"}});
            sub_dispatch(GadgetId::c, sub);
            greedy(w, {"v3"});
            return;
        }
        claim_branch("iv.forks-contained");
        Set pick3 = set_minus(list(w, "u3''"), list(w, "v3"));
        derived(!pick3.empty(), "L(u3'') exceeds L(v3)");
        derived(set_and(pick3, list(w, "v3'")).empty(), "x off L(v3') by containment");
        color_from(w, "u3''", pick3, "u3'' off L(v3)");
        Set pick5 = set_minus(list(w, "u5"), list(w, "v5"));
        derived(!pick5.empty(), "L(u5) exceeds L(v5)");
        derived(set_and(pick5, list(w, "v5'")).empty(), "y off L(v5') by containment");
        color_from(w, "u5", pick5, "u5 off L(v5)");
        greedy(w, {"u3", "u2", "u1", "u3'", "v3'", "v3", "u4", "v5'", "v5"});
    }

    void proc_v(const View& w) {
        Set c1 = set_and(list(w, "u2"), list(w, "u5"));
        if (!c1.empty()) {
            claim_branch("v.u2-meets-u5");
            color_pair(w, "u2", "u5", c1.front());
            greedy(w, {"u1", "u3", "u3''", "u3'", "u4"});
            return;
        }
        Set c2 = set_and(list(w, "u2"), list(w, "u3''"));
        if (!c2.empty()) {
            claim_branch("v.u2-meets-u3''");
            color_pair(w, "u2", "u3''", c2.front());
            greedy(w, {"u1", "u3", "u5", "u4", "u3'"});
            return;
        }
        Set c3 = set_minus(list(w, "u3"), set_or(list(w, "u5"), list(w, "u3''")));
        if (!c3.empty()) {
            claim_branch("v.u3-escapes");
            color_from(w, "u3", c3, "u3 off L(u5) and L(u3'')");
            greedy(w, {"u1", "u2", "u3'", "u3''", "u4", "u5"});
            return;
        }
        Set c4 = set_and(list(w, "u3'"), list(w, "u5"));
        if (!c4.empty()) {
            claim_branch("v.u3'-meets-u5");
            derived(set_and(c4, list(w, "u2")).empty(), "x off L(u2) by first claim");
            color_pair(w, "u3'", "u5", c4.front());
            greedy(w, {"u3''", "u3", "u1", "u2", "u4"});
            return;
        }
        Set c5 = set_and(list(w, "u4"), list(w, "u3''"));
        if (!c5.empty()) {
            claim_branch("v.u4-meets-u3''");
            derived(set_and(c5, list(w, "u2")).empty(), "x off L(u2) by second claim");
            color_pair(w, "u4", "u3''", c5.front());
            greedy(w, {"u5", "u3", "u1", "u2", "u3'"});
            return;
        }
        claim_branch("v.main");
        // |L(u3)| = 3 and it hides in L(u5) cup L(u3''), two sets of size 2,
        // so it meets L(u5); that color also avoids L(u3').
        Set meet = set_and(list(w, "u5"), list(w, "u3"));
        derived(!meet.empty(), "L(u3) meets L(u5) by counting");
        derived(set_and(meet, list(w, "u3'")).empty(), "x off L(u3') by fourth claim");
        color_from(w, "u3", meet, "u3 from L(u5) cap L(u3)");
        greedy(w, {"u1", "u2", "u5", "u4", "u3''", "u3'"});
    }

    void proc_vi(const View& w) {
        Set escape = set_minus(list(w, "v3'"), list(w, "v3"));
        if (!escape.empty()) {
            claim_branch("vi.fork-escape");
            color_from(w, "v3'", escape, "v3' off L(v3)");
            View sub = enter_sub(w, GadgetId::e, "vi",
                                 {{"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u4"},
                                  {"u5", "u5"},
                                  {"u3'", "u3'"},
                                  {"u3''", "u3''"}});
            sub_dispatch(GadgetId::e, sub);
            greedy(w, {"v3"});
            return;
        }
        claim_branch("vi.fork-contained");
        Set pick = set_minus(list(w, "u3''"), list(w, "v3"));
        derived(!pick.empty(), "L(u3'') exceeds L(v3)");
        derived(set_and(pick, list(w, "v3'")).empty(), "x off L(v3') by containment");
        color_from(w, "u3''", pick, "u3'' off L(v3)");
        greedy(w, {"u1", "u3", "u2", "u5", "u4", "u3'", "v3'", "v3"});
    }

    void proc_vii(const View& w) {
        Set esc5 = set_minus(list(w, "v5'"), list(w, "v5"));
        if (!esc5.empty()) {
            claim_branch("vii.fork5-escape");
            color_from(w, "v5'", esc5, "v5' off L(v5)");
            View sub = enter_sub(w, GadgetId::f, "vii",
                                 {{"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u4"},
                                  {"u5", "u5"},
                                  {"u3'", "u3'"},
                                  {"u3''", "u3''"},
                                  {"v3", "v3"},
                                  {"v3'", "v3'"}});
            sub_dispatch(GadgetId::f, sub);
            greedy(w, {"v5"});
            return;
        }
        Set esc3 = set_minus(list(w, "v3'"), list(w, "v3"));
        if (!esc3.empty()) {
            claim_branch("vii.fork3-escape");
            color_from(w, "v3'", esc3, "v3' off L(v3)");
            View sub = enter_sub(w, GadgetId::f, "vii-mirror",
                                 {{"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u3'"},
                                  {"u5", "u3''"},
                                  {"u3'", "u4"},
                                  {"u3''", "u5"},
                                  {"v3", "v5"},
                                  {"v3'", "v5'"}});
            sub_dispatch(GadgetId::f, sub);
            greedy(w, {"v3"});
            return;
        }
        claim_branch("vii.forks-contained");
        Set pick3 = set_minus(list(w, "u3''"), list(w, "v3"));
        derived(!pick3.empty(), "L(u3'') exceeds L(v3)");
        color_from(w, "u3''", pick3, "u3'' off L(v3)");
        Set pick5 = set_minus(list(w, "u5"), list(w, "v5"));
        derived(!pick5.empty(), "L(u5) exceeds L(v5)");
        color_from(w, "u5", pick5, "u5 off L(v5)");
        greedy(w, {"u3", "u1", "u2", "u3'", "v3'", "v3", "u4", "v5'", "v5"});
    }

    void proc_viii(const View& w) {
        Set escape = set_minus(list(w, "u0"), list(w, "u1"));
        if (!escape.empty()) {
            claim_branch("viii.u0-differs");
            color_from(w, "u0", escape, "u0 off L(u1)");
            View sub = enter_sub(w, GadgetId::e, "viii",
                                 {{"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u4"},
                                  {"u5", "u5"},
                                  {"u3'", "u3'"},
                                  {"u3''", "u3''"}});
            sub_dispatch(GadgetId::e, sub);
            return;
        }
        // L(u0) == L(u1): restrict u2 to colors outside L(u1); then u1 and u0
        // can always be finished last, in this order.
        derived(list(w, "u0") == list(w, "u1"), "L(u0) equals L(u1)");
        int hu2 = host(w, "u2");
        lists_[hu2] = set_minus(lists_[hu2], list(w, "u1"));
        derived(static_cast<int>(lists_[hu2].size()) >= 2, "restricted L(u2) keeps two colors");
        trace_.steps.push_back("restrict L(u2) off L(u1)");

        Set c1 = set_and(list(w, "u5"), list(w, "u2"));
        if (!c1.empty()) {
            claim_branch("viii.u5-meets-u2'");
            color_pair(w, "u2", "u5", c1.front());
            greedy(w, {"u3", "u3''", "u3'", "u4", "u1", "u0"});
            return;
        }
        Set c2 = set_and(list(w, "u5"), list(w, "u3'"));
        if (!c2.empty()) {
            claim_branch("viii.u5-meets-u3'");
            derived(set_and(c2, list(w, "u2")).empty(), "x off restricted L(u2)");
            color_pair(w, "u3'", "u5", c2.front());
            greedy(w, {"u3''", "u3", "u2", "u4", "u1", "u0"});
            return;
        }
        Set c3 = set_and(list(w, "u5"), list(w, "u3"));
        if (!c3.empty()) {
            claim_branch("viii.u5-meets-u3");
            color_from(w, "u3", c3, "u3 from L(u5) cap L(u3)");
            greedy(w, {"u5", "u3''", "u2", "u4", "u3'", "u1", "u0"});
            return;
        }
        claim_branch("viii.main");
        greedy(w, {"u2", "u3", "u3''", "u3'", "u4", "u5", "u1", "u0"});
    }

    void proc_ix(const View& w) {
        Set escape = set_minus(list(w, "v3'"), list(w, "v3"));
        if (!escape.empty()) {
            claim_branch("ix.fork-escape");
            color_from(w, "v3'", escape, "v3' off L(v3)");
            View sub = enter_sub(w, GadgetId::h, "ix",
                                 {{"u0", "u0"},
                                  {"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u4"},
                                  {"u5", "u5"},
                                  {"u3'", "u3'"},
                                  {"u3''", "u3''"}});
            sub_dispatch(GadgetId::h, sub);
            greedy(w, {"v3"});
            return;
        }
        claim_branch("ix.fork-contained");
        Set pick = set_minus(list(w, "u3''"), list(w, "v3"));
        derived(!pick.empty(), "L(u3'') exceeds L(v3)");
        derived(set_and(pick, list(w, "v3'")).empty(), "x off L(v3') by containment");
        color_from(w, "u3''", pick, "u3'' off L(v3)");
        greedy(w, {"u0", "u1", "u3", "u2", "u5", "u4", "u3'", "v3'", "v3"});
    }

    void proc_x(const View& w) {
        Set esc5 = set_minus(list(w, "v5'"), list(w, "v5"));
        if (!esc5.empty()) {
            claim_branch("x.fork5-escape");
            color_from(w, "v5'", esc5, "v5' off L(v5)");
            View sub = enter_sub(w, GadgetId::i, "x",
                                 {{"u0", "u0"},
                                  {"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u4"},
                                  {"u5", "u5"},
                                  {"u3'", "u3'"},
                                  {"u3''", "u3''"},
                                  {"v3", "v3"},
                                  {"v3'", "v3'"}});
            sub_dispatch(GadgetId::i, sub);
            greedy(w, {"v5"});
            return;
        }
        Set esc3 = set_minus(list(w, "v3'"), list(w, "v3"));
        if (!esc3.empty()) {
            claim_branch("x.fork3-escape");
            color_from(w, "v3'", esc3, "v3' off L(v3)");
            View sub = enter_sub(w, GadgetId::i, "x-mirror",
                                 {{"u0", "u0"},
                                  {"u1", "u1"},
                                  {"u2", "u2"},
                                  {"u3", "u3"},
                                  {"u4", "u3'"},
                                  {"u5", "u3''"},
                                  {"u3'", "u4"},
                                  {"u3''", "u5"},
                                  {"v3", "v5"},
                                  {"v3'", "v5'"}});
            sub_dispatch(GadgetId::i, sub);
            greedy(w, {"v3"});
            return;
        }
        claim_branch("x.forks-contained");
        Set pick3 = set_minus(list(w, "u3''"), list(w, "v3"));
        derived(!pick3.empty(), "L(u3'') exceeds L(v3)");
        derived(set_and(pick3, list(w, "v3'")).empty(), "x off L(v3') by containment");
        color_from(w, "u3''", pick3, "u3'' off L(v3)");
        // The step relies on |L(u5)| = 4 > |L(v5) cup L(v5')| = 3, which the
        // containment just established; assert rather than assume.
        Set forbidden = set_or(list(w, "v5"), list(w, "v5'"));
        derived(static_cast<int>(forbidden.size()) < static_cast<int>(list(w, "u5").size()),
                "L(u5) exceeds L(v5) cup L(v5')");
        Set pick5 = set_minus(list(w, "u5"), forbidden);
        derived(!pick5.empty(), "L(u5) escapes L(v5) cup L(v5')");
        color_from(w, "u5", pick5, "u5 off L(v5) cup L(v5')");
        greedy(w, {"u3", "u1", "u0", "u2", "u3'", "v3'", "v3", "u4", "v5'", "v5"});
    }

    const Gadget& top_;
    std::vector<Set> lists_;
    Coloring color_;
    BranchTrace trace_;
    std::string prefix_;
};

const std::map<GadgetId, std::vector<std::string>>& branch_catalog() {
    static const std::map<GadgetId, std::vector<std::string>> cat = {
        {GadgetId::a, {"i.lists-equal", "i.lists-differ"}},
        {GadgetId::b,
         {"ii.u5-meets-u1", "ii.u5-meets-u2", "ii.u5-meets-u3'", "ii.u5-meets-u3",
          "ii.u5-disjoint"}},
        {GadgetId::c, {"iii.fork-escape", "iii.fork-contained"}},
        {GadgetId::d, {"iv.fork5-escape", "iv.fork3-escape", "iv.forks-contained"}},
        {GadgetId::e,
         {"v.u2-meets-u5", "v.u2-meets-u3''", "v.u3-escapes", "v.u3'-meets-u5", "v.u4-meets-u3''",
          "v.main"}},
        {GadgetId::f, {"vi.fork-escape", "vi.fork-contained"}},
        {GadgetId::g, {"vii.fork5-escape", "vii.fork3-escape", "vii.forks-contained"}},
        {GadgetId::h,
         {"viii.u0-differs", "viii.u5-meets-u2'", "viii.u5-meets-u3'", "viii.u5-meets-u3",
          "viii.main"}},
        {GadgetId::i, {"ix.fork-escape", "ix.fork-contained"}},
        {GadgetId::j, {"x.fork5-escape", "x.fork3-escape", "x.forks-contained"}},
    };
    return cat;
}

// Random admissible assignment. Universe rotation plus couplings (cloned
// lists, fork containments, block-separated u5) keep every claim branch
// reachable.
ListAssignment sample_assignment(const Gadget& gad, Rng& rng, int strategy) {
    const int n = gad.size();
    int max_size = *std::max_element(gad.profile.sizes.begin(), gad.profile.sizes.end());
    ListAssignment L;
    L.lists.resize(n);

    int universe;
    switch (strategy % 4) {
        case 0: universe = max_size; break;
        case 1: universe = max_size + 1; break;
        case 2: universe = max_size + 2; break;
        default: universe = 2 * max_size; break;
    }
    for (int v = 0; v < n; ++v) L.lists[v] = rng.sample_subset(universe, gad.profile.sizes[v]);

    auto has = [&](const char* label) {
        for (const auto& l : gad.labels) {
            if (l == label) return true;
        }
        return false;
    };
    auto force_subset = [&](const char* small, const char* big) {
        int s = gad.index(small), b = gad.index(big);
        Set pool = L.lists[b];
        rng.shuffle(pool);
        pool.resize(gad.profile.sizes[s]);
        std::sort(pool.begin(), pool.end());
        L.lists[s] = pool;
    };

    if (has("v3") && rng.chance(0.5)) force_subset("v3'", "v3");
    if (has("v5") && rng.chance(0.5)) force_subset("v5'", "v5");
    if (has("u0") && rng.chance(0.35)) L.lists[gad.index("u0")] = L.lists[gad.index("u1")];
    if (gad.id == GadgetId::a && rng.chance(0.35)) {
        L.lists[gad.index("u1")] = L.lists[gad.index("u2")];
    }
    if (has("u5") && rng.chance(0.3)) {
        // Move u5 (and for e/h the u3'' arm tip) into a private color block:
        // the disjointness claims then hold, steering to the deep branches.
        auto privatize = [&](const char* label, int offset) {
            int v = gad.index(label);
            int k = gad.profile.sizes[v];
            L.lists[v].clear();
            for (int i = 0; i < k; ++i) L.lists[v].push_back(universe + offset + i);
        };
        privatize("u5", 0);
        if (gad.id == GadgetId::e || gad.id == GadgetId::h) {
            privatize("u3''", 8);
            // u3 must hide inside L(u5) cup L(u3'') for the deepest branch.
            if (rng.chance(0.6)) {
                Set pool = set_or(L.lists[gad.index("u5")], L.lists[gad.index("u3''")]);
                rng.shuffle(pool);
                pool.resize(gad.profile.sizes[gad.index("u3")]);
                std::sort(pool.begin(), pool.end());
                L.lists[gad.index("u3")] = pool;
            }
        }
    }
    return L;
}

}  // namespace

ProcedureResult extend_procedure(GadgetId id, const ListAssignment& lists) {
    return ProcedureRunner(id, lists).run();
}

const std::vector<std::string>& procedure_branches(GadgetId id) {
    return branch_catalog().at(id);
}

ChoosableReport verify_gadget(GadgetId id, bool exhaustive, std::uint64_t trials_or_budget,
                              std::uint64_t seed) {
    const Gadget& gad = gadget(id);
    if (exhaustive) {
        return check_choosable_exhaustive(gad.constraints, gad.profile,
                                          trials_or_budget ? trials_or_budget
                                                           : kDefaultChoosableBudget);
    }
    return check_choosable_randomized(gad.constraints, gad.profile, trials_or_budget, seed);
}

CrossCheckReport cross_check_procedure(GadgetId id, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw PreconditionError("cross-check needs trials >= 1");
    const Gadget& gad = gadget(id);
    CrossCheckReport rep;
    rep.id = id;
    rep.seed = seed;
    for (const auto& b : procedure_branches(id)) rep.branch_hits[b] = 0;

    Rng rng(seed);
    auto run_one = [&](const ListAssignment& L) -> bool {
        ++rep.trials;
        ProcedureResult pr = extend_procedure(id, L);
        for (const auto& b : pr.trace.branches) {
            auto it = rep.branch_hits.find(b);
            if (it != rep.branch_hits.end()) ++it->second;
        }
        if (!pr.ok) {
            if (rep.first_failure.empty()) {
                rep.first_failure = "procedure failure: " + pr.failure + "\nlists:\n" +
                                    lists_to_text(L);
            }
            return false;
        }
        if (verify_coloring(gad.constraints, pr.coloring, 1)) {
            if (rep.first_failure.empty()) {
                rep.first_failure = "procedure produced an invalid coloring\nlists:\n" +
                                    lists_to_text(L);
            }
            return false;
        }
        for (int v = 0; v < gad.size(); ++v) {
            const auto& lv = L.lists[v];
            if (std::find(lv.begin(), lv.end(), pr.coloring[v]) == lv.end()) {
                if (rep.first_failure.empty()) {
                    rep.first_failure = "color outside its list at " + gad.labels[v];
                }
                return false;
            }
        }
        if (!list_color(gad.constraints, L)) {
            if (rep.first_failure.empty()) {
                rep.first_failure = "solver disagrees: instance reported unsatisfiable\nlists:\n" +
                                    lists_to_text(L);
            }
            return false;
        }
        ++rep.valid;
        return true;
    };

    for (std::uint64_t t = 0; t < trials; ++t) {
        run_one(sample_assignment(gad, rng, static_cast<int>(t)));
    }
    // Coverage mop-up: rejection-sample any branch the main run missed.
    for (const auto& b : procedure_branches(id)) {
        std::uint64_t before = rep.branch_hits[b];
        if (before > 0) continue;
        for (int attempt = 0; attempt < 2'000'000 && rep.branch_hits[b] == 0; ++attempt) {
            run_one(sample_assignment(gad, rng, attempt));
        }
        if (rep.branch_hits[b] == 0) rep.uncovered.push_back(b);
    }
    rep.ok = rep.valid == rep.trials && rep.uncovered.empty() && rep.first_failure.empty();
    return rep;
}

std::string CrossCheckReport::text() const {
    std::ostringstream out;
    out << "gadget " << to_string(id) << ": " << valid << "/" << trials
        << " valid colorings (seed " << seed << ")\n";
    for (const auto& [b, hits] : branch_hits) out << "  " << b << ": " << hits << '\n';
    if (!uncovered.empty()) {
        out << "  uncovered:";
        for (const auto& b : uncovered) out << ' ' << b;
        out << '\n';
    }
    if (!first_failure.empty()) out << "  FAILURE: " << first_failure << '\n';
    out << "RESULT: " << (ok ? "OK" : "FAIL") << '\n';
    return out.str();
}

}  // namespace tdc
