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

#include "tdc/mad.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

// Dinic max-flow on a small static network with int64 capacities.
class MaxFlow {
  public:
    explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

    void add_edge(int from, int to, std::int64_t cap) {
        edges_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(edges_.size()) - 1;
    }

    std::int64_t run(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) {
                flow += f;
            }
        }
        return flow;
    }

    // After run(): nodes reachable from s in the residual network (the
    // source side of a minimum cut).
    std::vector<char> source_side(int s) const {
        std::vector<char> in(head_.size(), 0);
        std::vector<int> stack{s};
        in[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int e = head_[x]; e >= 0; e = edges_[e].next) {
                if (edges_[e].cap > 0 && !in[edges_[e].to]) {
                    in[edges_[e].to] = 1;
                    stack.push_back(edges_[e].to);
                }
            }
        }
        return in;
    }

  private:
    struct Edge {
        int to;
        int next;
        std::int64_t cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> q{s};
        level_[s] = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            int x = q[i];
            for (int e = head_[x]; e >= 0; e = edges_[e].next) {
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[x] + 1;
                    q.push_back(edges_[e].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int x, int t, std::int64_t limit) {
        if (x == t) return limit;
        for (int& e = iter_[x]; e >= 0; e = edges_[e].next) {
            Edge& ed = edges_[e];
            if (ed.cap > 0 && level_[ed.to] == level_[x] + 1) {
                std::int64_t f = dfs(ed.to, t, std::min(limit, ed.cap));
                if (f > 0) {
                    ed.cap -= f;
                    edges_[e ^ 1].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }

    std::vector<Edge> edges_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

// Vertex set maximizing |E(H)| - g*|V(H)| for guess g = p/q, together with
// that maximum (exact). Network (after scaling by q): source -> edge node
// (cap q), edge node -> endpoints (cap inf), vertex -> sink (cap p). The
// source side of a min cut picks the maximizer.
struct GuessResult {
    Rational excess;  // max over H of |E(H)| - g*|V(H)|
    std::vector<int> witness;
};

GuessResult evaluate_guess(const Graph& g, const Rational& guess) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const auto edges = g.edges();
    const int source = n + m;
    const int sink = n + m + 1;
    MaxFlow net(n + m + 2);
    const std::int64_t q = guess.den();
    const std::int64_t p = guess.num();
    const std::int64_t inf = std::int64_t(4) * (std::int64_t(m) * q + std::int64_t(n) * p + 1);
    for (int e = 0; e < m; ++e) {
        net.add_edge(source, n + e, q);
        net.add_edge(n + e, edges[e].first, inf);
        net.add_edge(n + e, edges[e].second, inf);
    }
    for (int v = 0; v < n; ++v) net.add_edge(v, sink, p);
    std::int64_t flow = net.run(source, sink);
    auto side = net.source_side(source);
    GuessResult out;
    // min cut = m*q - max(q*|E(H)| - p*|V(H)|); translate back.
    std::int64_t scaled = std::int64_t(m) * q - flow;
    out.excess = Rational(scaled, q);
    for (int v = 0; v < n; ++v) {
        if (side[v]) out.witness.push_back(v);
    }
    return out;
}

Rational density_of(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : vs) in[v] = 1;
    std::int64_t e = 0;
    for (auto [u, v] : g.edges()) {
        if (in[u] && in[v]) ++e;
    }
    return Rational(e, static_cast<std::int64_t>(vs.size()));
}

std::vector<int> densest_subgraph_impl(const Graph& g, Rational* density_out) {
    const int n = g.vertex_count();
    if (n < 1) throw PreconditionError("mad on empty graph");
    if (g.edge_count() == 0) {
        if (density_out) *density_out = Rational(0);
        return {0};
    }
    // Dinkelbach: raise the guess to the density of the best witness until no
    // subgraph beats it. Densities are p/q with q <= n, so this terminates.
    Rational guess(g.edge_count(), n);
    std::vector<int> best;
    for (;;) {
        GuessResult r = evaluate_guess(g, guess);
        if (r.excess > Rational(0)) {
            if (r.witness.empty()) {
                throw InternalCheckFailure("positive excess with empty cut witness");
            }
            Rational d = density_of(g, r.witness);
            if (!(d > guess)) {
                throw InternalCheckFailure("densest-subgraph iteration failed to advance");
            }
            guess = d;
            best = std::move(r.witness);
        } else {
            if (best.empty()) {
                // Initial guess was already the maximum (e.g. regular graphs);
                // the whole vertex set witnesses it.
                best.resize(n);
                for (int v = 0; v < n; ++v) best[v] = v;
            }
            if (density_out) *density_out = guess;
            return best;
        }
    }
}

}  // namespace

Rational average_degree(const Graph& g) {
    if (g.vertex_count() < 1) throw PreconditionError("average degree on empty graph");
    return Rational(2 * std::int64_t(g.edge_count()), g.vertex_count());
}

Rational mad_exact(const Graph& g) {
    Rational density;
    densest_subgraph_impl(g, &density);
    return Rational(2) * density;
}

std::vector<int> densest_subgraph(const Graph& g) { return densest_subgraph_impl(g, nullptr); }

}  // namespace tdc
