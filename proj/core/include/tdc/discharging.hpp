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

#include <string>
#include <vector>

#include "tdc/classify.hpp"
#include "tdc/graph.hpp"
#include "tdc/rational.hpp"

namespace tdc {

struct Transfer {
    int from;
    int to;
    Rational amount;   // 1, 1/2 or 1/3
    std::string rule;  // R0, R1, R2i..R2v
    int thread = -1;   // path context where applicable
};

struct ChargeLedger {
    std::vector<Rational> initial;  // mu(u) = 4 d(u) - 10
    std::vector<Transfer> transfers;
    std::vector<Rational> final_charge;  // mu*
    // Vertices on all-degree-2 cycle components; no rule reaches them, and
    // the case analysis excludes them.
    std::vector<int> two_regular_vertices;

    Rational total() const;
};

// mu(u) = 4 d(u) - 10.
std::vector<Rational> initial_charges(const Graph& g);

// Applies R0 (3+-vertices pay 1 to each 2-vertex on their incident paths),
// R1 (4-vertices pay 1 to 3-neighbors) and R2(i)-(v) (payments to small/
// medium/large/huge (1,1,1)- and special (1,1,0)-vertices across 1-paths).
// Requires min degree >= 2 and max degree <= 4; conservation of the total is
// checked before returning.
ChargeLedger run_discharging(const Graph& g);

struct VertexCertificate {
    int v;
    Rational mu;
    Rational mu_star;
    std::string case_id;   // which verification case matched
    Rational bound;        // the case's closed-form lower bound
    bool in_case_analysis; // false when a structural hypothesis is violated
    bool ok;               // mu_star >= bound (and inside the case analysis)
    std::string note;      // violated lemma, for out-of-analysis vertices
};

struct CertifyReport {
    std::vector<VertexCertificate> rows;
    bool all_nonnegative = false;
    bool all_in_analysis = false;
};

// Matches every vertex to its verification case and checks the ledger's
// mu* against that case's closed-form bound. Vertices whose neighborhood
// violates a structural lemma (a reducible configuration is present) are
// flagged "outside the case analysis" with the lemma named.
CertifyReport certify_nonnegative(const Graph& g, const ChargeLedger& ledger);

struct EquationOneResult {
    Rational sum;  // 8|E| - 10|V|
    bool consistent;
};

// sum_u (4 d(u) - 10) = 8|E| - 10|V|; consistent means mad < 5/2 implies the
// sum is negative.
EquationOneResult check_equation_1(const Graph& g);

}  // namespace tdc
