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
#include <string>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

Graph cycle(int n);  // n >= 3

// The (3,2) Moore graph: 10 vertices, 15 edges, 3-regular, girth 5.
Graph petersen();

// The (7,2) Moore graph: 50 vertices, 175 edges, 7-regular, girth 5. Five
// pentagons P0..P4 and five pentagrams Q0..Q4; vertex j of Ph is adjacent to
// vertex (h*i + j) mod 5 of Qi.
Graph hoffman_singleton();

// Two non-adjacent hubs u,v with delta-1 common neighbors plus a 2-path
// u-a-b-v. Max degree delta; girth 4 for delta >= 3; every vertex pair lies
// within distance 2, so the square is complete on delta+3 vertices.
Graph fig4_girth4(int delta);  // delta >= 2

// An 11-vertex graph with max degree 4 and girth 5 whose 2-distance chromatic
// number exceeds 6: a 5-cycle u1..u5, a hub u6 seeing all of it, a vertex u2'
// seeing every color class except u2's, and u7 seeing all six.
Graph fig4_girth5();

// Distance facts behind the girth-5 example, each checked on the built graph
// (lines suitable for a report).
std::vector<std::string> fig4_girth5_checklist();

// Poles x,y,z with common-neighbor groups of sizes floor(delta/2)-1 (x,y),
// ceil(delta/2) (z,x) and floor(delta/2) (y,z); the g3 variant adds the
// direct x-y edge that closes triangles. Even delta only.
Graph wegner_g3(int delta);  // even, >= 4
Graph wegner_g4(int delta);  // even, >= 4

// Connected planar graph grown by ear insertions inside an explicit face
// structure: min degree 2, max degree exactly 4, girth >= target_girth,
// mad < 5/2. Every promise is re-checked before returning; failing samples
// are regenerated. Deterministic per seed.
Graph random_sparse(int n, int target_girth, std::uint64_t seed);

}  // namespace tdc
