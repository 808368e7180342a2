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

#include <benchmark/benchmark.h>

#include "tdc/coloring.hpp"
#include "tdc/discharging.hpp"
#include "tdc/gadgets.hpp"
#include "tdc/generators.hpp"
#include "tdc/graph.hpp"
#include "tdc/mad.hpp"
#include "tdc/reduction.hpp"

namespace {

void BM_Square(benchmark::State& state) {
    tdc::Graph g = tdc::random_sparse(static_cast<int>(state.range(0)), 10, 1);
    for (auto _ : state) benchmark::DoNotOptimize(tdc::square(g));
}
BENCHMARK(BM_Square)->Arg(60)->Arg(120);

void BM_Girth(benchmark::State& state) {
    tdc::Graph g = tdc::random_sparse(static_cast<int>(state.range(0)), 10, 1);
    for (auto _ : state) benchmark::DoNotOptimize(tdc::girth(g));
}
BENCHMARK(BM_Girth)->Arg(60)->Arg(120);

void BM_MadExact(benchmark::State& state) {
    tdc::Graph g = tdc::random_sparse(static_cast<int>(state.range(0)), 10, 1);
    for (auto _ : state) benchmark::DoNotOptimize(tdc::mad_exact(g));
}
BENCHMARK(BM_MadExact)->Arg(60)->Arg(120);

void BM_TwoDistanceChromatic(benchmark::State& state) {
    tdc::Graph g = tdc::petersen();
    for (auto _ : state) benchmark::DoNotOptimize(tdc::two_distance_chromatic(g).value);
}
BENCHMARK(BM_TwoDistanceChromatic);

void BM_FindConfiguration(benchmark::State& state) {
    tdc::Graph g = tdc::random_sparse(static_cast<int>(state.range(0)), 10, 2);
    for (auto _ : state) benchmark::DoNotOptimize(tdc::find_configuration(g));
}
BENCHMARK(BM_FindConfiguration)->Arg(60)->Arg(120);

void BM_Discharge(benchmark::State& state) {
    tdc::Graph g = tdc::random_sparse(static_cast<int>(state.range(0)), 10, 3);
    for (auto _ : state) benchmark::DoNotOptimize(tdc::run_discharging(g).total());
}
BENCHMARK(BM_Discharge)->Arg(60)->Arg(120);

void BM_ColorConstructive(benchmark::State& state) {
    tdc::Graph g = tdc::random_sparse(static_cast<int>(state.range(0)), 10, 4);
    tdc::ListAssignment L = tdc::ListAssignment::uniform(g.vertex_count(), 6);
    for (auto _ : state) benchmark::DoNotOptimize(tdc::color_constructive(g, L).coloring);
}
BENCHMARK(BM_ColorConstructive)->Arg(60)->Arg(120);

void BM_ExtendProcedure(benchmark::State& state) {
    auto id = static_cast<tdc::GadgetId>(state.range(0));
    const tdc::Gadget& gad = tdc::gadget(id);
    tdc::ListAssignment L;
    for (int v = 0; v < gad.size(); ++v) {
        std::vector<int> list;
        for (int c = 0; c < gad.profile.sizes[v]; ++c) list.push_back((v + c) % 7);
        L.lists.push_back(list);
    }
    for (auto _ : state) benchmark::DoNotOptimize(tdc::extend_procedure(id, L).ok);
}
BENCHMARK(BM_ExtendProcedure)->Arg(0)->Arg(4)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
