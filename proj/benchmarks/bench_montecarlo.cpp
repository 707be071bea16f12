// SPDX-License-Identifier: Apache-2.0
//
// cranfd — stochastic-geometry rate analysis for full-duplex C-RAN
// Copyright (C) 2026 cranfd developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cranfd/geometry.hpp"
#include "cranfd/montecarlo.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cranfd;

void BM_SamplePattern(benchmark::State &state) {
    Rng rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_pattern(1e-3, 0.5, 500.0, rng));
}
BENCHMARK(BM_SamplePattern);

void BM_EstimateSraZf(benchmark::State &state) {
    SystemParams sp;
    const NormalizedParams np = normalize(sp);
    Scheme scheme;
    scheme.assoc = Association::nearest;
    scheme.combiner = UlCombiner::zf;
    const McBudget budget{static_cast<std::size_t>(state.range(0)), 10};
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_rate(np, scheme, budget, 7, 1));
    state.SetItemsProcessed(state.iterations() * budget.total());
}
BENCHMARK(BM_EstimateSraZf)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_EstimateAraDl(benchmark::State &state) {
    SystemParams sp;
    const NormalizedParams np = normalize(sp);
    Scheme scheme;
    scheme.assoc = Association::all_rrh;
    scheme.duplex = Duplex::half; // skips the pairwise interference matrix
    const McBudget budget{64, 10};
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_rate(np, scheme, budget, 7, 1));
    state.SetItemsProcessed(state.iterations() * budget.total());
}
BENCHMARK(BM_EstimateAraDl)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
