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

#include "cranfd/analytic.hpp"
#include "cranfd/quadrature.hpp"
#include "cranfd/specfun.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cranfd;

void BM_HamdiRateExponential(benchmark::State &state) {
    const MgfFn mx = MgfFn::exponential(4e9);
    const MgfFn my = MgfFn::exponential(100.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(hamdi_rate(mx, my, 1e-8));
}
BENCHMARK(BM_HamdiRateExponential);

void BM_ExpIntegralEn(benchmark::State &state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_integral_en(3, x));
        x = x < 20.0 ? x + 0.1 : 0.1;
    }
}
BENCHMARK(BM_ExpIntegralEn);

void BM_DlRateAraExact(benchmark::State &state) {
    SystemParams sp;
    const NormalizedParams np = normalize(sp);
    for (auto _ : state)
        benchmark::DoNotOptimize(dl_rate_ara_exact(np, 1e-6).value);
}
BENCHMARK(BM_DlRateAraExact)->Unit(benchmark::kMillisecond);

void BM_UlRateSraZf(benchmark::State &state) {
    SystemParams sp;
    const NormalizedParams np = normalize(sp);
    for (auto _ : state)
        benchmark::DoNotOptimize(ul_rate_sra_zf(np, 1e-6).value);
}
BENCHMARK(BM_UlRateSraZf)->Unit(benchmark::kMillisecond);

} // namespace
