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
//
// Spatial-average rate estimation. Realizations are independent work items
// with seed-derived RNG streams; reductions use a fixed tree so parallel
// and serial runs agree bitwise.

#pragma once

#include "cranfd/beamforming.hpp"
#include "cranfd/params.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cranfd {

enum class Association { all_rrh, nearest };
enum class Duplex { full, half };

/// Distance model for the nearest-association UL interference term: the
/// analytic expressions average it over the distance between two
/// independent uniform points in the disc, so that is the default; the
/// true nearest-pair geometry stays available for sensitivity checks.
enum class PairModel { uniform, nearest };

struct Scheme {
    Association assoc = Association::nearest;
    UlCombiner combiner = UlCombiner::mrc;
    Duplex duplex = Duplex::full;
    PairModel pair_model = PairModel::uniform;

    std::string name() const;
};

struct McBudget {
    std::size_t n_spatial = 2000;
    std::size_t n_fading = 100;
    std::size_t total() const { return n_spatial * n_fading; }
    McBudget scaled(double f) const;
};

/// Which link rates a run must produce. DL-only runs skip the all-RRH
/// UL interference work (the dominant cost of ARA full-duplex sampling);
/// the DL draws come first in every kernel, so DL values are identical
/// across selections for the same seed.
enum class RateSelect { both, dl_only, ul_only };

/// Monte Carlo mean rate (nats/s/Hz) with batch-means standard errors over
/// spatial realizations. Metadata fully determines reproduction.
struct RateEstimate {
    double ul_rate = 0.0;
    double dl_rate = 0.0;
    double sum_rate = 0.0;
    double ul_stderr = 0.0;
    double dl_stderr = 0.0;
    double sum_stderr = 0.0;
    std::size_t n_spatial = 0;
    std::size_t n_fading = 0;
    std::string scheme;
    std::uint64_t seed = 0;
};

/// Caps requested parallelism by hardware and the CRAN_DUPLEX_THREADS
/// environment variable; requested <= 0 means "auto".
int resolve_threads(int requested);

/// Runs body(i) for i in [0, n) across the given number of threads.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)> &body);

RateEstimate estimate_rate(const NormalizedParams &params, const Scheme &scheme,
                           const McBudget &budget, std::uint64_t seed,
                           int threads = 0,
                           RateSelect select = RateSelect::both);

enum class SweepVariable { sigma_li, p_u, p_b, p_dl, radius, lambda };

struct SweepPoint {
    double value = 0.0; // swept variable, natural units (dBm for powers)
    RateEstimate estimate;
};

/// One estimate per grid point. Power-like variables (sigma_li, p_u, p_b)
/// reuse common random numbers across the grid: the same realizations are
/// re-evaluated at each grid value, so monotone-in-parameter rates stay
/// monotone in the sample mean as well.
std::vector<SweepPoint> sweep(const SystemParams &base, const Scheme &scheme,
                              SweepVariable variable,
                              const std::vector<double> &grid,
                              const McBudget &budget, std::uint64_t seed,
                              int threads = 0,
                              RateSelect select = RateSelect::both);

/// Paired comparison of the all-RRH DL rate in discs of radius R and 2R:
/// one pattern in the large disc, the restriction to the small disc reuses
/// the same per-point fading, so the difference estimate is low-variance.
struct SaturationProbe {
    double rate_r = 0.0;
    double rate_2r = 0.0;
    double diff = 0.0;        // rate_2r - rate_r
    double diff_stderr = 0.0;
};

SaturationProbe ara_dl_saturation_probe(const NormalizedParams &params,
                                        const McBudget &budget,
                                        std::uint64_t seed, int threads = 0);

} // namespace cranfd
