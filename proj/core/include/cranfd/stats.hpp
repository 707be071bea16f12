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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cranfd {

/// Deterministic summation with a fixed reduction tree; the result does not
/// depend on how work was distributed across threads.
double pairwise_sum(std::span<const double> values);

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

/// One-sample Kolmogorov-Smirnov test against a continuous CDF.
/// Sorts a copy of the samples.
KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)> &cdf);

struct Chi2Result {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Chi-square goodness-of-fit of observed integer counts against
/// Poisson(mu). Tail bins are merged until every expected count is >= 5.
Chi2Result chi2_poisson_gof(const std::vector<std::uint64_t> &counts, double mu);

} // namespace cranfd
