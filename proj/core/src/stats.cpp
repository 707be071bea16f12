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

#include "cranfd/stats.hpp"

#include "cranfd/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cranfd {

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

// Kolmogorov distribution survival function Q(t) = 2 sum (-1)^{k-1} e^{-2k^2 t^2}.
double kolmogorov_q(double t) {
    if (t <= 0.0) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * t * t);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

} // namespace

KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)> &cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_test: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double lo = f - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - f;
        d = std::max({d, lo, hi});
    }
    const double sn = std::sqrt(n);
    const double t = d * (sn + 0.12 + 0.11 / sn); // Stephens' correction
    return KsResult{d, kolmogorov_q(t), samples.size()};
}

Chi2Result chi2_poisson_gof(const std::vector<std::uint64_t> &counts, double mu) {
    if (counts.empty()) throw std::invalid_argument("chi2_poisson_gof: empty sample");
    const std::uint64_t max_count = *std::max_element(counts.begin(), counts.end());
    std::vector<double> observed(max_count + 1, 0.0);
    for (auto c : counts) observed[c] += 1.0;

    // Poisson pmf over [0, max_count], log-space recurrence.
    const double n = static_cast<double>(counts.size());
    std::vector<double> expected(max_count + 1);
    double logp = -mu;
    for (std::uint64_t k = 0; k <= max_count; ++k) {
        if (k > 0) logp += std::log(mu) - std::log(static_cast<double>(k));
        expected[k] = n * std::exp(logp);
    }

    // Merge adjacent cells until each merged cell expects >= 5.
    std::vector<double> obs_m, exp_m;
    double o_acc = 0.0, e_acc = 0.0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        o_acc += observed[k];
        e_acc += expected[k];
        if (e_acc >= 5.0) {
            obs_m.push_back(o_acc);
            exp_m.push_back(e_acc);
            o_acc = e_acc = 0.0;
        }
    }
    // Right tail beyond max_count plus any unfinished cell.
    const double tail_e = n - pairwise_sum(expected) + e_acc;
    const double tail_o = o_acc;
    if (!exp_m.empty() && tail_e < 5.0) {
        exp_m.back() += tail_e;
        obs_m.back() += tail_o;
    } else {
        exp_m.push_back(tail_e);
        obs_m.push_back(tail_o);
    }

    double stat = 0.0;
    for (std::size_t i = 0; i < exp_m.size(); ++i) {
        const double d = obs_m[i] - exp_m[i];
        stat += d * d / exp_m[i];
    }
    const int dof = static_cast<int>(exp_m.size()) - 1;
    if (dof < 1) return Chi2Result{stat, 0, 1.0};
    return Chi2Result{stat, dof, chi2_sf(stat, dof)};
}

} // namespace cranfd
