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

#include "cranfd/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cranfd {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209;
constexpr int kMaxIter = 500;
constexpr double kEps = 1e-15;
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;
} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma requires x > 0");
    return std::lgamma(x);
}

double gamma_fn(double x) { return std::exp(ln_gamma(x)); }

namespace {

// Series for the regularized lower incomplete gamma, valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p_series failed to converge");
}

// Lentz continued fraction for the regularized upper incomplete gamma,
// valid for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_q_contfrac failed to converge");
}

} // namespace

double reg_lower_gamma(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("reg_lower_gamma domain");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double reg_upper_gamma(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("reg_upper_gamma domain");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double upper_inc_gamma(double a, double x) {
    return reg_upper_gamma(a, x) * gamma_fn(a);
}

double digamma_int(int n) {
    if (n < 1) throw std::domain_error("digamma_int requires n >= 1");
    double s = -kEulerGamma;
    for (int k = 1; k < n; ++k) s += 1.0 / k;
    return s;
}

double exp_integral_en(int n, double x) {
    if (n < 1) throw std::domain_error("exp_integral_en requires n >= 1");
    if (!(x > 0.0)) throw std::domain_error("exp_integral_en requires x > 0");
    const int nm1 = n - 1;
    if (x > 1.0) {
        // Lentz continued fraction; dominant cost is a handful of divides.
        double b = x + n;
        double c = 1.0 / kFpMin;
        double d = 1.0 / b;
        double h = d;
        for (int i = 1; i <= kMaxIter; ++i) {
            double an = -static_cast<double>(i) * (nm1 + i);
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            double del = c * d;
            h *= del;
            if (std::abs(del - 1.0) < kEps) return h * std::exp(-x);
        }
        throw std::runtime_error("exp_integral_en continued fraction failed");
    }
    // Power series with the logarithmic term at i = n - 1.
    double ans = (nm1 != 0) ? 1.0 / nm1 : -std::log(x) - kEulerGamma;
    double fact = 1.0;
    for (int i = 1; i <= kMaxIter; ++i) {
        fact *= -x / i;
        double del;
        if (i != nm1) {
            del = -fact / (i - nm1);
        } else {
            del = fact * (-std::log(x) + digamma_int(n));
        }
        ans += del;
        if (std::abs(del) < std::abs(ans) * kEps) return ans;
    }
    throw std::runtime_error("exp_integral_en series failed");
}

double chi2_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    return reg_upper_gamma(0.5 * dof, 0.5 * x);
}

} // namespace cranfd
