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

#include "cranfd/meijer.hpp"

#include "cranfd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cranfd {

namespace {
constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, n = 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

std::complex<double> log_gamma_core(std::complex<double> z) {
    // Requires Re(z) >= 0.5.
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

std::complex<double> log_gamma_complex(std::complex<double> z) {
    if (z.real() >= 0.5) return log_gamma_core(z);
    // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
    const std::complex<double> sin_piz = std::sin(kPi * z);
    if (std::abs(sin_piz) == 0.0)
        throw std::domain_error("log_gamma_complex: pole at nonpositive integer");
    return std::log(kPi) - std::log(sin_piz) - log_gamma_core(1.0 - z);
}

double meijer_g(const MeijerGSpec &spec, double x, double rel_tol) {
    const int m = spec.m, n = spec.n, p = spec.p(), q = spec.q();
    if (m < 0 || n < 0 || m > q || n > p)
        throw std::invalid_argument("meijer_g: orders inconsistent with lists");
    if (!(x > 0.0)) throw std::invalid_argument("meijer_g: argument must be > 0");
    // Absolute convergence of the vertical contour needs
    // 2(m + n) > p + q (integrand decays like exp(-c pi |t|)).
    const int decay = 2 * (m + n) - p - q;
    if (decay <= 0)
        throw std::runtime_error("meijer_g: contour integral does not converge "
                                 "for these orders");

    // Contour Re(s) = c must separate s = b_j + k (k >= 0) from
    // s = a_j - 1 - k.
    double left = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) left = std::max(left, spec.a[j] - 1.0);
    double right = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) right = std::min(right, spec.b[j]);
    if (!(left < right))
        throw std::runtime_error("meijer_g: poles interleave; no separating "
                                 "contour exists");

    const double log_x = std::log(x);
    // x^c amplifies the integrand while the result stays O(G); bias the
    // contour to the side that keeps |x^c| small, within a pole margin.
    double c;
    if (!std::isfinite(left) && !std::isfinite(right)) {
        c = 0.0;
    } else if (!std::isfinite(left)) {
        c = log_x > 0.0 ? right - 3.0 : right - 0.1;
    } else if (!std::isfinite(right)) {
        c = log_x > 0.0 ? left + 0.1 : left + 3.0;
    } else {
        const double margin = std::min(0.1, 0.45 * (right - left));
        c = log_x >= 0.0 ? left + margin : right - margin;
    }
    auto kernel = [&](double t) {
        const std::complex<double> s(c, t);
        std::complex<double> lg{0.0, 0.0};
        for (int j = 0; j < m; ++j) lg += log_gamma_complex(spec.b[j] - s);
        for (int j = 0; j < n; ++j) lg += log_gamma_complex(1.0 - spec.a[j] + s);
        for (int j = m; j < q; ++j) lg -= log_gamma_complex(1.0 - spec.b[j] + s);
        for (int j = n; j < p; ++j) lg -= log_gamma_complex(spec.a[j] - s);
        return std::exp(lg + s * log_x);
    };

    // (1/2pi) int_{-inf}^{inf} = (1/pi) int_0^inf Re(...) dt by conjugate
    // symmetry. Chunked upward until panels stop contributing.
    auto integrand = [&](double t) { return kernel(t).real(); };
    double acc = 0.0;
    double lo = 0.0;
    const double width = 8.0;
    // Large arguments oscillate at ln(x) radians per unit t; give the
    // adaptive rule room to resolve them.
    const int budget =
        6000 + static_cast<int>(800.0 * std::min(std::abs(log_x), 40.0));
    for (int kpanel = 0; kpanel < 64; ++kpanel) {
        const QuadResult r = integrate_finite_full(
            integrand, lo, lo + width, rel_tol * 0.25,
            std::abs(acc) * rel_tol * 0.125, budget);
        acc += r.value;
        lo += width;
        const double floor = std::max(std::abs(acc) * rel_tol * 0.125, 1e-300);
        if (kpanel >= 1 && std::abs(r.value) < floor) break;
    }
    return acc / kPi;
}

} // namespace cranfd
