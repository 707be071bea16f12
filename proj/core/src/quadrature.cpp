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

#include "cranfd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace cranfd {

namespace {

// Gauss-Kronrod 7-15 nodes/weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel &o) const { return error < o.error; }
};

Panel gk15(const Integrand &f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    // Kronrod node order: +-x0..+-x6, then center.
    double resk = 0.0, resg = 0.0;
    const double fc = f(center);
    resk = kWgk[7] * fc;
    resg = kWg[3] * fc;
    fv[14] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double mean = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return Panel{a, b, resk * half, err};
}

QuadResult adaptive(const Integrand &f, double a, double b, double rel_tol,
                    double abs_tol, int max_intervals) {
    std::priority_queue<Panel> heap;
    Panel p0 = gk15(f, a, b);
    double total = p0.value;
    double total_err = p0.error;
    int evals = 15;
    heap.push(p0);
    auto tolerance = [&] {
        return std::max(abs_tol, rel_tol * std::abs(total));
    };
    while (total_err > tolerance() && static_cast<int>(heap.size()) < max_intervals) {
        Panel worst = heap.top();
        if (worst.error <= 0.0) break; // nothing splittable remains
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval at floating-point resolution; keep its estimate.
            total_err -= worst.error;
            worst.error = 0.0;
            heap.push(worst);
            continue;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    if (total_err > tolerance() * 4.0 && total_err > abs_tol)
        throw QuadratureError("adaptive quadrature: interval budget exhausted",
                              total, total_err);
    return QuadResult{total, total_err, evals};
}

} // namespace

QuadResult integrate_finite_full(const Integrand &f, double a, double b,
                                 double rel_tol, double abs_tol,
                                 int max_intervals) {
    if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");
    return adaptive(f, a, b, rel_tol, abs_tol, max_intervals);
}

double integrate_finite(const Integrand &f, double a, double b, double rel_tol) {
    return integrate_finite_full(f, a, b, rel_tol).value;
}

QuadResult integrate_semi_infinite_full(const Integrand &f, double rel_tol,
                                        double scale, int max_intervals) {
    if (!(scale > 0.0))
        throw std::invalid_argument("integrate_semi_infinite: scale <= 0");
    // Lower piece on (0, scale], upper piece folded by z = scale / u.
    QuadResult low = adaptive(f, 0.0, scale, rel_tol * 0.5, 0.0, max_intervals);
    auto folded = [&f, scale](double u) {
        const double z = scale / u;
        return f(z) * z * z / scale;
    };
    const double abs_floor = std::abs(low.value) * rel_tol * 0.5;
    QuadResult high = adaptive(folded, 0.0, 1.0, rel_tol * 0.5, abs_floor,
                               max_intervals);
    return QuadResult{low.value + high.value, low.error + high.error,
                      low.evaluations + high.evaluations};
}

double integrate_semi_infinite(const Integrand &f, double rel_tol, double scale) {
    return integrate_semi_infinite_full(f, rel_tol, scale).value;
}

double one_minus_pow_inv(double x, double m) {
    // 1 - (1+x)^(-m) = -expm1(-m log1p(x)), exact to rounding for tiny x.
    if (x <= 0.0) return 0.0;
    return -std::expm1(-m * std::log1p(x));
}

MgfFn MgfFn::exponential(double mean) {
    MgfFn m;
    m.value = [mean](double z) { return 1.0 / (1.0 + mean * z); };
    m.complement = [mean](double z) {
        const double t = mean * z;
        return t / (1.0 + t);
    };
    return m;
}

MgfFn MgfFn::gamma(double shape, double scale) {
    MgfFn m;
    m.value = [shape, scale](double z) {
        return std::exp(-shape * std::log1p(scale * z));
    };
    m.complement = [shape, scale](double z) {
        return one_minus_pow_inv(scale * z, shape);
    };
    return m;
}

QuadResult log_panel_integral_full(const std::function<double(double)> &g_u,
                                   double rel_tol) {
    const double u_hi = std::log(45.0); // exp(-45) ~ 3e-20: past any tolerance
    const double panel_width = 8.0;
    QuadResult total;
    double hi = u_hi;
    const int max_panels = 60;
    for (int k = 0; k < max_panels; ++k) {
        const double lo = hi - panel_width;
        QuadResult r =
            integrate_finite_full(g_u, lo, hi, rel_tol * 0.25,
                                  std::abs(total.value) * rel_tol * 0.125);
        total.value += r.value;
        total.error += r.error;
        total.evaluations += r.evaluations;
        hi = lo;
        const double floor =
            std::max(std::abs(total.value) * rel_tol * 0.125, 1e-300);
        if (k >= 2 && std::abs(r.value) < floor) break;
    }
    return total;
}

double log_panel_integral(const std::function<double(double)> &g_u,
                          double rel_tol) {
    return log_panel_integral_full(g_u, rel_tol).value;
}

double hamdi_rate(const MgfFn &mx, const MgfFn &my, double rel_tol) {
    // Substituting z = e^u turns the integrand into
    //   my(e^u) * (1 - mx(e^u)) * exp(-e^u),
    // flat over the decades where the rate accumulates and vanishing at
    // both ends.
    auto g = [&](double u) {
        const double z = std::exp(u);
        const double c = mx.complement(z);
        if (c == 0.0) return 0.0;
        return my.value(z) * c * std::exp(-z);
    };
    return std::max(log_panel_integral(g, rel_tol), 0.0);
}

} // namespace cranfd
