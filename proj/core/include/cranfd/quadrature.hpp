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

#include <functional>
#include <stdexcept>
#include <string>

namespace cranfd {

/// Thrown when an adaptive rule exhausts its interval budget. Carries the
/// best estimate so callers can decide whether to degrade gracefully.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string &what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_bound(err) {}
    double best_estimate;
    double error_bound;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;    // absolute error bound estimate
    int evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7-15) on [a, b]. Integrable endpoint
/// singularities are fine; the rule never evaluates the endpoints.
QuadResult integrate_finite_full(const Integrand &f, double a, double b,
                                 double rel_tol, double abs_tol = 0.0,
                                 int max_intervals = 4000);

double integrate_finite(const Integrand &f, double a, double b, double rel_tol);

/// Integral over (0, inf) for decaying integrands: adaptive on (0, scale]
/// plus the tail folded by x = scale / u. `scale` should sit near the
/// integrand's characteristic width.
QuadResult integrate_semi_infinite_full(const Integrand &f, double rel_tol,
                                        double scale = 1.0,
                                        int max_intervals = 8000);

double integrate_semi_infinite(const Integrand &f, double rel_tol,
                               double scale = 1.0);

/// Scalar transform z -> M(z) on z >= 0 with M(0) = 1, non-increasing,
/// 0 <= M <= 1 (the MGF of a nonnegative variable evaluated at -z).
/// `complement` must equal 1 - value but be accurate where M(z) is close
/// to 1; rate integrands use it to avoid cancellation near z = 0.
struct MgfFn {
    std::function<double(double)> value;
    std::function<double(double)> complement;

    static MgfFn from_value(std::function<double(double)> v) {
        MgfFn m;
        m.complement = [v](double z) { return 1.0 - v(z); };
        m.value = std::move(v);
        return m;
    }

    /// MGF of the constant 0 (M == 1).
    static MgfFn one() {
        MgfFn m;
        m.value = [](double) { return 1.0; };
        m.complement = [](double) { return 0.0; };
        return m;
    }

    /// MGF of mean * Exp(1): 1 / (1 + mean z).
    static MgfFn exponential(double mean);

    /// MGF of scale * Gamma(shape, 1): (1 + scale z)^(-shape).
    static MgfFn gamma(double shape, double scale);
};

/// Integral of f(z) dz over (0, inf) for rate-type integrands whose
/// u = ln z transform vanishes at both ends. `g_u` is the full u-space
/// integrand g_u(u) = f(e^u) e^u. Panels are appended downward from
/// u = ln 45 until they stop contributing.
QuadResult log_panel_integral_full(const std::function<double(double)> &g_u,
                                   double rel_tol);
double log_panel_integral(const std::function<double(double)> &g_u,
                          double rel_tol);

/// E[ln(1 + X/(Y+1))] = int_0^inf M_Y(z) (1 - M_X(z)) e^{-z} / z dz for
/// independent nonnegative X, Y. Evaluated in log-space, which absorbs the
/// removable z -> 0 singularity into the Jacobian; the complement form of
/// M_X keeps the small-z integrand cancellation-free.
double hamdi_rate(const MgfFn &mx, const MgfFn &my, double rel_tol = 1e-8);

/// Stable 1 - (1 + x)^(-m) for x >= 0.
double one_minus_pow_inv(double x, double m);

} // namespace cranfd
