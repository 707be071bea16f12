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

namespace cranfd {

/// ln Gamma(x) for x > 0. Throws std::domain_error on x <= 0.
double ln_gamma(double x);

/// Gamma(x) for x > 0.
double gamma_fn(double x);

/// Upper incomplete gamma Gamma(a, x), non-regularized; a > 0, x >= 0.
double upper_inc_gamma(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a,x)/Gamma(a).
double reg_lower_gamma(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
double reg_upper_gamma(double a, double x);

/// Exponential integral E_n(x) = int_1^inf exp(-x t) / t^n dt; n >= 1, x > 0.
double exp_integral_en(int n, double x);

/// Digamma of a positive integer: psi(n) = -gamma_E + sum_{k<n} 1/k.
double digamma_int(int n);

/// CDF of Gamma(shape, unit scale) at x.
inline double gamma_cdf(double shape, double x) {
    return x <= 0.0 ? 0.0 : reg_lower_gamma(shape, x);
}

/// Survival function of a chi-square variable with dof degrees of freedom.
double chi2_sf(double x, double dof);

} // namespace cranfd
