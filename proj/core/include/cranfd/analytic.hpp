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
// Semi-analytic average rate expressions. Every result is computed through
// its MGF/integral pre-form; closed-form series act as cross-checks only.

#pragma once

#include "cranfd/params.hpp"
#include "cranfd/quadrature.hpp"

#include <string>
#include <vector>

namespace cranfd {

struct AnalyticDiagnostics {
    int poisson_cutoff = -1;   // last Poisson count kept by the outer sum
    int series_terms = -1;     // terms consumed by a series evaluation
    bool series_converged = true;
    double quad_error = 0.0;
    std::string note;
};

struct AnalyticResult {
    double value = 0.0;
    std::string method;        // integral-form | series | closed-form
    AnalyticDiagnostics diag{};
};

// ---- MGF building blocks -------------------------------------------------

/// Loopback-interference MGF M_Y(z) = 1 / (1 + p_u sigma_li z).
MgfFn mgf_li(const NormalizedParams &p);

/// Disc-averaged per-RRH downlink MGF
/// M(s) = (2/R^2) int_0^R (1 + s/(eps + r^alpha))^(-M) r dr.
MgfFn mgf_per_point_dl(const NormalizedParams &p, double rel_tol = 1e-9);

/// Per-unit MRC interference MGF: M_{Z1}(s) = E_V[1/(1+sV)] with
/// V ~ Beta(1, M-1) (V == 1 when M == 1).
MgfFn mgf_interference_mrc(int m_antennas, double rel_tol = 1e-9);

/// Exponent coefficient of the singular-model PGFL:
/// -pi * density * Gamma(1-delta) * Gamma(M+delta) / Gamma(M)  (< 0).
double singular_exponent_coeff(double density, int m_antennas, double delta);

// ---- Poisson mixing ------------------------------------------------------

struct PoissonWindow {
    int n_lo = 0;
    int n_hi = 0;               // inclusive
    std::vector<double> pmf;    // pmf[n - n_lo]
    double mass = 0.0;
    double mean_trunc = 0.0;    // sum n * pmf[n]
};

/// Pmf window covering all but tail_mass of Poisson(mu).
PoissonWindow poisson_window(double mu, double tail_mass);

// ---- downlink ------------------------------------------------------------

/// All-RRH association, MRT, finite disc, non-singular path loss (exact).
AnalyticResult dl_rate_ara_exact(const NormalizedParams &p, double tol = 1e-6);

/// All-RRH association upper bound (R -> infinity PGFL form).
AnalyticResult dl_rate_ara_upper(const NormalizedParams &p, double tol = 1e-6);

/// All-RRH association, singular path loss (eps treated as 0), R -> inf.
AnalyticResult dl_rate_ara_singular(const NormalizedParams &p, double tol = 1e-6);

/// Series evaluation of the singular bound; diagnostics flag divergence,
/// in which case `value` falls back to the integral form.
AnalyticResult dl_rate_ara_singular_series(const NormalizedParams &p,
                                           double tol = 1e-6);

/// Nearest-RRH association downlink rate (finite disc, exact).
AnalyticResult dl_rate_sra(const NormalizedParams &p, double tol = 1e-6);

/// Exponential-integral closed form of the nearest-RRH downlink rate;
/// falls back to quadrature (with a note) on pole coincidence.
AnalyticResult dl_rate_sra_closed(const NormalizedParams &p, double tol = 1e-6);

/// E[ln(1 + X/(Y+1))] for X = c Gamma(M,1), Y = b Exp(1), through
/// exponential integrals. Building block of the closed-form path.
double gamma_exp_rate_closed(double c, double b, int m_antennas);

// ---- uplink (nearest association, singular model) -------------------------

/// MRC/MRT integral form: pair-distance-averaged interference MGF against
/// the infinite-plane nearest-distance signal law.
AnalyticResult ul_rate_sra_mrc(const NormalizedParams &p, double tol = 1e-6);

/// ZF/MRT: interference-free chi^2_{2(M-1)} signal; requires M >= 2.
/// Reads nothing but (M, alpha, p_u, UL density).
AnalyticResult ul_rate_sra_zf(const NormalizedParams &p, double tol = 1e-6);

/// Shared kernel: E[ln(1 + P r^-alpha G_dof)] with r from the
/// infinite-plane nearest-neighbor law of the given density.
double nearest_snr_rate(int dof, double power, double density, double alpha,
                        double tol = 1e-7);

// ---- half duplex -----------------------------------------------------------

struct HdComponents {
    AnalyticResult dl; // already weighted by tau
    AnalyticResult ul; // already weighted by (1 - tau)
    double sum() const { return dl.value + ul.value; }
};

/// All-RRH half-duplex sum rate (singular R -> inf form, no loopback).
AnalyticResult hd_rate_ara(const NormalizedParams &p, double tol = 1e-6);
HdComponents hd_rate_ara_components(const NormalizedParams &p, double tol = 1e-6);

/// Series cross-check of the half-duplex ARA sum rate.
AnalyticResult hd_rate_ara_series(const NormalizedParams &p, double tol = 1e-6);

/// Nearest-RRH half-duplex rates via the ZF expression under the
/// dof/density substitution, time-weighted by tau and 1 - tau.
HdComponents hd_rates_sra(const NormalizedParams &p, double tol = 1e-6);

} // namespace cranfd
