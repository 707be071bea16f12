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

#include "cranfd/geometry.hpp"
#include "cranfd/specfun.hpp"
#include "cranfd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cranfd {

namespace {
constexpr double kPi = std::numbers::pi;
}

// ---- MGF building blocks -------------------------------------------------

MgfFn mgf_li(const NormalizedParams &p) {
    return MgfFn::exponential(p.p_u * p.sigma_li);
}

namespace {

// (2/R^2) int_0^R (1 - (1 + s/(eps + r^alpha))^(-M)) r dr, cancellation-free.
double per_point_dl_complement(double s, const NormalizedParams &p,
                               double rel_tol) {
    if (s <= 0.0) return 0.0;
    const double R = p.radius;
    const double m = p.m_antennas;
    auto f = [&](double r) {
        const double den = p.epsilon + std::pow(r, p.alpha);
        return one_minus_pow_inv(s / den, m) * r;
    };
    const double val =
        integrate_finite_full(f, 0.0, R, rel_tol, 0.0, 6000).value;
    return std::clamp(val * 2.0 / (R * R), 0.0, 1.0);
}

} // namespace

MgfFn mgf_per_point_dl(const NormalizedParams &p, double rel_tol) {
    MgfFn m;
    m.complement = [p, rel_tol](double s) {
        return per_point_dl_complement(s, p, rel_tol);
    };
    m.value = [p, rel_tol](double s) {
        return 1.0 - per_point_dl_complement(s, p, rel_tol);
    };
    return m;
}

MgfFn mgf_interference_mrc(int m_antennas, double rel_tol) {
    if (m_antennas < 1)
        throw std::invalid_argument("mgf_interference_mrc: M < 1");
    if (m_antennas == 1) return MgfFn::exponential(1.0);
    const double mm = m_antennas;
    auto value = [mm, rel_tol](double s) {
        if (s <= 0.0) return 1.0;
        auto f = [&](double v) {
            return (mm - 1.0) * std::pow(1.0 - v, mm - 2.0) / (1.0 + s * v);
        };
        // Split at the 1/s knee so the adaptive rule sees two smooth pieces.
        const double knee = std::min(1.0, 1.0 / s);
        double val = integrate_finite_full(f, 0.0, knee, rel_tol).value;
        if (knee < 1.0)
            val += integrate_finite_full(f, knee, 1.0, rel_tol).value;
        return std::min(val, 1.0);
    };
    return MgfFn::from_value(value);
}

double singular_exponent_coeff(double density, int m_antennas, double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("singular_exponent_coeff: delta outside (0,1)");
    const double m = m_antennas;
    return -kPi * density *
           std::exp(ln_gamma(1.0 - delta) + ln_gamma(m + delta) - ln_gamma(m));
}

// ---- Poisson mixing ------------------------------------------------------

PoissonWindow poisson_window(double mu, double tail_mass) {
    PoissonWindow w;
    if (mu <= 0.0) {
        w.n_lo = w.n_hi = 0;
        w.pmf = {1.0};
        w.mass = 1.0;
        return w;
    }
    const double target = 1.0 - tail_mass;
    const int cap =
        static_cast<int>(mu + 12.0 * std::sqrt(mu) + 64.0);
    double logp = -mu;
    const double logmu = std::log(mu);
    double cum = 0.0;
    int n = 0;
    bool recording = false;
    for (; n <= cap; ++n) {
        if (n > 0) logp += logmu - std::log(static_cast<double>(n));
        const double pk = std::exp(logp);
        if (!recording && pk > 1e-320) {
            recording = true;
            w.n_lo = n;
        }
        if (recording) w.pmf.push_back(pk);
        cum += pk;
        if (cum >= target && recording) break;
    }
    w.n_hi = w.n_lo + static_cast<int>(w.pmf.size()) - 1;
    w.mass = pairwise_sum(w.pmf);
    double mt = 0.0;
    for (std::size_t i = 0; i < w.pmf.size(); ++i)
        mt += static_cast<double>(w.n_lo + static_cast<int>(i)) * w.pmf[i];
    w.mean_trunc = mt;
    return w;
}

// ---- downlink ------------------------------------------------------------

AnalyticResult dl_rate_ara_exact(const NormalizedParams &p, double tol) {
    const double mu = p.mean_dl_count();
    AnalyticResult res;
    res.method = "integral-form";
    if (mu <= 0.0 || p.p_b <= 0.0) return res;
    const PoissonWindow w = poisson_window(mu, tol * 0.1);
    const MgfFn my = mgf_li(p);

    auto g_u = [&](double u) {
        const double z = std::exp(u);
        const double c = per_point_dl_complement(p.p_b * z, p, tol * 0.05);
        if (c <= 0.0) return 0.0;
        double mix; // E_N[1 - m^N] over the truncated window
        if (mu * c < 1e-8) {
            mix = c * w.mean_trunc;
        } else {
            const double logm = std::log1p(-c);
            double q = std::exp(w.n_lo * logm);
            const double mval = std::exp(logm);
            double acc = 0.0;
            for (const double pk : w.pmf) {
                acc += pk * (1.0 - q);
                q *= mval;
            }
            mix = acc;
        }
        return my.value(z) * mix * std::exp(-z);
    };
    const QuadResult q = log_panel_integral_full(g_u, tol);
    res.value = std::max(q.value, 0.0);
    res.diag.quad_error = q.error;
    res.diag.poisson_cutoff = w.n_hi;
    return res;
}

AnalyticResult dl_rate_ara_upper(const NormalizedParams &p, double tol) {
    AnalyticResult res;
    res.method = "integral-form";
    if (p.p_b <= 0.0 || p.dl_density() <= 0.0) return res;
    const MgfFn my = mgf_li(p);
    const double m = p.m_antennas;
    const double two_pi_density = 2.0 * kPi * p.dl_density();

    auto pgfl_exponent = [&](double z) {
        const double zpb = z * p.p_b;
        auto f = [&](double x) {
            const double den = p.epsilon + std::pow(x, p.alpha);
            return one_minus_pow_inv(zpb / den, m) * x;
        };
        const double scale =
            std::max(1.0, std::pow(zpb, 1.0 / p.alpha));
        return two_pi_density *
               integrate_semi_infinite_full(f, tol * 0.05, scale).value;
    };
    auto g_u = [&](double u) {
        const double z = std::exp(u);
        const double e = pgfl_exponent(z);
        if (e <= 0.0) return 0.0;
        return my.value(z) * (-std::expm1(-e)) * std::exp(-z);
    };
    const QuadResult q = log_panel_integral_full(g_u, tol);
    res.value = std::max(q.value, 0.0);
    res.diag.quad_error = q.error;
    return res;
}

namespace {

// Integral form of the singular-model rate with PGFL coefficient `coeff`
// (negative), transmit power `power`, and LI MGF `my`.
double singular_rate_integral(double coeff, double power, double delta,
                              const MgfFn &my, double tol) {
    if (coeff >= 0.0 || power <= 0.0) return 0.0;
    auto g_u = [&](double u) {
        const double z = std::exp(u);
        const double arg = coeff * std::pow(z * power, delta);
        return my.value(z) * (-std::expm1(arg)) * std::exp(-z);
    };
    return std::max(log_panel_integral(g_u, tol), 0.0);
}

// log T(a) with T(a) = int_0^inf z^(a-1) e^(-z) / (1 + b z) dz, which is
// Gamma(a) E[1/(1+bZ)] for Z ~ Gamma(a,1). The density-ratio form keeps the
// integrand bounded for any shape (the raw z^(a-1) e^-z overflows past
// a ~ 170, and T itself can exceed the double range, hence the log).
double log_tilted_gamma_integral(double a, double b, double tol) {
    const double lg = ln_gamma(a);
    if (b <= 0.0) return lg;
    auto density_ratio = [&](double z) {
        if (z <= 0.0) return 0.0;
        return std::exp((a - 1.0) * std::log(z) - z - lg) / (1.0 + b * z);
    };
    const double expectation =
        integrate_semi_infinite(density_ratio, tol, std::max(1.0, a));
    return lg + std::log(expectation);
}

} // namespace

AnalyticResult dl_rate_ara_singular(const NormalizedParams &p, double tol) {
    AnalyticResult res;
    res.method = "integral-form";
    const double coeff =
        singular_exponent_coeff(p.dl_density(), p.m_antennas, p.delta());
    res.value = singular_rate_integral(coeff, p.p_b, p.delta(), mgf_li(p), tol);
    return res;
}

AnalyticResult dl_rate_ara_singular_series(const NormalizedParams &p,
                                           double tol) {
    AnalyticResult res;
    res.method = "series";
    const double delta = p.delta();
    const double coeff =
        singular_exponent_coeff(p.dl_density(), p.m_antennas, delta);
    const double b = p.p_u * p.sigma_li;
    const double x = coeff * std::pow(p.p_b, delta); // negative
    // 1 - e^y = -sum_k y^k/k!, so with y = x z^delta < 0 the k-th term sign
    // is (-1)^(k+1). Kahan summation; divergence watch past k = 60, and a
    // log-space magnitude check so runaway terms bail before overflowing.
    double sum = 0.0, comp = 0.0;
    double log_coeff = 0.0; // log |x^k / k!|
    double prev_abs = std::numeric_limits<double>::infinity();
    int small_run = 0;
    bool converged = false;
    int k = 1;
    for (; k <= 200; ++k) {
        log_coeff += std::log(std::abs(x)) - std::log(static_cast<double>(k));
        const double log_abs_term =
            log_coeff + log_tilted_gamma_integral(delta * k, b, tol * 0.1);
        if (log_abs_term > 690.0) { // term near the double range: hopeless
            converged = false;
            break;
        }
        const double term =
            ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(log_abs_term);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        const double abs_term = std::abs(term);
        if (abs_term < tol * std::max(std::abs(sum), 1e-12)) {
            if (++small_run >= 3) {
                converged = true;
                ++k;
                break;
            }
        } else {
            small_run = 0;
        }
        if (k > 60 && abs_term > prev_abs && abs_term > 1.0) {
            converged = false;
            break;
        }
        prev_abs = abs_term;
    }
    res.diag.series_terms = k - 1;
    res.diag.series_converged = converged;
    if (!converged) {
        res.method = "integral-form";
        res.diag.note = "series diverged; integral form returned";
        res.value = dl_rate_ara_singular(p, tol).value;
    } else {
        res.value = sum;
    }
    return res;
}

AnalyticResult dl_rate_sra(const NormalizedParams &p, double tol) {
    AnalyticResult res;
    res.method = "integral-form";
    const double mu = p.mean_dl_count();
    if (mu <= 0.0 || p.p_b <= 0.0) return res;
    const PoissonWindow w = poisson_window(mu, tol * 0.1);
    const MgfFn my = mgf_li(p);
    const double m = p.m_antennas;

    // Substitution v = pi p lambda r^2: the Poisson-mixed nearest-distance
    // density becomes sum_N pmf[N] (N/mu) (1 - v/mu)^(N-1) on [0, mu].
    auto mixture_density = [&](double v) {
        double acc = 0.0;
        const double one_minus = 1.0 - v / mu;
        if (one_minus <= 0.0) return 0.0;
        const double lg = std::log(one_minus);
        double pw = std::exp((w.n_lo - 1) * lg);
        for (std::size_t i = 0; i < w.pmf.size(); ++i) {
            const double n = static_cast<double>(w.n_lo + static_cast<int>(i));
            if (n >= 1.0) acc += w.pmf[i] * (n / mu) * pw;
            pw *= one_minus;
        }
        return acc;
    };
    auto integrand = [&](double v) {
        const double dens = mixture_density(v);
        if (dens <= 0.0) return 0.0;
        const double r = std::sqrt(v / (kPi * p.dl_density()));
        const double scale = p.p_b / (p.epsilon + std::pow(r, p.alpha));
        const double rate = hamdi_rate(MgfFn::gamma(m, scale), my, tol * 0.1);
        return dens * rate;
    };
    const double v_cut = std::min(mu, 60.0);
    const QuadResult q =
        integrate_finite_full(integrand, 0.0, v_cut, tol, 0.0, 6000);
    res.value = q.value;
    res.diag.quad_error = q.error;
    res.diag.poisson_cutoff = w.n_hi;
    return res;
}

double gamma_exp_rate_closed(double c, double b, int m_antennas) {
    if (!(c > 0.0)) return 0.0;
    const int m = m_antennas;
    const double inv_c = 1.0 / c;
    // E ln(1 + c G_M) alone when the denominator variable vanishes.
    double a_sum = 0.0;
    for (int k = 1; k <= m; ++k)
        a_sum += std::exp(inv_c) * exp_integral_en(k, inv_c);
    if (b <= 0.0) return a_sum;
    const double d = (c - b) / b;
    if (std::abs(d) < 1e-8)
        throw std::runtime_error("gamma_exp_rate_closed: pole coincidence");
    // Partial fractions of 1/((1+bz)(1+cz)^M).
    const double beta = std::pow(1.0 - c / b, -m);
    const double inv_b = 1.0 / b;
    double corr = (beta - 1.0) * std::exp(inv_b) * exp_integral_en(1, inv_b);
    double frac_sum = 0.0;
    for (int n = 1; n <= m; ++n) {
        const double gamma_n = (c / b) *
                               ((m - n) % 2 == 0 ? 1.0 : -1.0) *
                               std::pow(b / (c - b), m - n + 1);
        frac_sum += gamma_n * std::exp(inv_c) * exp_integral_en(n, inv_c);
    }
    return a_sum + corr + (b / c) * frac_sum;
}

AnalyticResult dl_rate_sra_closed(const NormalizedParams &p, double tol) {
    AnalyticResult res;
    res.method = "closed-form";
    const double mu = p.mean_dl_count();
    if (mu <= 0.0 || p.p_b <= 0.0) return res;
    const PoissonWindow w = poisson_window(mu, tol * 0.1);
    const double b = p.p_u * p.sigma_li;

    auto mixture_density = [&](double v) {
        double acc = 0.0;
        const double one_minus = 1.0 - v / mu;
        if (one_minus <= 0.0) return 0.0;
        const double lg = std::log(one_minus);
        double pw = std::exp((w.n_lo - 1) * lg);
        for (std::size_t i = 0; i < w.pmf.size(); ++i) {
            const double n = static_cast<double>(w.n_lo + static_cast<int>(i));
            if (n >= 1.0) acc += w.pmf[i] * (n / mu) * pw;
            pw *= one_minus;
        }
        return acc;
    };
    try {
        auto integrand = [&](double v) {
            const double dens = mixture_density(v);
            if (dens <= 0.0) return 0.0;
            const double r = std::sqrt(v / (kPi * p.dl_density()));
            const double c = p.p_b / (p.epsilon + std::pow(r, p.alpha));
            return dens * gamma_exp_rate_closed(c, b, p.m_antennas);
        };
        const double v_cut = std::min(mu, 60.0);
        res.value =
            integrate_finite_full(integrand, 0.0, v_cut, tol, 0.0, 6000).value;
    } catch (const std::runtime_error &e) {
        res.method = "integral-form";
        res.diag.note = std::string("closed form unavailable (") + e.what() +
                        "); quadrature fallback";
        res.value = dl_rate_sra(p, tol).value;
    }
    res.diag.poisson_cutoff = w.n_hi;
    return res;
}

// ---- uplink ----------------------------------------------------------------

double nearest_snr_rate(int dof, double power, double density, double alpha,
                        double tol) {
    if (dof < 1) throw std::invalid_argument("nearest_snr_rate: dof < 1");
    if (density <= 0.0 || power <= 0.0) return 0.0;
    const double pi_density = kPi * density;
    // t = pi density r^2 is a unit-mean exponential.
    auto integrand = [&](double t) {
        const double r_alpha = std::pow(t / pi_density, 0.5 * alpha);
        const double scale = power / r_alpha;
        return std::exp(-t) *
               hamdi_rate(MgfFn::gamma(dof, scale), MgfFn::one(), tol * 0.1);
    };
    return integrate_finite_full(integrand, 0.0, 50.0, tol, 0.0, 6000).value;
}

AnalyticResult ul_rate_sra_zf(const NormalizedParams &p, double tol) {
    if (p.m_antennas < 2)
        throw std::invalid_argument("ul_rate_sra_zf: ZF requires M > 1");
    AnalyticResult res;
    res.method = "integral-form";
    res.value =
        nearest_snr_rate(p.m_antennas - 1, p.p_u, p.ul_density(), p.alpha, tol);
    return res;
}

namespace {

// Complement of the signal MGF under the infinite-plane nearest law:
// 1 - E_r[(1 + z P r^-alpha)^(-M)].
double nearest_signal_complement(double z, double power, double density,
                                 int m_antennas, double alpha, double tol) {
    if (z <= 0.0) return 0.0;
    const double pi_density = kPi * density;
    const double m = m_antennas;
    auto f = [&](double t) {
        const double r_alpha = std::pow(t / pi_density, 0.5 * alpha);
        return one_minus_pow_inv(z * power / r_alpha, m) * std::exp(-t);
    };
    return integrate_finite_full(f, 0.0, 50.0, tol, 0.0, 6000).value;
}

} // namespace

AnalyticResult ul_rate_sra_mrc(const NormalizedParams &p, double tol) {
    AnalyticResult res;
    res.method = "integral-form";
    if (p.ul_density() <= 0.0 || p.p_u <= 0.0) return res;
    const MgfFn mz1 = mgf_interference_mrc(p.m_antennas, tol * 0.02);
    const double m = p.m_antennas;
    const double R = p.radius;

    // Interference MGF averaged over the independent-uniform pair distance.
    auto interference_mgf = [&](double z) {
        if (z <= 0.0 || p.p_b <= 0.0) return 1.0;
        auto f = [&](double r) {
            const double s = p.p_b * std::pow(r, -p.alpha) * z;
            return std::pow(mz1.value(s), m) * pair_distance_pdf(r, R);
        };
        return integrate_finite_full(f, 0.0, 2.0 * R, tol * 0.1, 0.0, 6000).value;
    };
    auto g_u = [&](double u) {
        const double z = std::exp(u);
        const double cw = nearest_signal_complement(z, p.p_u, p.ul_density(),
                                                    p.m_antennas, p.alpha,
                                                    tol * 0.05);
        if (cw <= 0.0) return 0.0;
        return interference_mgf(z) * cw * std::exp(-z);
    };
    const QuadResult q = log_panel_integral_full(g_u, tol);
    res.value = std::max(q.value, 0.0);
    res.diag.quad_error = q.error;
    return res;
}

// ---- half duplex ------------------------------------------------------------

HdComponents hd_rate_ara_components(const NormalizedParams &p, double tol) {
    const double delta = p.delta();
    HdComponents out;
    out.dl.method = out.ul.method = "integral-form";
    const double coeff_dl =
        singular_exponent_coeff(p.dl_density(), p.m_antennas, delta);
    const double coeff_ul =
        singular_exponent_coeff(p.ul_density(), p.m_antennas, delta);
    out.dl.value =
        p.tau *
        singular_rate_integral(coeff_dl, p.p_b, delta, MgfFn::one(), tol);
    out.ul.value =
        (1.0 - p.tau) *
        singular_rate_integral(coeff_ul, p.p_u, delta, MgfFn::one(), tol);
    return out;
}

AnalyticResult hd_rate_ara(const NormalizedParams &p, double tol) {
    const HdComponents c = hd_rate_ara_components(p, tol);
    AnalyticResult res;
    res.method = "integral-form";
    res.value = c.sum();
    return res;
}

AnalyticResult hd_rate_ara_series(const NormalizedParams &p, double tol) {
    AnalyticResult res;
    res.method = "series";
    const double delta = p.delta();
    auto term_series = [&](double coeff, double power, bool &ok, int &terms) {
        const double x = coeff * std::pow(power, delta);
        double sum = 0.0, comp = 0.0;
        double log_coeff = 0.0;
        double prev_abs = std::numeric_limits<double>::infinity();
        int small_run = 0;
        ok = false;
        int k = 1;
        for (; k <= 200; ++k) {
            log_coeff += std::log(std::abs(x)) - std::log(static_cast<double>(k));
            const double log_abs_term = log_coeff + ln_gamma(delta * k);
            if (log_abs_term > 690.0) break;
            const double term =
                ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(log_abs_term);
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            const double abs_term = std::abs(term);
            if (abs_term < tol * std::max(std::abs(sum), 1e-12)) {
                if (++small_run >= 3) {
                    ok = true;
                    break;
                }
            } else {
                small_run = 0;
            }
            if (k > 60 && abs_term > prev_abs && abs_term > 1.0) break;
            prev_abs = abs_term;
        }
        terms = k;
        return sum;
    };
    bool ok_dl = false, ok_ul = false;
    int terms_dl = 0, terms_ul = 0;
    const double coeff_dl =
        singular_exponent_coeff(p.dl_density(), p.m_antennas, delta);
    const double coeff_ul =
        singular_exponent_coeff(p.ul_density(), p.m_antennas, delta);
    const double d = term_series(coeff_dl, p.p_b, ok_dl, terms_dl);
    const double u = term_series(coeff_ul, p.p_u, ok_ul, terms_ul);
    res.diag.series_terms = std::max(terms_dl, terms_ul);
    res.diag.series_converged = ok_dl && ok_ul;
    if (!res.diag.series_converged) {
        res.method = "integral-form";
        res.diag.note = "series diverged; integral form returned";
        res.value = hd_rate_ara(p, tol).value;
    } else {
        res.value = p.tau * d + (1.0 - p.tau) * u;
    }
    return res;
}

HdComponents hd_rates_sra(const NormalizedParams &p, double tol) {
    // Half-duplex links carry no cross interference, so the nearest-RRH SNR
    // expression applies with full M-fold diversity (dof (M+1)-1 = M) and
    // the matching density/power on each side.
    HdComponents out;
    out.dl.method = out.ul.method = "integral-form";
    out.dl.value =
        p.tau * nearest_snr_rate(p.m_antennas, p.p_b, p.dl_density(), p.alpha, tol);
    out.ul.value = (1.0 - p.tau) * nearest_snr_rate(p.m_antennas, p.p_u,
                                                    p.ul_density(), p.alpha, tol);
    return out;
}

} // namespace cranfd
