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

#include "cranfd/beamforming.hpp"
#include "cranfd/geometry.hpp"
#include "cranfd/montecarlo.hpp"
#include "cranfd/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cranfd;

namespace {

NormalizedParams base_params() {
    SystemParams sp; // documented defaults: 46/23 dBm, -30 dBm LI, M=2
    return normalize(sp);
}

} // namespace

TEST_CASE("loopback MGF: off, half-power point, Monte Carlo oracle") {
    NormalizedParams p = base_params();
    p.sigma_li = 0.0;
    const MgfFn off = mgf_li(p);
    CHECK(off.value(10.0) == doctest::Approx(1.0));

    p = base_params();
    const MgfFn m = mgf_li(p);
    CHECK(m.value(1.0 / (p.p_u * p.sigma_li)) == doctest::Approx(0.5));

    Rng rng(61);
    const double s = 3.0 / (p.p_u * p.sigma_li);
    const int n = 1000000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        acc += std::exp(-s * p.p_u * p.sigma_li * rng.exponential());
    CHECK(m.value(s) == doctest::Approx(acc / n).epsilon(0.005));
}

TEST_CASE("per-point DL MGF: limits, antenna ordering, Monte Carlo oracle") {
    const NormalizedParams p = base_params();
    const MgfFn m = mgf_per_point_dl(p);
    CHECK(m.value(0.0) == doctest::Approx(1.0));

    NormalizedParams p4 = p;
    p4.m_antennas = 4;
    const MgfFn m4 = mgf_per_point_dl(p4);
    for (double s : {0.5, 5.0, 50.0}) CHECK(m4.value(s) < m.value(s));

    Rng rng(62);
    const double s = 20.0;
    const int n = 1000000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = p.radius * std::sqrt(rng.uniform01());
        const double x =
            rng.gamma_int(p.m_antennas) / (p.epsilon + std::pow(r, p.alpha));
        acc += std::exp(-s * x);
    }
    CHECK(m.value(s) == doctest::Approx(acc / n).epsilon(0.005));
}

TEST_CASE("per-unit MRC interference MGF: M=1, closed forms, MC oracle") {
    const MgfFn m1 = mgf_interference_mrc(1);
    CHECK(m1.value(1.0) == doctest::Approx(0.5));
    CHECK(m1.value(0.0) == doctest::Approx(1.0));

    const MgfFn m2 = mgf_interference_mrc(2);
    const MgfFn m3 = mgf_interference_mrc(3);
    for (double s : {0.3, 2.0, 17.0, 400.0}) {
        CHECK(m2.value(s) ==
              doctest::Approx(std::log1p(s) / s).epsilon(1e-7));
        const double closed3 =
            2.0 * ((1.0 + s) * std::log1p(s) - s) / (s * s);
        CHECK(m3.value(s) == doctest::Approx(closed3).epsilon(1e-7));
    }

    // Z_i = |w_r^dag h_i|^2 |w_t,i|^2 from real beamformed draws.
    Rng rng(63);
    const int m = 2, n = 500000;
    const double s = 2.0;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const CVec w_t = mrt(draw_cn_vector(m, rng));
        const CVec w_r = mrt(draw_cn_vector(m, rng));
        const CVec h_col = draw_cn_vector(m, rng);
        const double z = std::norm(dot_conj(w_r, h_col)) * std::norm(w_t[0]);
        acc += std::exp(-s * z);
    }
    CHECK(m2.value(s) == doctest::Approx(acc / n).epsilon(0.005));
}

TEST_CASE("singular PGFL exponent coefficient is negative") {
    const double c = singular_exponent_coeff(0.5e-3, 2, 2.0 / 3.0);
    CHECK(c < 0.0);
    // Direct Gamma-product route.
    const double delta = 2.0 / 3.0;
    const double direct = delta * std::numbers::pi * 0.5e-3 *
                          gamma_fn(2 + delta) * (gamma_fn(1.0 - delta) / -delta) /
                          gamma_fn(2);
    CHECK(c == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("poisson window covers the mass") {
    for (double mu : {0.5, 40.0, 4000.0}) {
        const PoissonWindow w = poisson_window(mu, 1e-7);
        CHECK(w.mass == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(w.mean_trunc == doctest::Approx(mu).epsilon(1e-5));
    }
}

TEST_CASE("ARA DL rate: vanishing density and brute-force Poisson oracle") {
    NormalizedParams p = base_params();
    p.lambda = 0.0;
    CHECK(dl_rate_ara_exact(p, 1e-7).value == 0.0);

    // Small disc: compare against the explicit sum over hamdi calls.
    NormalizedParams small = base_params();
    small.radius = 40.0;
    const double res = dl_rate_ara_exact(small, 1e-8).value;
    const MgfFn per = mgf_per_point_dl(small, 1e-10);
    const MgfFn my = mgf_li(small);
    const double mu = small.mean_dl_count();
    double oracle = 0.0;
    double pmf = std::exp(-mu);
    for (int n = 1; n <= 40; ++n) {
        pmf *= mu / n;
        MgfFn mx;
        const double pb = small.p_b;
        mx.value = [&per, pb, n](double z) {
            return std::pow(per.value(pb * z), n);
        };
        mx.complement = [&per, pb, n](double z) {
            return -std::expm1(n * std::log1p(-per.complement(pb * z)));
        };
        oracle += pmf * hamdi_rate(mx, my, 1e-9);
    }
    CHECK(res == doctest::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("upper bound dominates the exact finite-disc rate") {
    for (double sigma_dbm : {-50.0, -30.0, -10.0}) {
        SystemParams sp;
        sp.sigma_li_dbm = sigma_dbm;
        const NormalizedParams p = normalize(sp);
        const double upper = dl_rate_ara_upper(p, 1e-7).value;
        const double exact = dl_rate_ara_exact(p, 1e-7).value;
        CHECK(upper >= exact - 1e-4);
    }
}

TEST_CASE("upper bound trivial limits") {
    NormalizedParams p = base_params();
    p.p_b = 0.0;
    CHECK(dl_rate_ara_upper(p, 1e-7).value == 0.0);
    NormalizedParams q = base_params();
    q.sigma_li = 1e30;
    CHECK(dl_rate_ara_upper(q, 1e-6).value < 1e-4);
}

TEST_CASE("tilted-gamma expectation obeys its shape recurrence") {
    // E_a := E[1/(1+bZ)] for Z ~ Gamma(a,1) satisfies a b E_{a+1} = 1 - E_a
    // (from z/(1+bz) = (1 - 1/(1+bz))/b). Every quantity stays O(1), so the
    // check reaches shapes far beyond the naive z^(a-1) overflow point.
    auto expectation = [](double a, double b) {
        const double lg = ln_gamma(a);
        return integrate_semi_infinite(
            [a, b, lg](double z) {
                if (z <= 0.0) return 0.0;
                return std::exp((a - 1.0) * std::log(z) - z - lg) /
                       (1.0 + b * z);
            },
            1e-11, std::max(1.0, a));
    };
    for (double a : {0.7, 12.0, 50.0, 140.0}) {
        for (double b : {0.3, 3.0, 2e9}) {
            const double lhs = a * b * expectation(a + 1.0, b);
            const double rhs = 1.0 - expectation(a, b);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
        }
    }
}

TEST_CASE("singular form vanishes with the deployment density") {
    NormalizedParams p = base_params();
    p.lambda = 0.0;
    CHECK(dl_rate_ara_singular(p, 1e-8).value == 0.0);
}

TEST_CASE("singular model: integral vs series agreement at low power") {
    SystemParams sp;
    sp.p_b_dbm = -10.0;
    sp.p_u_dbm = -40.0;
    sp.sigma_li_dbm = -50.0;
    const NormalizedParams p = normalize(sp);
    const AnalyticResult integral = dl_rate_ara_singular(p, 1e-9);
    const AnalyticResult series = dl_rate_ara_singular_series(p, 1e-9);
    REQUIRE(series.diag.series_converged);
    REQUIRE(integral.value > 0.01); // well-conditioned comparison point
    CHECK(std::abs(series.value - integral.value) / integral.value < 0.005);
    // Full power: terms blow past any budget; the divergence must be flagged
    // and the integral value returned instead.
    const NormalizedParams hot = base_params();
    const AnalyticResult flagged = dl_rate_ara_singular_series(hot, 1e-8);
    CHECK_FALSE(flagged.diag.series_converged);
    CHECK(flagged.value ==
          doctest::Approx(dl_rate_ara_singular(hot, 1e-8).value).epsilon(1e-6));
}

TEST_CASE("closed-form Gamma/Exp rate equals quadrature across a grid") {
    for (int m : {1, 2, 3}) {
        for (double c : {0.05, 1.0, 300.0}) {
            for (double b : {0.0, 0.4, 90.0}) {
                const double closed = gamma_exp_rate_closed(c, b, m);
                const double quad = hamdi_rate(
                    MgfFn::gamma(m, c),
                    b > 0.0 ? MgfFn::exponential(b) : MgfFn::one(), 1e-11);
                CHECK(closed == doctest::Approx(quad).epsilon(1e-7));
            }
        }
    }
    CHECK_THROWS_AS(gamma_exp_rate_closed(2.0, 2.0, 3),
                    std::runtime_error);
}

TEST_CASE("SRA DL rate: closed form vs quadrature path") {
    const NormalizedParams p = base_params();
    const double quad = dl_rate_sra(p, 1e-7).value;
    const double closed = dl_rate_sra_closed(p, 1e-7).value;
    CHECK(closed == doctest::Approx(quad).epsilon(0.005));
    CHECK(std::abs(closed - quad) / quad < 0.005);
}

TEST_CASE("SRA DL degenerate disc approaches the reference-gain rate") {
    // Shrinking the disc pushes the nearest distance to zero, where the
    // conditional rate is the Gamma/Exp rate at gain 1/eps.
    NormalizedParams p = base_params();
    p.radius = 0.05;
    p.lambda = 4000.0; // keep mu = pi p lambda R^2 > 0 sizable
    const double res = dl_rate_sra(p, 1e-7).value;
    const double mu = p.mean_dl_count();
    const double occupied = -std::expm1(-mu);
    const double cond =
        gamma_exp_rate_closed(p.p_b / p.epsilon, p.p_u * p.sigma_li,
                              p.m_antennas);
    CHECK(res == doctest::Approx(occupied * cond).epsilon(0.002));
}

TEST_CASE("ZF UL rate: kernel oracle through exponential integrals") {
    const NormalizedParams p = base_params();
    // Independent route: E ln(1+cG_K) = e^{1/c} sum_k E_k(1/c) mixed over
    // the unit-mean exponential of t = pi lam r^2.
    const int dof = p.m_antennas - 1;
    const double density = p.ul_density();
    auto inner = [&](double t) {
        const double c =
            p.p_u / std::pow(t / (std::numbers::pi * density), 0.5 * p.alpha);
        double s = 0.0;
        for (int k = 1; k <= dof; ++k)
            s += std::exp(1.0 / c) * exp_integral_en(k, 1.0 / c);
        return std::exp(-t) * s;
    };
    const double oracle = integrate_finite(inner, 0.0, 50.0, 1e-9);
    CHECK(ul_rate_sra_zf(p, 1e-8).value ==
          doctest::Approx(oracle).epsilon(1e-5));
}

TEST_CASE("ZF UL rate never reads interferer power or loopback") {
    NormalizedParams a = base_params();
    NormalizedParams b = base_params();
    b.p_b = 0.0;
    b.sigma_li = 1e9;
    CHECK(ul_rate_sra_zf(a, 1e-7).value == ul_rate_sra_zf(b, 1e-7).value);
    NormalizedParams m1 = base_params();
    m1.m_antennas = 1;
    CHECK_THROWS_AS(ul_rate_sra_zf(m1, 1e-7), std::invalid_argument);
}

TEST_CASE("ZF UL rate grows with UL density") {
    NormalizedParams p = base_params();
    double prev = 0.0;
    for (double pd : {0.7, 0.5, 0.3}) { // 1 - p grows
        p.p_dl = pd;
        const double v = ul_rate_sra_zf(p, 1e-7).value;
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("MRC UL rate: interference-free reduction and power ordering") {
    NormalizedParams p = base_params();
    p.p_b = 0.0;
    const double free_rate = ul_rate_sra_mrc(p, 1e-6).value;
    const double full_dof =
        nearest_snr_rate(p.m_antennas, p.p_u, p.ul_density(), p.alpha, 1e-7);
    CHECK(free_rate == doctest::Approx(full_dof).epsilon(1e-3));

    SystemParams sp;
    double prev = std::numeric_limits<double>::infinity();
    for (double pb : {0.0, 23.0, 46.0}) {
        sp.p_b_dbm = pb;
        const double v = ul_rate_sra_mrc(normalize(sp), 1e-6).value;
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("half-duplex ARA: time split and density edge") {
    NormalizedParams p = base_params();
    p.tau = 1.0;
    const HdComponents c = hd_rate_ara_components(p, 1e-7);
    CHECK(c.ul.value == 0.0);
    CHECK(c.dl.value > 0.0);
    CHECK(hd_rate_ara(p, 1e-7).value == doctest::Approx(c.sum()));

    NormalizedParams q = base_params();
    q.p_dl = 1e-12; // DL density -> 0
    const HdComponents c2 = hd_rate_ara_components(q, 1e-7);
    CHECK(c2.dl.value < 1e-6);
}

TEST_CASE("half-duplex ARA series agrees at low powers") {
    SystemParams sp;
    sp.p_b_dbm = -15.0;
    sp.p_u_dbm = -20.0;
    const NormalizedParams p = normalize(sp);
    const AnalyticResult series = hd_rate_ara_series(p, 1e-9);
    REQUIRE(series.diag.series_converged);
    const double integral = hd_rate_ara(p, 1e-8).value;
    REQUIRE(integral > 0.01);
    CHECK(std::abs(series.value - integral) / integral < 0.005);
}

TEST_CASE("every produced MGF is 1 at zero and non-increasing on a log grid") {
    const NormalizedParams p = base_params();
    const MgfFn fns[] = {mgf_li(p), mgf_per_point_dl(p),
                         mgf_interference_mrc(p.m_antennas),
                         mgf_interference_mrc(1), mgf_interference_mrc(4)};
    for (const MgfFn &m : fns) {
        CHECK(m.value(0.0) == doctest::Approx(1.0).epsilon(1e-9));
        double prev = 1.0 + 1e-12;
        for (double z = 1e-8; z < 1e8; z *= 10.0) {
            const double v = m.value(z);
            CHECK(v >= -1e-12);
            CHECK(v <= prev + 1e-9);
            prev = v;
        }
    }
}

TEST_CASE("singular R->inf form matches a large-disc singular simulation") {
    // Monte Carlo oracle: near-zero path-loss offset, disc big enough that
    // the truncated tail is negligible.
    SystemParams sp;
    sp.epsilon = 1e-6;
    sp.radius = 2000.0;
    const NormalizedParams p = normalize(sp);
    const double analytic = dl_rate_ara_singular(p, 1e-7).value;
    Scheme s;
    s.assoc = Association::all_rrh;
    const RateEstimate mc =
        estimate_rate(p, s, McBudget{600, 10}, 72, 0, RateSelect::dl_only);
    CHECK(std::abs(analytic - mc.dl_rate) / analytic < 0.03);
}

TEST_CASE("half-duplex ARA form matches a large-disc singular simulation") {
    SystemParams sp;
    sp.epsilon = 1e-6;
    sp.radius = 2000.0;
    const NormalizedParams p = normalize(sp);
    const double analytic = hd_rate_ara(p, 1e-7).value;
    Scheme s;
    s.assoc = Association::all_rrh;
    s.duplex = Duplex::half;
    const RateEstimate mc = estimate_rate(p, s, McBudget{400, 10}, 73, 0);
    CHECK(std::abs(analytic - mc.sum_rate) / analytic < 0.03);
}

TEST_CASE("half-duplex SRA rates match simulation") {
    const NormalizedParams p = base_params();
    const HdComponents a = hd_rates_sra(p, 1e-7);
    Scheme s;
    s.assoc = Association::nearest;
    s.duplex = Duplex::half;
    const RateEstimate mc = estimate_rate(p, s, McBudget{4000, 20}, 74, 0);
    CHECK(std::abs(a.dl.value - mc.dl_rate) / a.dl.value < 0.03);
    CHECK(std::abs(a.ul.value - mc.ul_rate) / a.ul.value < 0.03);
}

TEST_CASE("half-duplex SRA symmetry at matched powers and split") {
    SystemParams sp;
    sp.p_b_dbm = sp.p_u_dbm; // equal powers
    sp.p_dl = 0.5;
    sp.tau = 0.5;
    const NormalizedParams p = normalize(sp);
    const HdComponents c = hd_rates_sra(p, 1e-8);
    CHECK(c.dl.value == doctest::Approx(c.ul.value).epsilon(1e-9));
    // DL substitution sends the DL density into the nearest-distance law.
    NormalizedParams q = p;
    q.p_dl = 0.8;
    const HdComponents c2 = hd_rates_sra(q, 1e-8);
    CHECK(c2.dl.value > c.dl.value);
    CHECK(c2.ul.value < c.ul.value);
}
