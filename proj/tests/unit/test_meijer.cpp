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

#include "cranfd/analytic.hpp"
#include "cranfd/quadrature.hpp"
#include "cranfd/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace cranfd;

TEST_CASE("complex log-gamma agrees with the real implementation") {
    for (double x : {0.3, 1.0, 4.5, 20.0}) {
        CHECK(log_gamma_complex({x, 0.0}).real() ==
              doctest::Approx(ln_gamma(x)).epsilon(1e-12));
        CHECK(std::abs(log_gamma_complex({x, 0.0}).imag()) < 1e-12);
    }
}

TEST_CASE("G11_11(x | 0; 0) = 1/(1+x)") {
    MeijerGSpec spec{1, 1, {0.0}, {0.0}};
    CHECK(meijer_g(spec, 2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
    CHECK(meijer_g(spec, 0.25) == doctest::Approx(0.8).epsilon(1e-8));
}

TEST_CASE("G11_12(x | 1; nu,0) equals the lower incomplete gamma") {
    MeijerGSpec spec{1, 1, {1.0}, {1.0, 0.0}};
    CHECK(meijer_g(spec, 1.0) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-8));
    MeijerGSpec spec2{1, 1, {1.0}, {0.5, 0.0}};
    const double expect = reg_lower_gamma(0.5, 0.7) * gamma_fn(0.5);
    CHECK(meijer_g(spec2, 0.7) == doctest::Approx(expect).epsilon(1e-8));
}

TEST_CASE("G20_12(x | 1; a,0) equals the upper incomplete gamma") {
    const double a = 1.5, x = 2.0;
    MeijerGSpec spec{2, 0, {1.0}, {a, 0.0}};
    CHECK(meijer_g(spec, x) ==
          doctest::Approx(upper_inc_gamma(a, x)).epsilon(1e-8));
}

TEST_CASE("series kernel of the singular bound reduces to G12_21") {
    // int_0^inf z^{a-1} e^{-z} / (1+cz) dz written as a Meijer G; the same
    // number drives the singular-model series terms.
    for (double a : {0.6666666666666666, 1.3333333333333333}) {
        for (double c : {0.5, 4.0}) {
            MeijerGSpec spec{1, 2, {1.0 - a, 0.0}, {0.0}};
            const double direct = integrate_semi_infinite(
                [a, c](double z) {
                    return std::pow(z, a - 1.0) * std::exp(-z) / (1.0 + c * z);
                },
                1e-11);
            CHECK(meijer_g(spec, c) == doctest::Approx(direct).epsilon(1e-7));
        }
    }
}

TEST_CASE("disc-averaged per-RRH MGF: closed Meijer-G form vs quadrature") {
    // The quadrature path (2/R^2) int (1+s/(eps+r^alpha))^-M r dr has a
    // closed form made of binomial/incomplete-gamma pieces whose tail is a
    // G^{1,2}_{2,2}; the two routes must agree to rounding.
    for (int m_antennas : {2, 3}) {
        for (double alpha : {3.0, 4.0}) {
            SystemParams sp;
            sp.m_antennas = m_antennas;
            sp.alpha = alpha;
            const NormalizedParams np = normalize(sp);
            const double R = np.radius, eps = np.epsilon;
            const double delta = 2.0 / alpha;
            const MgfFn quad = mgf_per_point_dl(np, 1e-11);
            for (double s : {0.5, 50.0, 2000.0}) {
                double sum = 0.0;
                for (int i = 0; i < m_antennas; ++i) {
                    for (int j = 0; j <= i; ++j) {
                        const double binom =
                            std::exp(ln_gamma(i + 1.0) - ln_gamma(j + 1.0) -
                                     ln_gamma(i - j + 1.0));
                        const double pref =
                            binom * std::pow(eps, i - j) / gamma_fn(i + 1.0) *
                            s * std::pow(s + 1.0, -(i - (j + delta) + 1.0));
                        MeijerGSpec g{1, 2, {j + delta - i, 1.0}, {j + delta, 0.0}};
                        sum += pref * meijer_g(g, std::pow(R, alpha) / (s + 1.0),
                                               1e-9);
                    }
                }
                const double closed = 1.0 - (delta / (R * R)) * sum;
                CHECK(quad.value(s) == doctest::Approx(closed).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("degenerate contours are reported, never approximated") {
    // Interleaved poles: a_1 - 1 >= b_1.
    MeijerGSpec bad{1, 1, {2.0}, {0.0}};
    CHECK_THROWS_AS(meijer_g(bad, 1.0), std::runtime_error);
    // Divergent order combination: 2(m+n) == p+q.
    MeijerGSpec flat{1, 0, {}, {0.0, 0.5}};
    CHECK_THROWS_AS(meijer_g(flat, 1.0), std::runtime_error);
    // Argument domain.
    MeijerGSpec ok{1, 1, {0.0}, {0.0}};
    CHECK_THROWS_AS(meijer_g(ok, 0.0), std::invalid_argument);
    // Order/list mismatch.
    MeijerGSpec mism{2, 0, {}, {0.0}};
    CHECK_THROWS_AS(meijer_g(mism, 1.0), std::invalid_argument);
}
