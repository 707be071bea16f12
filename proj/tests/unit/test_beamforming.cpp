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

#include "cranfd/beamforming.hpp"

#include "cranfd/specfun.hpp"
#include "cranfd/stats.hpp"

#include <doctest.h>

#include <cmath>

using namespace cranfd;

namespace {

NormalizedParams test_params(int m = 2) {
    SystemParams sp;
    sp.m_antennas = m;
    NormalizedParams np = normalize(sp);
    return np;
}

} // namespace

TEST_CASE("mrt basics and Cauchy-Schwarz equality") {
    const CVec h{{1.0, 0.0}, {0.0, 0.0}};
    const CVec w = mrt(h);
    CHECK(std::abs(w[0] - cplx{1.0, 0.0}) < 1e-15);
    CHECK_THROWS_AS(mrt(CVec{{0.0, 0.0}}), std::invalid_argument);

    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const CVec g = draw_cn_vector(3, rng);
        const CVec wg = mrt(g);
        CHECK(norm(wg) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::norm(dot_conj(g, wg)) ==
              doctest::Approx(norm2(g)).epsilon(1e-12));
    }
}

TEST_CASE("mrt scale invariance up to phase") {
    Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        const CVec h = draw_cn_vector(4, rng);
        const cplx c = rng.cnormal() * 3.0;
        if (std::abs(c) < 1e-9) continue;
        CVec hc(h.size());
        for (std::size_t k = 0; k < h.size(); ++k) hc[k] = c * h[k];
        const CVec w1 = mrt(h);
        const CVec w2 = mrt(hc);
        // |h^dag w| is unchanged by scaling the beamforming input.
        CHECK(std::norm(dot_conj(h, w1)) ==
              doctest::Approx(std::norm(dot_conj(h, w2))).epsilon(1e-10));
    }
}

TEST_CASE("zf_receive: orthogonal case, null property, dof distribution") {
    // Already-orthogonal input passes through.
    const CVec g{{1.0, 0.0}, {0.0, 0.0}};
    const CVec hx{{0.0, 0.0}, {1.0, 0.0}};
    const CVec w = zf_receive(g, hx);
    CHECK(std::abs(w[0] - cplx{1.0, 0.0}) < 1e-14);

    CHECK_THROWS_AS(zf_receive(CVec{{1.0, 0.0}}, CVec{{1.0, 0.0}}),
                    std::invalid_argument);

    Rng rng(33);
    for (int i = 0; i < 1000; ++i) {
        const CVec gv = draw_cn_vector(3, rng);
        const CVec hv = draw_cn_vector(3, rng);
        const CVec wv = zf_receive(gv, hv);
        CHECK(norm(wv) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(dot_conj(wv, hv)) <= 1e-10 * norm(hv));
        // Post-combining leakage relative to signal.
        const double leak = std::norm(dot_conj(wv, hv)) / norm2(hv);
        const double sig = std::norm(dot_conj(wv, gv));
        if (sig > 1e-12) CHECK(leak / sig < 1e-20);
    }

    const int m = 3;
    std::vector<double> s(100000);
    double acc = 0.0;
    for (auto &x : s) {
        const CVec gv = draw_cn_vector(m, rng);
        const CVec hv = draw_cn_vector(m, rng);
        x = std::norm(dot_conj(zf_receive(gv, hv), gv));
        acc += x;
    }
    CHECK(acc / s.size() == doctest::Approx(m - 1.0).epsilon(0.01));
    CHECK(ks_test(std::move(s), [m](double x) { return gamma_cdf(m - 1, x); })
              .p_value > 0.01);
}

TEST_CASE("DL SINR: empty set, single-RRH value, term-by-term oracle") {
    const NormalizedParams np = test_params(2);
    PointPattern pat;
    pat.radius = np.radius;
    FadingDraw fd;
    fd.li_coeff = {0.0, 0.0};
    CHECK(sinr_dl_ara({pat, fd, np}) == 0.0);

    // One RRH at distance d with a known channel: P ||h||^2 / (eps + d^a).
    pat.dl_points = {{30.0, 40.0}}; // d = 50
    Rng rng(41);
    FadingDraw fd1 = draw_fading(pat, np.m_antennas, 0.0, FadingScope::all_pairs, rng);
    const double expected = np.p_b * norm2(fd1.dl_vectors[0]) /
                            (np.epsilon + std::pow(50.0, np.alpha));
    CHECK(sinr_dl_ara({pat, fd1, np}) ==
          doctest::Approx(expected).epsilon(1e-12));
    // Single-point pattern: SRA equals ARA.
    CHECK(sinr_dl_sra({pat, fd1, np}) ==
          doctest::Approx(sinr_dl_ara({pat, fd1, np})).epsilon(1e-12));

    // Random realizations against an independent term-by-term evaluation.
    Rng rng2(42);
    for (int trial = 0; trial < 1000; ++trial) {
        PointPattern rp;
        rp.radius = 100.0;
        const auto pts = sample_ppp_disc(1e-3, 100.0, rng2);
        rp.dl_points = pts;
        if (pts.empty()) continue;
        FadingDraw rf =
            draw_fading(rp, np.m_antennas, np.sigma_li, FadingScope::all_pairs, rng2);
        double num = 0.0;
        for (std::size_t i = 0; i < rp.dl_points.size(); ++i) {
            const double d = rp.dl_points[i].norm();
            const CVec w = mrt(rf.dl_vectors[i]);
            num += np.p_b * std::norm(dot_conj(rf.dl_vectors[i], w)) /
                   (np.epsilon + std::pow(d, np.alpha));
        }
        const double den = np.p_u * std::norm(rf.li_coeff) + 1.0;
        CHECK(sinr_dl_ara({rp, rf, np}) ==
              doctest::Approx(num / den).epsilon(1e-12));
    }
}

TEST_CASE("SRA DL ignores farther RRHs") {
    const NormalizedParams np = test_params(2);
    PointPattern pat;
    pat.radius = np.radius;
    pat.dl_points = {{10.0, 0.0}};
    Rng rng(43);
    FadingDraw fd = draw_fading(pat, np.m_antennas, 0.1, FadingScope::all_pairs, rng);
    const double base = sinr_dl_sra({pat, fd, np});
    PointPattern pat2 = pat;
    pat2.dl_points.push_back({200.0, 5.0});
    FadingDraw fd2 = fd;
    fd2.dl_vectors.push_back(draw_cn_vector(np.m_antennas, rng));
    CHECK(sinr_dl_sra({pat2, fd2, np}) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("DL SINR denominator scales with the loopback draw") {
    NormalizedParams np = test_params(2);
    np.sigma_li = 1e6; // LI dominates the +1
    PointPattern pat;
    pat.radius = np.radius;
    pat.dl_points = {{10.0, 0.0}};
    Rng rng(44);
    FadingDraw fd = draw_fading(pat, np.m_antennas, np.sigma_li,
                                FadingScope::all_pairs, rng);
    const double s1 = sinr_dl_sra({pat, fd, np});
    FadingDraw fd2 = fd;
    fd2.li_coeff *= std::sqrt(2.0);
    const double s2 = sinr_dl_sra({pat, fd2, np});
    CHECK(s1 / s2 == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("increasing LI magnitude never raises DL SINR") {
    const NormalizedParams np = test_params(2);
    PointPattern pat;
    pat.radius = np.radius;
    pat.dl_points = {{20.0, 0.0}};
    Rng rng(45);
    FadingDraw fd = draw_fading(pat, np.m_antennas, 1.0, FadingScope::all_pairs, rng);
    double prev = std::numeric_limits<double>::infinity();
    for (double scale : {0.5, 1.0, 2.0, 4.0}) {
        FadingDraw v = fd;
        v.li_coeff = fd.li_coeff * scale;
        const double s = sinr_dl_sra({pat, v, np});
        CHECK(s <= prev);
        prev = s;
    }
}

TEST_CASE("UL SRA: no-UL signal, ZF P_b independence, M=1 interference") {
    NormalizedParams np = test_params(2);
    PointPattern pat;
    pat.radius = np.radius;
    FadingDraw fd;
    CHECK_FALSE(sinr_ul_sra({pat, fd, np}, UlCombiner::mrc).has_value());

    pat.ul_points = {{15.0, 0.0}};
    pat.dl_points = {{0.0, 25.0}};
    Rng rng(46);
    FadingDraw fd2 =
        draw_fading(pat, np.m_antennas, np.sigma_li, FadingScope::nearest_pair, rng);
    NormalizedParams hi = np, lo = np;
    hi.p_b = 1e9;
    lo.p_b = 0.0;
    const double zf_hi = *sinr_ul_sra({pat, fd2, hi}, UlCombiner::zf);
    const double zf_lo = *sinr_ul_sra({pat, fd2, lo}, UlCombiner::zf);
    CHECK(zf_hi == zf_lo);

    // M = 1: V_1 = 1, interference reduces to the plain bilinear term.
    NormalizedParams np1 = test_params(1);
    Rng rng1(47);
    FadingDraw fd3 = draw_fading(pat, 1, np1.sigma_li, FadingScope::nearest_pair, rng1);
    const double sinr = *sinr_ul_sra({pat, fd3, np1}, UlCombiner::mrc);
    const CMat &h = fd3.cross_at(0, 0);
    const double d_pair = distance(pat.ul_points[0], pat.dl_points[0]);
    const double ell = 1.0 / (np1.epsilon + std::pow(d_pair, np1.alpha));
    const double sig = np1.p_u * norm2(fd3.ul_vectors[0]) /
                       (np1.epsilon + std::pow(15.0, np1.alpha));
    const double interf = np1.p_b * ell * std::norm(h(0, 0));
    CHECK(sinr == doctest::Approx(sig / (interf + 1.0)).epsilon(1e-12));

    CHECK_THROWS_AS(sinr_ul_sra({pat, fd3, np1}, UlCombiner::zf),
                    std::invalid_argument);
}

TEST_CASE("UL SRA MRC interference mean: E[sum Z_i] = 1") {
    const NormalizedParams np = test_params(2);
    PointPattern pat;
    pat.radius = np.radius;
    pat.ul_points = {{10.0, 0.0}};
    pat.dl_points = {{0.0, 10.0}};
    const double d_pair = distance(pat.ul_points[0], pat.dl_points[0]);
    const double ell = 1.0 / (np.epsilon + std::pow(d_pair, np.alpha));
    Rng rng(48);
    const int n = 200000;
    double acc = 0.0;
    NormalizedParams probe = np;
    probe.p_b = 1.0;
    probe.p_u = 1e12; // make the +1 negligible against the interference
    for (int i = 0; i < n; ++i) {
        FadingDraw fd =
            draw_fading(pat, np.m_antennas, 0.0, FadingScope::nearest_pair, rng);
        const double sinr = *sinr_ul_sra({pat, fd, probe}, UlCombiner::mrc);
        const double sig = probe.p_u * norm2(fd.ul_vectors[0]) /
                           (probe.epsilon + std::pow(10.0, probe.alpha));
        // Recover sum Z_i from the SINR definition.
        acc += (sig / sinr - 1.0) / ell;
    }
    CHECK(acc / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("UL ARA: degenerate single pair equals SRA; zero-DL pure SNR sum") {
    const NormalizedParams np = test_params(2);
    PointPattern pat;
    pat.radius = np.radius;
    pat.ul_points = {{12.0, 3.0}};
    pat.dl_points = {{-8.0, 20.0}};
    Rng rng(49);
    FadingDraw fd =
        draw_fading(pat, np.m_antennas, np.sigma_li, FadingScope::all_pairs, rng);
    CHECK(*sinr_ul_ara({pat, fd, np}, UlCombiner::mrc) ==
          doctest::Approx(*sinr_ul_sra({pat, fd, np}, UlCombiner::mrc))
              .epsilon(1e-12));

    PointPattern pat2;
    pat2.radius = np.radius;
    pat2.ul_points = {{12.0, 3.0}, {0.0, -30.0}};
    Rng rng2(50);
    FadingDraw fd2 =
        draw_fading(pat2, np.m_antennas, np.sigma_li, FadingScope::all_pairs, rng2);
    double expect = 0.0;
    for (std::size_t j = 0; j < pat2.n_ul(); ++j) {
        const double d = pat2.ul_points[j].norm();
        expect += np.p_u * norm2(fd2.ul_vectors[j]) /
                  (np.epsilon + std::pow(d, np.alpha));
    }
    CHECK(*sinr_ul_ara({pat2, fd2, np}, UlCombiner::mrc) ==
          doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("UL ARA ZF-nearest cancels exactly one interferer") {
    const NormalizedParams np = test_params(3);
    PointPattern pat;
    pat.radius = np.radius;
    pat.ul_points = {{10.0, 0.0}};
    pat.dl_points = {{0.0, 12.0}}; // the single (hence nearest) DL interferer
    Rng rng(51);
    FadingDraw fd =
        draw_fading(pat, np.m_antennas, np.sigma_li, FadingScope::all_pairs, rng);
    NormalizedParams hot = np;
    hot.p_b = 1e12;
    const double with_hot = *sinr_ul_ara({pat, fd, hot}, UlCombiner::zf);
    NormalizedParams cold = np;
    cold.p_b = 0.0;
    const double with_cold = *sinr_ul_ara({pat, fd, cold}, UlCombiner::zf);
    CHECK(with_hot == doctest::Approx(with_cold).epsilon(1e-12));
}

TEST_CASE("total-power split divides the DL power across realized RRHs") {
    NormalizedParams np = test_params(2);
    PointPattern pat;
    pat.radius = np.radius;
    pat.dl_points = {{10.0, 0.0}, {0.0, 25.0}, {-40.0, 5.0}};
    Rng rng(53);
    FadingDraw fd = draw_fading(pat, np.m_antennas, 0.0, FadingScope::all_pairs, rng);
    const double per_rrh = sinr_dl_ara({pat, fd, np});
    NormalizedParams split = np;
    split.ara_power_split = AraPowerSplit::total;
    CHECK(sinr_dl_ara({pat, fd, split}) ==
          doctest::Approx(per_rrh / 3.0).epsilon(1e-12));
}

TEST_CASE("half-duplex SNR reductions and oracle") {
    NormalizedParams np = test_params(2);
    np.sigma_li = 0.0;
    Rng rng(52);
    for (int trial = 0; trial < 1000; ++trial) {
        PointPattern pat;
        pat.radius = 80.0;
        pat.dl_points = sample_ppp_disc(5e-4, 80.0, rng);
        pat.ul_points = sample_ppp_disc(5e-4, 80.0, rng);
        FadingDraw fd =
            draw_fading(pat, np.m_antennas, 0.0, FadingScope::nearest_pair, rng);
        // DL slot equals the loopback-free full-duplex ARA numerator.
        CHECK(snr_hd({pat, fd, np}, Direction::dl) ==
              doctest::Approx(sinr_dl_ara({pat, fd, np})).epsilon(1e-12));
        // Term-by-term oracle for the UL slot.
        double expect = 0.0;
        for (std::size_t j = 0; j < pat.n_ul(); ++j)
            expect += np.p_u * norm2(fd.ul_vectors[j]) /
                      (np.epsilon + std::pow(pat.ul_points[j].norm(), np.alpha));
        CHECK(snr_hd({pat, fd, np}, Direction::ul) ==
              doctest::Approx(expect).epsilon(1e-11));
    }
}
