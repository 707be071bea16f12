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

#include <cmath>
#include <stdexcept>

namespace cranfd {

FadingDraw draw_fading(const PointPattern &pattern, int m, double sigma_li,
                       FadingScope scope, Rng &rng) {
    FadingDraw fd;
    fd.dl_vectors.reserve(pattern.n_dl());
    for (std::size_t i = 0; i < pattern.n_dl(); ++i)
        fd.dl_vectors.push_back(draw_cn_vector(m, rng));
    fd.ul_vectors.reserve(pattern.n_ul());
    for (std::size_t j = 0; j < pattern.n_ul(); ++j)
        fd.ul_vectors.push_back(draw_cn_vector(m, rng));
    if (scope == FadingScope::all_pairs) {
        for (std::size_t j = 0; j < pattern.n_ul(); ++j)
            for (std::size_t i = 0; i < pattern.n_dl(); ++i)
                fd.cross.emplace(FadingDraw::cross_key(j, i),
                                 draw_cn_matrix(m, m, rng));
    } else if (pattern.n_ul() > 0 && pattern.n_dl() > 0) {
        const auto p = nearest(pattern.ul_points);
        const auto q = nearest(pattern.dl_points);
        fd.cross.emplace(FadingDraw::cross_key(p->index, q->index),
                         draw_cn_matrix(m, m, rng));
    }
    fd.li_coeff = draw_li(sigma_li, rng);
    return fd;
}

CVec mrt(const CVec &h) {
    const double n = norm(h);
    if (n == 0.0) throw std::invalid_argument("mrt: zero vector");
    CVec w(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) w[i] = h[i] / n;
    return w;
}

CVec zf_receive(const CVec &g, const CVec &h_cross) {
    if (g.size() < 2) throw std::invalid_argument("ZF requires M > 1");
    if (g.size() != h_cross.size())
        throw std::invalid_argument("zf_receive: size mismatch");
    const double hn = norm(h_cross);
    if (hn == 0.0) throw std::invalid_argument("zf_receive: zero cross channel");
    CVec u(h_cross.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = h_cross[i] / hn;
    const cplx proj = dot_conj(u, g);
    CVec w(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) w[i] = g[i] - proj * u[i];
    const double wn = norm(w);
    if (wn < 1e-150) throw std::runtime_error("zf_receive: degenerate projection");
    for (auto &z : w) z /= wn;
    return w;
}

namespace {

double li_denominator(const LinkRealization &rz) {
    return rz.params.p_u * std::norm(rz.fading.li_coeff) + 1.0;
}

// Sum over DL RRHs of P ell(x_i) |h_i^dag w_i|^2 with MRT (= P ell ||h||^2).
double dl_mrt_sum(const LinkRealization &rz, double per_rrh_power) {
    double s = 0.0;
    for (std::size_t i = 0; i < rz.pattern.n_dl(); ++i) {
        const double gain = path_loss(rz.pattern.dl_points[i].norm(),
                                      rz.params.epsilon, rz.params.alpha);
        s += per_rrh_power * gain * norm2(rz.fading.dl_vectors[i]);
    }
    return s;
}

double ara_dl_power(const LinkRealization &rz) {
    if (rz.params.ara_power_split == AraPowerSplit::total && rz.pattern.n_dl() > 0)
        return rz.params.p_b / static_cast<double>(rz.pattern.n_dl());
    return rz.params.p_b;
}

} // namespace

double sinr_dl_ara(const LinkRealization &rz) {
    if (rz.pattern.n_dl() == 0) return 0.0;
    return dl_mrt_sum(rz, ara_dl_power(rz)) / li_denominator(rz);
}

double sinr_dl_sra(const LinkRealization &rz) {
    const auto q = nearest(rz.pattern.dl_points);
    if (!q) return 0.0;
    const double gain = path_loss(q->dist, rz.params.epsilon, rz.params.alpha);
    const double sig =
        rz.params.p_b * gain * norm2(rz.fading.dl_vectors[q->index]);
    return sig / li_denominator(rz);
}

std::optional<double> sinr_ul_sra(const LinkRealization &rz, UlCombiner comb) {
    const auto p = nearest(rz.pattern.ul_points);
    if (!p) return std::nullopt;
    const auto q = nearest(rz.pattern.dl_points);
    const CVec &g = rz.fading.ul_vectors[p->index];
    const double sig_gain =
        path_loss(p->dist, rz.params.epsilon, rz.params.alpha);

    if (comb == UlCombiner::zf && rz.params.m_antennas < 2)
        throw std::invalid_argument("ZF requires M > 1");

    if (!q) {
        // No DL RRH: interference-free, MRC is optimal for either setting.
        return rz.params.p_u * sig_gain * norm2(g);
    }

    const CMat &h_ud = rz.fading.cross_at(p->index, q->index);
    const CVec w_t = mrt(rz.fading.dl_vectors[q->index]);
    const double pair_gain =
        path_loss(distance(rz.pattern.ul_points[p->index],
                           rz.pattern.dl_points[q->index]),
                  rz.params.epsilon, rz.params.alpha);

    if (comb == UlCombiner::zf) {
        const CVec w = zf_receive(g, matvec(h_ud, w_t));
        const double sig = std::norm(dot_conj(w, g));
        return rz.params.p_u * sig_gain * sig;
    }

    // MRC: interference decomposed per transmit antenna, Z_i = U_i V_i with
    // U_i = |w_r^dag h_ud_i|^2 and V_i = |w_t_i|^2.
    const CVec w_r = mrt(g);
    double z_sum = 0.0;
    for (int i = 0; i < h_ud.cols; ++i) {
        const double u_i = std::norm(dot_conj(w_r, h_ud.col(i)));
        const double v_i = std::norm(w_t[static_cast<std::size_t>(i)]);
        z_sum += u_i * v_i;
    }
    const double sig = rz.params.p_u * sig_gain * norm2(g);
    return sig / (rz.params.p_b * pair_gain * z_sum + 1.0);
}

std::optional<double> sinr_ul_ara(const LinkRealization &rz, UlCombiner comb) {
    if (rz.pattern.n_ul() == 0) return std::nullopt;
    if (comb == UlCombiner::zf && rz.params.m_antennas < 2)
        throw std::invalid_argument("ZF requires M > 1");

    // Transmit vectors are common to every interference term.
    std::vector<CVec> w_t(rz.pattern.n_dl());
    for (std::size_t i = 0; i < rz.pattern.n_dl(); ++i)
        w_t[i] = mrt(rz.fading.dl_vectors[i]);

    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t j = 0; j < rz.pattern.n_ul(); ++j) {
        const CVec &g = rz.fading.ul_vectors[j];
        const double gain = path_loss(rz.pattern.ul_points[j].norm(),
                                      rz.params.epsilon, rz.params.alpha);
        std::size_t cancel_idx = rz.pattern.n_dl(); // sentinel: none
        CVec w_r;
        if (comb == UlCombiner::zf && rz.pattern.n_dl() > 0) {
            const auto nearest_dl =
                nearest_to(rz.pattern.dl_points, rz.pattern.ul_points[j]);
            cancel_idx = nearest_dl->index;
            w_r = zf_receive(g, matvec(rz.fading.cross_at(j, cancel_idx),
                                       w_t[cancel_idx]));
        } else {
            w_r = mrt(g);
        }
        signal += rz.params.p_u * gain * std::norm(dot_conj(w_r, g));
        for (std::size_t i = 0; i < rz.pattern.n_dl(); ++i) {
            if (i == cancel_idx) continue;
            const double pg =
                path_loss(distance(rz.pattern.ul_points[j], rz.pattern.dl_points[i]),
                          rz.params.epsilon, rz.params.alpha);
            // Same per-transmit-antenna decomposition as the nearest
            // association: sum_m |w_r^dag h_m|^2 |w_t,m|^2.
            const CMat &h_ud = rz.fading.cross_at(j, i);
            double z_sum = 0.0;
            for (int mcol = 0; mcol < h_ud.cols; ++mcol) {
                z_sum += std::norm(dot_conj(w_r, h_ud.col(mcol))) *
                         std::norm(w_t[i][static_cast<std::size_t>(mcol)]);
            }
            interference += rz.params.p_b * pg * z_sum;
        }
    }
    // Per-branch unit noise after combining (||w|| = 1).
    return signal / (interference + 1.0);
}

double snr_hd(const LinkRealization &rz, Direction dir) {
    if (dir == Direction::dl) {
        if (rz.pattern.n_dl() == 0) return 0.0;
        return dl_mrt_sum(rz, rz.params.p_b);
    }
    double s = 0.0;
    for (std::size_t j = 0; j < rz.pattern.n_ul(); ++j) {
        const double gain = path_loss(rz.pattern.ul_points[j].norm(),
                                      rz.params.epsilon, rz.params.alpha);
        s += rz.params.p_u * gain * norm2(rz.fading.ul_vectors[j]);
    }
    return s;
}

double snr_hd_sra(const LinkRealization &rz, Direction dir) {
    if (dir == Direction::dl) {
        const auto q = nearest(rz.pattern.dl_points);
        if (!q) return 0.0;
        const double gain = path_loss(q->dist, rz.params.epsilon, rz.params.alpha);
        return rz.params.p_b * gain * norm2(rz.fading.dl_vectors[q->index]);
    }
    const auto p = nearest(rz.pattern.ul_points);
    if (!p) return 0.0;
    const double gain = path_loss(p->dist, rz.params.epsilon, rz.params.alpha);
    return rz.params.p_u * gain * norm2(rz.fading.ul_vectors[p->index]);
}

} // namespace cranfd
