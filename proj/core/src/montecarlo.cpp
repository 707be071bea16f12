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

#include "cranfd/montecarlo.hpp"

#include "cranfd/stats.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace cranfd {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string Scheme::name() const {
    std::string s = (assoc == Association::all_rrh) ? "ARA" : "SRA";
    s += (combiner == UlCombiner::mrc) ? "-MRC" : "-ZF";
    s += (duplex == Duplex::full) ? "-FD" : "-HD";
    if (assoc == Association::nearest && pair_model == PairModel::nearest)
        s += "-npair";
    return s;
}

McBudget McBudget::scaled(double f) const {
    McBudget b;
    b.n_spatial = std::max<std::size_t>(8, static_cast<std::size_t>(n_spatial * f));
    b.n_fading = std::max<std::size_t>(2, static_cast<std::size_t>(n_fading * f));
    return b;
}

int resolve_threads(int requested) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    int n = requested > 0 ? requested : hw;
    if (const char *env = std::getenv("CRAN_DUPLEX_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, n);
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)> &body) {
    threads = resolve_threads(threads);
    if (threads == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = std::min<std::size_t>(threads, n);
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
}

namespace {

// ---- per-pattern geometry, reused across fading draws --------------------

struct PatternGeometry {
    std::vector<double> dl_gain; // ell(x_i) per DL RRH
    std::vector<double> ul_gain; // ell(x_j) per UL RRH
    std::ptrdiff_t nearest_dl = -1;
    std::ptrdiff_t nearest_ul = -1;
    double sra_pair_gain = 0.0;          // ell(d_ud) under the pair model
    std::vector<double> cross_gain;      // [n_ul * n_dl], ARA UL only
    std::vector<std::uint32_t> cancel_idx; // nearest DL per UL RRH (ZF-nearest)
    std::uint32_t n_dl = 0;
    std::uint32_t n_ul = 0;
};

bool needs_cross_matrix(const Scheme &s, RateSelect sel) {
    return s.assoc == Association::all_rrh && s.duplex == Duplex::full &&
           sel != RateSelect::dl_only;
}

PatternGeometry build_geometry(const PointPattern &pat,
                               const NormalizedParams &p, const Scheme &scheme,
                               RateSelect sel, Rng &rng) {
    PatternGeometry g;
    g.n_dl = static_cast<std::uint32_t>(pat.n_dl());
    g.n_ul = static_cast<std::uint32_t>(pat.n_ul());
    g.dl_gain.reserve(g.n_dl);
    for (const auto &pt : pat.dl_points)
        g.dl_gain.push_back(path_loss(pt.norm(), p.epsilon, p.alpha));
    g.ul_gain.reserve(g.n_ul);
    for (const auto &pt : pat.ul_points)
        g.ul_gain.push_back(path_loss(pt.norm(), p.epsilon, p.alpha));
    if (auto q = nearest(pat.dl_points)) g.nearest_dl = q->index;
    if (auto pt = nearest(pat.ul_points)) g.nearest_ul = pt->index;

    if (scheme.assoc == Association::nearest) {
        // The UL interference distance. Drawn for every nearest-association
        // scheme so stream consumption does not depend on the combiner.
        const double ur1 = pat.radius * std::sqrt(rng.uniform01());
        const double ut1 = 2.0 * kPi * rng.uniform01_left();
        const double ur2 = pat.radius * std::sqrt(rng.uniform01());
        const double ut2 = 2.0 * kPi * rng.uniform01_left();
        if (scheme.pair_model == PairModel::uniform) {
            const Point2 a{ur1 * std::cos(ut1), ur1 * std::sin(ut1)};
            const Point2 b{ur2 * std::cos(ut2), ur2 * std::sin(ut2)};
            g.sra_pair_gain = path_loss(distance(a, b), p.epsilon, p.alpha);
        } else if (g.nearest_dl >= 0 && g.nearest_ul >= 0) {
            g.sra_pair_gain =
                path_loss(distance(pat.ul_points[g.nearest_ul],
                                   pat.dl_points[g.nearest_dl]),
                          p.epsilon, p.alpha);
        }
    } else if (needs_cross_matrix(scheme, sel)) {
        g.cross_gain.resize(static_cast<std::size_t>(g.n_ul) * g.n_dl);
        for (std::uint32_t j = 0; j < g.n_ul; ++j)
            for (std::uint32_t i = 0; i < g.n_dl; ++i)
                g.cross_gain[static_cast<std::size_t>(j) * g.n_dl + i] =
                    path_loss(distance(pat.ul_points[j], pat.dl_points[i]),
                              p.epsilon, p.alpha);
        if (scheme.combiner == UlCombiner::zf) {
            g.cancel_idx.resize(g.n_ul);
            for (std::uint32_t j = 0; j < g.n_ul; ++j)
                g.cancel_idx[j] = static_cast<std::uint32_t>(
                    nearest_to(pat.dl_points, pat.ul_points[j])->index);
        }
    }
    return g;
}

// ---- per-(pattern, fading) sufficient statistics --------------------------

struct RealizationStats {
    double dl_signal = 0.0;       // per unit p_b
    double ul_signal = 0.0;       // per unit p_u
    double ul_interference = 0.0; // per unit p_b
    double li_unit = 0.0;         // Exp(1); |h_LI|^2 = sigma_li * li_unit
    std::uint32_t n_dl = 0;
};

// Nearest association: explicit channel vectors and the drawn cross matrix,
// evaluated through the production beamforming path.
RealizationStats kernel_sra(const PatternGeometry &g, const NormalizedParams &p,
                            const Scheme &scheme, RateSelect sel, Rng &rng) {
    (void)sel;
    RealizationStats st;
    st.n_dl = g.n_dl;
    const int m = p.m_antennas;
    CVec h_q, g_p;
    if (g.nearest_dl >= 0) {
        h_q = draw_cn_vector(m, rng);
        st.dl_signal = g.dl_gain[g.nearest_dl] * norm2(h_q);
    }
    if (g.nearest_ul >= 0) {
        g_p = draw_cn_vector(m, rng);
    }
    const bool interference_active = scheme.duplex == Duplex::full &&
                                     g.nearest_ul >= 0 && g.nearest_dl >= 0;
    if (interference_active) {
        const CMat h_ud = draw_cn_matrix(m, m, rng);
        const CVec w_t = mrt(h_q);
        if (scheme.combiner == UlCombiner::zf) {
            const CVec w = zf_receive(g_p, matvec(h_ud, w_t));
            st.ul_signal = g.ul_gain[g.nearest_ul] * std::norm(dot_conj(w, g_p));
            st.ul_interference = 0.0;
        } else {
            const CVec w_r = mrt(g_p);
            double z_sum = 0.0;
            for (int i = 0; i < m; ++i) {
                const double u_i = std::norm(dot_conj(w_r, h_ud.col(i)));
                const double v_i = std::norm(w_t[static_cast<std::size_t>(i)]);
                z_sum += u_i * v_i;
            }
            st.ul_signal = g.ul_gain[g.nearest_ul] * norm2(g_p);
            st.ul_interference = g.sra_pair_gain * z_sum;
        }
    } else if (g.nearest_ul >= 0) {
        st.ul_signal = g.ul_gain[g.nearest_ul] * norm2(g_p);
    }
    if (scheme.duplex == Duplex::full) st.li_unit = rng.exponential();
    return st;
}

// All-RRH association: sampled through the sufficient statistics of the
// beamformed links. With MRT, |h_i^dag w_i|^2 = ||h_i||^2 and the per-pair
// interference is sum_m |w_r^dag h_m|^2 |w_t,m|^2 where the |w_r^dag h_m|^2
// are i.i.d. unit-mean exponentials (unit-norm w_r against an independent
// Gaussian column) and the transmit weight profile |w_t,m|^2 is shared by
// every UL RRH hearing DL RRH i. ZF projections give Gamma(M-1,1) signal
// terms. Equivalence with the explicit-vector path is covered by
// distribution tests.
RealizationStats kernel_ara(const PatternGeometry &g, const NormalizedParams &p,
                            const Scheme &scheme, RateSelect sel, Rng &rng) {
    const bool want_ul = sel != RateSelect::dl_only;
    RealizationStats st;
    st.n_dl = g.n_dl;
    const int m = p.m_antennas;
    const bool interference_on = want_ul && scheme.duplex == Duplex::full &&
                                 g.n_dl > 0 && g.n_ul > 0;
    // DL draws: squared norms, plus MRT weight profiles when the UL
    // interference needs them.
    std::vector<double> weight_profile;
    if (interference_on)
        weight_profile.resize(static_cast<std::size_t>(g.n_dl) * m);
    for (std::uint32_t i = 0; i < g.n_dl; ++i) {
        if (interference_on) {
            double *v = weight_profile.data() + static_cast<std::size_t>(i) * m;
            double total = 0.0;
            for (int mm = 0; mm < m; ++mm) {
                v[mm] = rng.exponential(); // |h_im|^2
                total += v[mm];
            }
            for (int mm = 0; mm < m; ++mm) v[mm] /= total;
            st.dl_signal += g.dl_gain[i] * total;
        } else {
            st.dl_signal += g.dl_gain[i] * rng.gamma_int(m);
        }
    }
    // Drawn before any UL work so DL values do not depend on the selection.
    if (scheme.duplex == Duplex::full) st.li_unit = rng.exponential();
    const bool zf = scheme.combiner == UlCombiner::zf &&
                    scheme.duplex == Duplex::full && g.n_dl > 0;
    for (std::uint32_t j = 0; want_ul && j < g.n_ul; ++j) {
        st.ul_signal += g.ul_gain[j] * rng.gamma_int(zf ? m - 1 : m);
        if (interference_on) {
            const double *row =
                g.cross_gain.data() + static_cast<std::size_t>(j) * g.n_dl;
            const std::uint32_t skip = zf ? g.cancel_idx[j] : g.n_dl;
            for (std::uint32_t i = 0; i < g.n_dl; ++i) {
                if (i == skip) continue;
                const double *v =
                    weight_profile.data() + static_cast<std::size_t>(i) * m;
                double z_sum = 0.0;
                for (int mm = 0; mm < m; ++mm)
                    z_sum += v[mm] * rng.exponential();
                st.ul_interference += row[i] * z_sum;
            }
        }
    }
    return st;
}

RealizationStats run_kernel(const PatternGeometry &g, const NormalizedParams &p,
                            const Scheme &scheme, RateSelect sel, Rng &rng) {
    return scheme.assoc == Association::nearest
               ? kernel_sra(g, p, scheme, sel, rng)
               : kernel_ara(g, p, scheme, sel, rng);
}

struct RatePair {
    double dl = 0.0;
    double ul = 0.0;
};

RatePair rates_from_stats(const RealizationStats &st, const NormalizedParams &p,
                          const Scheme &scheme) {
    double p_b_eff = p.p_b;
    if (scheme.assoc == Association::all_rrh &&
        p.ara_power_split == AraPowerSplit::total && st.n_dl > 0)
        p_b_eff = p.p_b / static_cast<double>(st.n_dl);
    RatePair r;
    if (scheme.duplex == Duplex::full) {
        const double li = p.p_u * p.sigma_li * st.li_unit + 1.0;
        r.dl = std::log1p(p_b_eff * st.dl_signal / li);
        r.ul = std::log1p(p.p_u * st.ul_signal /
                          (p_b_eff * st.ul_interference + 1.0));
    } else {
        r.dl = p.tau * std::log1p(p_b_eff * st.dl_signal);
        r.ul = (1.0 - p.tau) * std::log1p(p.p_u * st.ul_signal);
    }
    return r;
}

void check_scheme(const NormalizedParams &p, const Scheme &scheme) {
    if (scheme.combiner == UlCombiner::zf && p.m_antennas < 2)
        throw std::invalid_argument("ZF requires M > 1");
}

struct MeanStderr {
    double mean = 0.0;
    double se = 0.0;
};

MeanStderr reduce(const std::vector<double> &per_pattern) {
    const double n = static_cast<double>(per_pattern.size());
    const double mean = pairwise_sum(per_pattern) / n;
    std::vector<double> sq(per_pattern.size());
    for (std::size_t i = 0; i < per_pattern.size(); ++i) {
        const double d = per_pattern[i] - mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / std::max(1.0, n - 1.0);
    return MeanStderr{mean, std::sqrt(var / n)};
}

} // namespace

RateEstimate estimate_rate(const NormalizedParams &params, const Scheme &scheme,
                           const McBudget &budget, std::uint64_t seed,
                           int threads, RateSelect select) {
    check_scheme(params, scheme);
    if (budget.n_spatial < 1 || budget.n_fading < 1)
        throw std::invalid_argument("estimate_rate: budget must be >= 1");
    const std::size_t n_sp = budget.n_spatial;
    const std::size_t n_f = budget.n_fading;
    std::vector<double> per_dl(n_sp), per_ul(n_sp), per_sum(n_sp);

    parallel_for(n_sp, threads, [&](std::size_t i) {
        Rng prng(stream_id(seed, i, "pattern"));
        const PointPattern pat =
            sample_pattern(params.lambda, params.p_dl, params.radius, prng);
        const PatternGeometry geom =
            build_geometry(pat, params, scheme, select, prng);
        double acc_dl = 0.0, acc_ul = 0.0;
        for (std::size_t j = 0; j < n_f; ++j) {
            Rng frng(stream_id(seed, i * n_f + j, "fading"));
            const RealizationStats st =
                run_kernel(geom, params, scheme, select, frng);
            const RatePair r = rates_from_stats(st, params, scheme);
            acc_dl += r.dl;
            acc_ul += r.ul;
        }
        per_dl[i] = acc_dl / static_cast<double>(n_f);
        per_ul[i] = acc_ul / static_cast<double>(n_f);
        per_sum[i] = per_dl[i] + per_ul[i];
    });

    const MeanStderr dl = reduce(per_dl);
    const MeanStderr ul = reduce(per_ul);
    const MeanStderr sum = reduce(per_sum);
    RateEstimate est;
    est.dl_rate = dl.mean;
    est.ul_rate = ul.mean;
    est.sum_rate = sum.mean;
    est.dl_stderr = dl.se;
    est.ul_stderr = ul.se;
    est.sum_stderr = sum.se;
    est.n_spatial = n_sp;
    est.n_fading = n_f;
    est.scheme = scheme.name();
    est.seed = seed;
    return est;
}

namespace {

SystemParams with_variable(SystemParams base, SweepVariable var, double value) {
    switch (var) {
        case SweepVariable::sigma_li: base.sigma_li_dbm = value; break;
        case SweepVariable::p_u: base.p_u_dbm = value; break;
        case SweepVariable::p_b: base.p_b_dbm = value; break;
        case SweepVariable::p_dl: base.p_dl = value; break;
        case SweepVariable::radius: base.radius = value; break;
        case SweepVariable::lambda: base.lambda = value; break;
    }
    return base;
}

bool power_like(SweepVariable var) {
    return var == SweepVariable::sigma_li || var == SweepVariable::p_u ||
           var == SweepVariable::p_b;
}

// Grid endpoints 0 and 1 of the DL fraction are degenerate (one side empty);
// they bypass the strict (0,1) load-time validation on purpose.
NormalizedParams normalize_endpoint(SystemParams sp) {
    const double p = sp.p_dl;
    sp.p_dl = 0.5;
    NormalizedParams np = normalize(sp);
    np.p_dl = p;
    return np;
}

NormalizedParams normalize_lenient(const SystemParams &sp) {
    if (sp.p_dl > 0.0 && sp.p_dl < 1.0) return normalize(sp);
    if (sp.p_dl == 0.0 || sp.p_dl == 1.0) return normalize_endpoint(sp);
    throw ConfigError("p_dl must lie in [0,1]");
}

std::vector<SweepPoint> sweep_power_crn(const SystemParams &base,
                                        const Scheme &scheme,
                                        SweepVariable var,
                                        const std::vector<double> &grid,
                                        const McBudget &budget,
                                        std::uint64_t seed, int threads,
                                        RateSelect select) {
    std::vector<NormalizedParams> variants;
    variants.reserve(grid.size());
    for (double v : grid)
        variants.push_back(normalize_lenient(with_variable(base, var, v)));
    const NormalizedParams &p0 = variants.front();
    check_scheme(p0, scheme);

    const std::size_t n_sp = budget.n_spatial;
    const std::size_t n_f = budget.n_fading;
    const std::size_t n_g = grid.size();
    std::vector<std::vector<double>> per_dl(n_g, std::vector<double>(n_sp));
    std::vector<std::vector<double>> per_ul(n_g, std::vector<double>(n_sp));
    std::vector<std::vector<double>> per_sum(n_g, std::vector<double>(n_sp));

    parallel_for(n_sp, threads, [&](std::size_t i) {
        Rng prng(stream_id(seed, i, "pattern"));
        const PointPattern pat =
            sample_pattern(p0.lambda, p0.p_dl, p0.radius, prng);
        const PatternGeometry geom =
            build_geometry(pat, p0, scheme, select, prng);
        std::vector<double> acc_dl(n_g, 0.0), acc_ul(n_g, 0.0);
        for (std::size_t j = 0; j < n_f; ++j) {
            Rng frng(stream_id(seed, i * n_f + j, "fading"));
            const RealizationStats st =
                run_kernel(geom, p0, scheme, select, frng);
            for (std::size_t g = 0; g < n_g; ++g) {
                const RatePair r = rates_from_stats(st, variants[g], scheme);
                acc_dl[g] += r.dl;
                acc_ul[g] += r.ul;
            }
        }
        for (std::size_t g = 0; g < n_g; ++g) {
            per_dl[g][i] = acc_dl[g] / static_cast<double>(n_f);
            per_ul[g][i] = acc_ul[g] / static_cast<double>(n_f);
            per_sum[g][i] = per_dl[g][i] + per_ul[g][i];
        }
    });

    std::vector<SweepPoint> out(n_g);
    for (std::size_t g = 0; g < n_g; ++g) {
        const MeanStderr dl = reduce(per_dl[g]);
        const MeanStderr ul = reduce(per_ul[g]);
        const MeanStderr sum = reduce(per_sum[g]);
        out[g].value = grid[g];
        out[g].estimate.dl_rate = dl.mean;
        out[g].estimate.ul_rate = ul.mean;
        out[g].estimate.sum_rate = sum.mean;
        out[g].estimate.dl_stderr = dl.se;
        out[g].estimate.ul_stderr = ul.se;
        out[g].estimate.sum_stderr = sum.se;
        out[g].estimate.n_spatial = n_sp;
        out[g].estimate.n_fading = n_f;
        out[g].estimate.scheme = scheme.name();
        out[g].estimate.seed = seed;
    }
    return out;
}

} // namespace

std::vector<SweepPoint> sweep(const SystemParams &base, const Scheme &scheme,
                              SweepVariable variable,
                              const std::vector<double> &grid,
                              const McBudget &budget, std::uint64_t seed,
                              int threads, RateSelect select) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("sweep: grid must be increasing");
    if (power_like(variable))
        return sweep_power_crn(base, scheme, variable, grid, budget, seed,
                               threads, select);
    std::vector<SweepPoint> out;
    out.reserve(grid.size());
    for (double v : grid) {
        const NormalizedParams np =
            normalize_lenient(with_variable(base, variable, v));
        SweepPoint pt;
        pt.value = v;
        pt.estimate = estimate_rate(np, scheme, budget, seed, threads, select);
        out.push_back(std::move(pt));
    }
    return out;
}

SaturationProbe ara_dl_saturation_probe(const NormalizedParams &params,
                                        const McBudget &budget,
                                        std::uint64_t seed, int threads) {
    const std::size_t n_sp = budget.n_spatial;
    const std::size_t n_f = budget.n_fading;
    const double r_small = params.radius;
    NormalizedParams big = params;
    big.radius = 2.0 * params.radius;

    std::vector<double> per_small(n_sp), per_big(n_sp), per_diff(n_sp);
    parallel_for(n_sp, threads, [&](std::size_t i) {
        Rng prng(stream_id(seed, i, "pattern"));
        const PointPattern pat =
            sample_pattern(big.lambda, big.p_dl, big.radius, prng);
        std::vector<double> gain(pat.n_dl());
        std::vector<bool> inside(pat.n_dl());
        for (std::size_t k = 0; k < pat.n_dl(); ++k) {
            const double d = pat.dl_points[k].norm();
            gain[k] = path_loss(d, params.epsilon, params.alpha);
            inside[k] = d <= r_small;
        }
        double acc_s = 0.0, acc_b = 0.0;
        for (std::size_t j = 0; j < n_f; ++j) {
            Rng frng(stream_id(seed, i * n_f + j, "fading"));
            double sig_small = 0.0, sig_big = 0.0;
            for (std::size_t k = 0; k < pat.n_dl(); ++k) {
                const double s = gain[k] * frng.gamma_int(params.m_antennas);
                sig_big += s;
                if (inside[k]) sig_small += s;
            }
            const double li =
                params.p_u * params.sigma_li * frng.exponential() + 1.0;
            acc_s += std::log1p(params.p_b * sig_small / li);
            acc_b += std::log1p(params.p_b * sig_big / li);
        }
        per_small[i] = acc_s / static_cast<double>(n_f);
        per_big[i] = acc_b / static_cast<double>(n_f);
        per_diff[i] = per_big[i] - per_small[i];
    });

    const MeanStderr s = reduce(per_small);
    const MeanStderr b = reduce(per_big);
    const MeanStderr d = reduce(per_diff);
    return SaturationProbe{s.mean, b.mean, d.mean, d.se};
}

} // namespace cranfd
