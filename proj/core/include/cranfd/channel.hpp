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

#include "cranfd/rng.hpp"

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace cranfd {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Dense row-major complex matrix; dimensions stay small (M <= 16).
struct CMat {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> data;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
    cplx &operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const cplx &operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }
    /// Column j as a vector.
    CVec col(int j) const;
};

// ---- small dense complex linear algebra ---------------------------------
cplx dot_conj(const CVec &a, const CVec &b); // a^dag b
double norm2(const CVec &v);                 // ||v||^2
double norm(const CVec &v);
CVec matvec(const CMat &m, const CVec &v);

/// Rayleigh-fading vector: entries i.i.d. CN(0,1).
CVec draw_cn_vector(int m, Rng &rng);

/// Channel matrix with i.i.d. CN(0,1) entries.
CMat draw_cn_matrix(int rows, int cols, Rng &rng);

/// Residual loopback-interference coefficient, CN(0, sigma_li).
cplx draw_li(double sigma_li, Rng &rng);

/// Non-singular path-loss gain 1 / (eps + d^alpha); eps = 0 selects the
/// singular model and then requires d > 0.
double path_loss(double dist, double epsilon, double alpha);

/// One small-scale realization. Cross matrices are drawn only for the
/// (UL, DL) pairs the active scheme needs; key = ul_idx << 32 | dl_idx.
struct FadingDraw {
    std::vector<CVec> dl_vectors;
    std::vector<CVec> ul_vectors;
    std::unordered_map<std::uint64_t, CMat> cross;
    cplx li_coeff{0.0, 0.0};

    static std::uint64_t cross_key(std::size_t ul_idx, std::size_t dl_idx) {
        return (static_cast<std::uint64_t>(ul_idx) << 32) |
               static_cast<std::uint64_t>(dl_idx);
    }
    const CMat &cross_at(std::size_t ul_idx, std::size_t dl_idx) const {
        return cross.at(cross_key(ul_idx, dl_idx));
    }
};

} // namespace cranfd
