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

#include "cranfd/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace cranfd {

CVec CMat::col(int j) const {
    CVec out(rows);
    for (int i = 0; i < rows; ++i) out[i] = (*this)(i, j);
    return out;
}

cplx dot_conj(const CVec &a, const CVec &b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot_conj: size mismatch");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm2(const CVec &v) {
    double s = 0.0;
    for (const auto &z : v) s += std::norm(z);
    return s;
}

double norm(const CVec &v) { return std::sqrt(norm2(v)); }

CVec matvec(const CMat &m, const CVec &v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw std::invalid_argument("matvec: size mismatch");
    CVec out(m.rows, cplx{0.0, 0.0});
    for (int i = 0; i < m.rows; ++i) {
        cplx s{0.0, 0.0};
        for (int j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

CVec draw_cn_vector(int m, Rng &rng) {
    if (m < 1) throw std::invalid_argument("draw_cn_vector: m < 1");
    CVec v(m);
    for (auto &z : v) z = rng.cnormal();
    return v;
}

CMat draw_cn_matrix(int rows, int cols, Rng &rng) {
    CMat m(rows, cols);
    for (auto &z : m.data) z = rng.cnormal();
    return m;
}

cplx draw_li(double sigma_li, Rng &rng) {
    if (sigma_li < 0.0) throw std::invalid_argument("draw_li: sigma_li < 0");
    if (sigma_li == 0.0) return {0.0, 0.0};
    return std::sqrt(sigma_li) * rng.cnormal();
}

double path_loss(double dist, double epsilon, double alpha) {
    if (dist < 0.0) throw std::invalid_argument("path_loss: negative distance");
    if (epsilon == 0.0 && dist == 0.0)
        throw std::domain_error("path_loss: singular model at zero distance");
    return 1.0 / (epsilon + std::pow(dist, alpha));
}

} // namespace cranfd
