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
// Numerical Meijer G through the Mellin-Barnes contour integral. This is a
// cross-check tier: the rate engine never depends on it; it turns closed
// forms into test vectors.

#pragma once

#include <complex>
#include <vector>

namespace cranfd {

struct MeijerGSpec {
    int m = 0;
    int n = 0;
    std::vector<double> a; // size p
    std::vector<double> b; // size q

    int p() const { return static_cast<int>(a.size()); }
    int q() const { return static_cast<int>(b.size()); }
};

/// Validates orders, pole separation, and contour convergence; throws
/// std::invalid_argument / std::runtime_error on degeneracies instead of
/// silently approximating.
double meijer_g(const MeijerGSpec &spec, double x, double rel_tol = 1e-9);

/// log Gamma for complex argument (Lanczos; reflection for Re z < 0.5).
std::complex<double> log_gamma_complex(std::complex<double> z);

} // namespace cranfd
