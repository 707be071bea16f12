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

#include "cranfd/channel.hpp"
#include "cranfd/geometry.hpp"
#include "cranfd/params.hpp"

#include <optional>

namespace cranfd {

/// One joint (pattern, fading) realization under fixed parameters.
/// Pure-evaluation view; owns nothing.
struct LinkRealization {
    const PointPattern &pattern;
    const FadingDraw &fading;
    const NormalizedParams &params;
};

enum class UlCombiner { mrc, zf };
enum class Direction { dl, ul };

/// Which cross matrices a fading draw materializes: the nearest (UL, DL)
/// pair only, or every pair (needed by the all-RRH association).
enum class FadingScope { nearest_pair, all_pairs };

/// Draws per-RRH channel vectors, the cross matrices in scope, and the
/// loopback coefficient, in a fixed consumption order.
FadingDraw draw_fading(const PointPattern &pattern, int m, double sigma_li,
                       FadingScope scope, Rng &rng);

/// Matched-filter transmit vector h / ||h||.
CVec mrt(const CVec &h);

/// Receive vector of unit norm maximizing |w^dag g| subject to
/// w^dag h_cross = 0 (projection of g away from h_cross). Requires the
/// vector dimension > 1 and a non-degenerate projection.
CVec zf_receive(const CVec &g, const CVec &h_cross);

/// Downlink SINR, all-RRH association with MRT. Empty DL set gives 0.
/// Honors the ara_power_split flag.
double sinr_dl_ara(const LinkRealization &rz);

/// Downlink SINR, nearest-RRH association with MRT. Empty DL set gives 0.
double sinr_dl_sra(const LinkRealization &rz);

/// Uplink SINR, nearest-RRH association. nullopt when no UL RRH exists.
/// MRC keeps full diversity and sees the DL-RRH interference term;
/// ZF nulls it at the cost of one degree of freedom (requires M >= 2).
/// With no DL RRH present the interference term is zero and ZF falls back
/// to full MRC combining.
std::optional<double> sinr_ul_sra(const LinkRealization &rz, UlCombiner comb);

/// Uplink SINR, all-RRH association. ZF means ZF-nearest: each UL RRH
/// cancels only its nearest DL interferer.
std::optional<double> sinr_ul_ara(const LinkRealization &rz, UlCombiner comb);

/// Half-duplex SNR (no loopback, no UL-DL interference), all-RRH sums.
double snr_hd(const LinkRealization &rz, Direction dir);

/// Half-duplex SNR restricted to the nearest RRH (SRA variant).
double snr_hd_sra(const LinkRealization &rz, Direction dir);

} // namespace cranfd
