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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cranfd {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    double norm() const;
};

double distance(const Point2 &a, const Point2 &b);

/// One spatial realization: downlink and uplink RRH coordinates inside the
/// disc of the given radius, user at the origin.
struct PointPattern {
    std::vector<Point2> dl_points;
    std::vector<Point2> ul_points;
    double radius = 0.0;

    std::size_t n_dl() const { return dl_points.size(); }
    std::size_t n_ul() const { return ul_points.size(); }

    /// CSV rows (type in {dl,ul}, x, y) for debugging/replay.
    std::string to_csv() const;
};

/// Homogeneous PPP in the disc b(o, radius): Poisson count, uniform points.
std::vector<Point2> sample_ppp_disc(double lambda, double radius, Rng &rng);

/// Independent Bernoulli thinning; first list gets each point with
/// probability p. The union preserves the input multiset.
std::pair<std::vector<Point2>, std::vector<Point2>>
thin(const std::vector<Point2> &points, double p, Rng &rng);

/// Convenience: sample + thin into a PointPattern.
PointPattern sample_pattern(double lambda, double p_dl, double radius, Rng &rng);

struct NearestResult {
    std::size_t index;
    double dist;
};

/// Nearest point to the origin; ties broken by lowest index.
/// nullopt on an empty list ("no RRH of this type").
std::optional<NearestResult> nearest(const std::vector<Point2> &points);
std::optional<NearestResult> nearest_to(const std::vector<Point2> &points,
                                        const Point2 &origin);

/// pdf of the nearest of n uniform points in the disc of given radius:
/// f(r) = (2 n / r) (1 - (r/R)^2)^(n-1) (r/R)^2 on [0, R].
double nearest_distance_pdf_cond(double r, int n, double radius);

/// cdf companion of the above.
double nearest_distance_cdf_cond(double r, int n, double radius);

/// pdf of the distance between two independent uniform points in the disc,
/// support (0, 2R).
double pair_distance_pdf(double r, double radius);

/// Infinite-plane PPP nearest-neighbor law f(r) = 2 pi lam r exp(-pi lam r^2).
double nearest_distance_pdf_ppp(double r, double density);
double nearest_distance_cdf_ppp(double r, double density);

} // namespace cranfd
