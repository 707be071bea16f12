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

#include "cranfd/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cranfd {

namespace {
constexpr double kPi = std::numbers::pi;
}

double Point2::norm() const { return std::hypot(x, y); }

double distance(const Point2 &a, const Point2 &b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::string PointPattern::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "type,x,y\n";
    for (const auto &p : dl_points) out << "dl," << p.x << "," << p.y << "\n";
    for (const auto &p : ul_points) out << "ul," << p.x << "," << p.y << "\n";
    return out.str();
}

std::vector<Point2> sample_ppp_disc(double lambda, double radius, Rng &rng) {
    if (lambda < 0.0) throw std::invalid_argument("sample_ppp_disc: lambda < 0");
    if (!(radius > 0.0)) throw std::invalid_argument("sample_ppp_disc: radius <= 0");
    const double mean = kPi * lambda * radius * radius;
    const std::uint64_t n = rng.poisson(mean);
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double r = radius * std::sqrt(rng.uniform01());
        const double theta = 2.0 * kPi * rng.uniform01_left();
        pts.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return pts;
}

std::pair<std::vector<Point2>, std::vector<Point2>>
thin(const std::vector<Point2> &points, double p, Rng &rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("thin: p outside [0,1]");
    std::vector<Point2> kept, rest;
    for (const auto &pt : points) {
        // threshold coupling: the same uniforms give a monotone coupling in p
        if (rng.uniform01_left() < p)
            kept.push_back(pt);
        else
            rest.push_back(pt);
    }
    return {std::move(kept), std::move(rest)};
}

PointPattern sample_pattern(double lambda, double p_dl, double radius, Rng &rng) {
    PointPattern pat;
    pat.radius = radius;
    auto pts = sample_ppp_disc(lambda, radius, rng);
    auto [dl, ul] = thin(pts, p_dl, rng);
    pat.dl_points = std::move(dl);
    pat.ul_points = std::move(ul);
    return pat;
}

std::optional<NearestResult> nearest_to(const std::vector<Point2> &points,
                                        const Point2 &origin) {
    if (points.empty()) return std::nullopt;
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dx = points[i].x - origin.x;
        const double dy = points[i].y - origin.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return NearestResult{best, std::sqrt(best_d2)};
}

std::optional<NearestResult> nearest(const std::vector<Point2> &points) {
    return nearest_to(points, Point2{0.0, 0.0});
}

double nearest_distance_pdf_cond(double r, int n, double radius) {
    if (n < 1) throw std::invalid_argument("nearest_distance_pdf_cond: n < 1");
    if (!(radius > 0.0))
        throw std::invalid_argument("nearest_distance_pdf_cond: radius <= 0");
    if (r <= 0.0 || r > radius) return 0.0;
    const double t = (r / radius) * (r / radius);
    return (2.0 * n / r) * std::pow(1.0 - t, n - 1) * t;
}

double nearest_distance_cdf_cond(double r, int n, double radius) {
    if (r <= 0.0) return 0.0;
    if (r >= radius) return 1.0;
    const double t = (r / radius) * (r / radius);
    return 1.0 - std::pow(1.0 - t, n);
}

double pair_distance_pdf(double r, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("pair_distance_pdf: radius <= 0");
    if (r <= 0.0 || r >= 2.0 * radius) return 0.0;
    const double u = r / (2.0 * radius);
    return (2.0 * r / (radius * radius)) *
           ((2.0 / kPi) * std::acos(u) -
            (r / (kPi * radius)) * std::sqrt(1.0 - u * u));
}

double nearest_distance_pdf_ppp(double r, double density) {
    if (!(density > 0.0))
        throw std::invalid_argument("nearest_distance_pdf_ppp: density <= 0");
    if (r < 0.0) return 0.0;
    const double a = kPi * density;
    return 2.0 * a * r * std::exp(-a * r * r);
}

double nearest_distance_cdf_ppp(double r, double density) {
    if (r <= 0.0) return 0.0;
    return -std::expm1(-kPi * density * r * r);
}

} // namespace cranfd
