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

#include "cranfd/params.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cranfd;

TEST_CASE("parse_params reads the documented keys and defaults") {
    const SystemParams p = parse_params("p_b_dbm = 46\np_u_dbm = 23\n");
    CHECK(p.p_b_dbm == 46.0);
    CHECK(p.p_u_dbm == 23.0);
    CHECK(p.lambda == 1e-3);
    CHECK(p.radius == 500.0);
    CHECK(p.epsilon == 1.0);
    CHECK(p.tau == 0.5);
}

TEST_CASE("alpha constraint is reported by key") {
    CHECK_THROWS_WITH_AS(
        parse_params("p_b_dbm = 46\np_u_dbm = 23\nalpha = 2\n"),
        "alpha must exceed 2", ConfigError);
}

TEST_CASE("empty file lists required keys") {
    try {
        parse_params("");
        FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
        const std::string what = e.what();
        CHECK(what.find("p_b_dbm") != std::string::npos);
        CHECK(what.find("required") != std::string::npos);
    }
}

TEST_CASE("unknown keys and malformed lines are rejected") {
    CHECK_THROWS_AS(parse_params("p_b_dbm = 46\np_u_dbm = 23\nbogus = 1\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse_params("p_b_dbm 46\n"), ConfigError);
    CHECK_THROWS_AS(parse_params("p_b_dbm = 46\np_b_dbm = 40\np_u_dbm = 23\n"),
                    ConfigError);
}

TEST_CASE("normalize re-expresses powers against unit noise") {
    SystemParams p;
    p.p_b_dbm = 46.0;
    p.p_u_dbm = 23.0;
    p.noise_dbm = -50.0;
    const NormalizedParams n = normalize(p);
    CHECK(n.p_b == doctest::Approx(std::pow(10.0, 9.6)).epsilon(1e-12));
    CHECK(n.p_b == doctest::Approx(3.981e9).epsilon(1e-3));
    // Equal powers normalize to unity.
    SystemParams q = p;
    q.p_u_dbm = q.noise_dbm;
    CHECK(normalize(q).p_u == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sigma_li 'off' encodes perfect cancellation") {
    const SystemParams p =
        parse_params("p_b_dbm = 46\np_u_dbm = 23\nsigma_li_dbm = off\n");
    CHECK(normalize(p).sigma_li == 0.0);
}

TEST_CASE("Poisson means partition the total") {
    SystemParams p;
    for (double pd : {0.1, 0.5, 0.9}) {
        p.p_dl = pd;
        const double total = std::numbers::pi * p.lambda * p.radius * p.radius;
        CHECK(p.mean_dl_count() + p.mean_ul_count() ==
              doctest::Approx(total).epsilon(1e-12));
    }
}

TEST_CASE("serialize/parse round trip reproduces all keys") {
    SystemParams p;
    p.p_b_dbm = 40.0;
    p.p_u_dbm = 17.0;
    p.lambda = 2.5e-4;
    p.alpha = 3.5;
    p.alpha_rational = approximate_alpha(3.5);
    p.ara_power_split = AraPowerSplit::total;
    const SystemParams q = parse_params(serialize(p));
    CHECK(serialize(q) == serialize(p));
    // Normalization is stable across the round trip.
    const NormalizedParams n1 = normalize(p);
    const NormalizedParams n2 = normalize(q);
    CHECK(n1.p_b == n2.p_b);
    CHECK(n1.sigma_li == n2.sigma_li);
}

TEST_CASE("normalized params re-normalize to themselves") {
    SystemParams p;
    const NormalizedParams n = normalize(p);
    const NormalizedParams n2 = normalize(n);
    CHECK(n2.p_b == n.p_b);
    CHECK(n2.p_u == n.p_u);
    CHECK(n2.sigma_li == n.sigma_li);
}

TEST_CASE("rational alpha: exact fractions and bounded approximations") {
    const SystemParams p =
        parse_params("p_b_dbm = 46\np_u_dbm = 23\nalpha = 7/2\n");
    CHECK(p.alpha == doctest::Approx(3.5));
    CHECK(p.alpha_rational.num == 7);
    CHECK(p.alpha_rational.den == 2);
    CHECK(p.alpha_rational.exact);

    const RationalAlpha approx = approximate_alpha(std::numbers::pi);
    CHECK(approx.den <= 16);
    CHECK_FALSE(approx.exact);
    CHECK(std::abs(static_cast<double>(approx.num) / approx.den -
                   std::numbers::pi) < 0.01);
}
