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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cranfd {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

/// Path-loss exponent carried as an exact rational num/den when possible;
/// exact == false records that the stored rational is a bounded-denominator
/// approximation of a floating-point input.
struct RationalAlpha {
    int num = 3;
    int den = 1;
    bool exact = true;
};

enum class AraPowerSplit { per_rrh, total };

/// Scenario constants in configuration-file units (powers in dBm, lengths
/// in meters). Single source of truth for every symbol used downstream.
struct SystemParams {
    double lambda = 1e-3;      // RRH density, points per m^2
    double p_dl = 0.5;         // downlink fraction of RRHs, in (0,1)
    double radius = 500.0;     // deployment disc radius, m
    int m_antennas = 2;        // antennas per RRH
    double alpha = 3.0;        // path-loss exponent, > 2
    RationalAlpha alpha_rational{};
    double epsilon = 1.0;      // path-loss reference offset; 0 = singular model
    double p_b_dbm = 46.0;     // per-RRH downlink transmit power
    double p_u_dbm = 23.0;     // user transmit power
    double sigma_li_dbm = -30.0; // residual loopback-interference power; -inf = off
    double noise_dbm = -50.0;  // total noise power over the system bandwidth
    double tau = 0.5;          // half-duplex downlink time fraction
    AraPowerSplit ara_power_split = AraPowerSplit::per_rrh;

    double delta() const { return 2.0 / alpha; }
    double mean_dl_count() const;
    double mean_ul_count() const;
};

/// Powers re-expressed relative to unit noise so every downstream formula
/// sees unit-variance noise. Geometry fields carried through unchanged.
struct NormalizedParams {
    double p_b = 0.0;
    double p_u = 0.0;
    double sigma_li = 0.0;

    double lambda = 1e-3;
    double p_dl = 0.5;
    double radius = 500.0;
    int m_antennas = 2;
    double alpha = 3.0;
    RationalAlpha alpha_rational{};
    double epsilon = 1.0;
    double tau = 0.5;
    AraPowerSplit ara_power_split = AraPowerSplit::per_rrh;

    double delta() const { return 2.0 / alpha; }
    double mean_dl_count() const;
    double mean_ul_count() const;
    double dl_density() const { return p_dl * lambda; }
    double ul_density() const { return (1.0 - p_dl) * lambda; }
};

/// dBm -> linear milliwatts.
inline double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }

/// Validates every invariant; throws ConfigError naming the offending key.
void validate(const SystemParams &p);

/// Parses a `key = value` config file. Missing optional keys take their
/// defaults; p_b_dbm and p_u_dbm are required.
SystemParams load_params(const std::string &path);

/// Parses config text (same schema as load_params).
SystemParams parse_params(const std::string &text);

/// Applies one `key=value` override to already-loaded params.
void apply_override(SystemParams &p, const std::string &key,
                    const std::string &value);

/// Emits the full key set in config-file syntax.
std::string serialize(const SystemParams &p);

NormalizedParams normalize(const SystemParams &p);

/// Normalization is idempotent: re-normalizing is the identity.
inline NormalizedParams normalize(const NormalizedParams &p) { return p; }

/// Best rational approximation with denominator <= max_den.
RationalAlpha approximate_alpha(double alpha, int max_den = 16);

} // namespace cranfd
