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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace cranfd {

namespace {

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string &key, const std::string &value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size())
            throw ConfigError("trailing characters in value for key '" + key + "'");
        return v;
    } catch (const ConfigError &) {
        throw;
    } catch (const std::exception &) {
        throw ConfigError("cannot parse numeric value '" + value + "' for key '" +
                          key + "'");
    }
}

} // namespace

double SystemParams::mean_dl_count() const {
    return std::numbers::pi * p_dl * lambda * radius * radius;
}
double SystemParams::mean_ul_count() const {
    return std::numbers::pi * (1.0 - p_dl) * lambda * radius * radius;
}
double NormalizedParams::mean_dl_count() const {
    return std::numbers::pi * p_dl * lambda * radius * radius;
}
double NormalizedParams::mean_ul_count() const {
    return std::numbers::pi * (1.0 - p_dl) * lambda * radius * radius;
}

RationalAlpha approximate_alpha(double alpha, int max_den) {
    // Exact small rationals first (covers the common 3, 3.5, 4, ...).
    for (int den = 1; den <= max_den; ++den) {
        double num = alpha * den;
        if (std::abs(num - std::round(num)) < 1e-12 * den) {
            int n = static_cast<int>(std::round(num));
            int g = std::gcd(n, den);
            return RationalAlpha{n / g, den / g, true};
        }
    }
    // Continued-fraction convergents with bounded denominator.
    int best_num = static_cast<int>(std::round(alpha)), best_den = 1;
    double x = alpha;
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int it = 0; it < 32; ++it) {
        long long a = static_cast<long long>(std::floor(x));
        long long h2 = a * h1 + h0;
        long long k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        best_num = static_cast<int>(h1);
        best_den = static_cast<int>(k1);
        double frac = x - static_cast<double>(a);
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    return RationalAlpha{best_num, best_den, false};
}

void validate(const SystemParams &p) {
    if (!(p.lambda >= 0.0)) throw ConfigError("lambda must be >= 0");
    if (!(p.p_dl > 0.0 && p.p_dl < 1.0))
        throw ConfigError("p_dl must lie strictly between 0 and 1");
    if (!(p.radius > 0.0)) throw ConfigError("radius must be positive");
    if (p.m_antennas < 1) throw ConfigError("m_antennas must be >= 1");
    if (!(p.alpha > 2.0)) throw ConfigError("alpha must exceed 2");
    if (!(p.epsilon >= 0.0)) throw ConfigError("epsilon must be >= 0");
    if (!(p.tau >= 0.0 && p.tau <= 1.0)) throw ConfigError("tau must lie in [0,1]");
    if (!std::isfinite(p.p_b_dbm)) throw ConfigError("p_b_dbm must be finite");
    if (!std::isfinite(p.p_u_dbm)) throw ConfigError("p_u_dbm must be finite");
    if (!std::isfinite(p.noise_dbm)) throw ConfigError("noise_dbm must be finite");
    // sigma_li_dbm == -inf encodes "off" (perfect cancellation).
    if (std::isnan(p.sigma_li_dbm)) throw ConfigError("sigma_li_dbm must not be NaN");
    const double delta = p.delta();
    if (!(delta > 0.0 && delta < 1.0))
        throw ConfigError("alpha must give 0 < 2/alpha < 1");
}

void apply_override(SystemParams &p, const std::string &key,
                    const std::string &value) {
    if (key == "lambda") p.lambda = parse_double(key, value);
    else if (key == "p_dl") p.p_dl = parse_double(key, value);
    else if (key == "radius") p.radius = parse_double(key, value);
    else if (key == "m_antennas") {
        double v = parse_double(key, value);
        if (v != std::floor(v)) throw ConfigError("m_antennas must be an integer");
        p.m_antennas = static_cast<int>(v);
    } else if (key == "alpha") {
        auto slash = value.find('/');
        if (slash != std::string::npos) {
            int num = static_cast<int>(parse_double(key, trim(value.substr(0, slash))));
            int den = static_cast<int>(parse_double(key, trim(value.substr(slash + 1))));
            if (den <= 0 || num <= 0) throw ConfigError("alpha rational must be positive");
            int g = std::gcd(num, den);
            p.alpha_rational = RationalAlpha{num / g, den / g, true};
            p.alpha = static_cast<double>(num) / den;
        } else {
            p.alpha = parse_double(key, value);
            p.alpha_rational = approximate_alpha(p.alpha);
        }
    } else if (key == "epsilon") p.epsilon = parse_double(key, value);
    else if (key == "p_b_dbm") p.p_b_dbm = parse_double(key, value);
    else if (key == "p_u_dbm") p.p_u_dbm = parse_double(key, value);
    else if (key == "sigma_li_dbm") {
        if (value == "off")
            p.sigma_li_dbm = -std::numeric_limits<double>::infinity();
        else
            p.sigma_li_dbm = parse_double(key, value);
    } else if (key == "noise_dbm") p.noise_dbm = parse_double(key, value);
    else if (key == "tau") p.tau = parse_double(key, value);
    else if (key == "ara_power_split") {
        if (value == "per_rrh") p.ara_power_split = AraPowerSplit::per_rrh;
        else if (value == "total") p.ara_power_split = AraPowerSplit::total;
        else throw ConfigError("ara_power_split must be 'per_rrh' or 'total'");
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

SystemParams parse_params(const std::string &text) {
    SystemParams p;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) +
                              ": empty key or value");
        if (!seen.insert(key).second)
            throw ConfigError("duplicate key '" + key + "'");
        apply_override(p, key, value);
    }
    for (const char *required : {"p_b_dbm", "p_u_dbm"}) {
        if (!seen.count(required))
            throw ConfigError(std::string("missing required key '") + required +
                              "' (required keys: p_b_dbm, p_u_dbm)");
    }
    if (!seen.count("alpha")) p.alpha_rational = approximate_alpha(p.alpha);
    validate(p);
    return p;
}

SystemParams load_params(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_params(buf.str());
}

std::string serialize(const SystemParams &p) {
    std::ostringstream out;
    out.precision(17);
    out << "lambda = " << p.lambda << "\n";
    out << "p_dl = " << p.p_dl << "\n";
    out << "radius = " << p.radius << "\n";
    out << "m_antennas = " << p.m_antennas << "\n";
    if (p.alpha_rational.exact)
        out << "alpha = " << p.alpha_rational.num << "/" << p.alpha_rational.den
            << "\n";
    else
        out << "alpha = " << p.alpha << "\n";
    out << "epsilon = " << p.epsilon << "\n";
    out << "p_b_dbm = " << p.p_b_dbm << "\n";
    out << "p_u_dbm = " << p.p_u_dbm << "\n";
    if (std::isinf(p.sigma_li_dbm) && p.sigma_li_dbm < 0)
        out << "sigma_li_dbm = off\n";
    else
        out << "sigma_li_dbm = " << p.sigma_li_dbm << "\n";
    out << "noise_dbm = " << p.noise_dbm << "\n";
    out << "tau = " << p.tau << "\n";
    out << "ara_power_split = "
        << (p.ara_power_split == AraPowerSplit::per_rrh ? "per_rrh" : "total")
        << "\n";
    return out.str();
}

NormalizedParams normalize(const SystemParams &p) {
    validate(p);
    NormalizedParams n;
    const double noise = dbm_to_linear(p.noise_dbm);
    n.p_b = dbm_to_linear(p.p_b_dbm) / noise;
    n.p_u = dbm_to_linear(p.p_u_dbm) / noise;
    // sigma_li_dbm is the total residual loopback power at the receive
    // antenna. The stored value is the mean residual channel gain, so the
    // product p_u * sigma_li reproduces that power against unit noise and
    // sigma_li_dbm == p_u_dbm corresponds to a unit-gain (uncancelled)
    // loopback channel.
    n.sigma_li = std::isinf(p.sigma_li_dbm) && p.sigma_li_dbm < 0
                     ? 0.0
                     : dbm_to_linear(p.sigma_li_dbm) / noise / n.p_u;
    n.lambda = p.lambda;
    n.p_dl = p.p_dl;
    n.radius = p.radius;
    n.m_antennas = p.m_antennas;
    n.alpha = p.alpha;
    n.alpha_rational = p.alpha_rational;
    n.epsilon = p.epsilon;
    n.tau = p.tau;
    n.ara_power_split = p.ara_power_split;
    return n;
}

} // namespace cranfd
