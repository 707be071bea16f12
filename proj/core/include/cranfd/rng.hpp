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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string_view>

namespace cranfd {

/// splitmix64 finalizer; used to expand seeds and derive stream ids.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Derives the state seed for one logical stream. Streams are fully
/// determined by (seed, index, purpose tag), independent of which thread
/// ends up consuming them.
constexpr std::uint64_t stream_id(std::uint64_t seed, std::uint64_t index,
                                  std::string_view purpose) noexcept {
    return splitmix64(seed ^ splitmix64(index ^ splitmix64(fnv1a64(purpose))));
}

/// Xoshiro256++ with deterministic splitmix64 seeding.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t x = seed;
        for (auto &w : state_) {
            x = splitmix64(x);
            w = x;
        }
        // splitmix64 never yields four zeros for any input, but keep the
        // generator well-defined regardless.
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on (0, 1]; never returns 0 so -log() is always finite.
    double uniform01() noexcept {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform on [0, 1).
    double uniform01_left() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double exponential() noexcept { return -std::log(uniform01()); }

    /// Sum of k unit-mean exponentials (chi-square with 2k dof, halved).
    double gamma_int(int k) noexcept {
        double s = 0.0;
        for (int i = 0; i < k; ++i) s += exponential();
        return s;
    }

    /// Standard normal via Marsaglia polar; one spare value is cached.
    double normal() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01_left() - 1.0;
            v = 2.0 * uniform01_left() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    /// Circularly-symmetric complex Gaussian, unit variance (E|z|^2 = 1).
    std::complex<double> cnormal() noexcept {
        constexpr double half = 0.70710678118654752440;
        return {half * normal(), half * normal()};
    }

    /// Poisson draw; inversion for small means and Hörmann's PTRD
    /// transformed rejection for large ones.
    std::uint64_t poisson(double mu) noexcept {
        if (mu <= 0.0) return 0;
        if (mu < 10.0) {
            const double limit = std::exp(-mu);
            std::uint64_t k = 0;
            double prod = uniform01();
            while (prod > limit) {
                prod *= uniform01();
                ++k;
            }
            return k;
        }
        return poisson_ptrd(mu);
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t poisson_ptrd(double mu) noexcept {
        const double smu = std::sqrt(mu);
        const double b = 0.931 + 2.53 * smu;
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double v_r = 0.9277 - 3.6224 / (b - 2.0);
        const double log_mu = std::log(mu);
        for (;;) {
            double u = uniform01() - 0.5;
            double v = uniform01();
            double us = 0.5 - std::abs(u);
            double kf = std::floor((2.0 * a / us + b) * u + mu + 0.43);
            if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
            double rhs = kf * log_mu - mu - std::lgamma(kf + 1.0);
            if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
        }
    }

    std::array<std::uint64_t, 4> state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace cranfd
