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
// Experiment driver: reproduces the figure-style sweeps as CSV, runs the
// cross-validation suite, and answers single-point queries.

#pragma once

#include "cranfd/montecarlo.hpp"
#include "cranfd/params.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cranfd {

inline constexpr const char *kVersion = "0.1.0";

struct ExperimentSpec {
    std::string experiment;   // fig1 | fig2 | fig3 | validate | point
    std::string config_path;  // empty: documented defaults
    std::string out_path;     // empty: caller handles output
    std::vector<std::pair<std::string, std::string>> overrides;
    std::string scheme_name = "SRA-ZF-FD"; // point queries
    std::uint64_t seed = 20260808;
    std::size_t n_spatial = 0; // 0: per-experiment default
    std::size_t n_fading = 0;
    bool fast = false;         // 10x smaller MC budgets
    int threads = 0;           // 0: auto (capped by CRAN_DUPLEX_THREADS)
    // Multiplier on every validation tolerance; 0 cripples them all, which
    // exercises the failure path end to end.
    double tolerance_scale = 1.0;
};

/// Loads config (or defaults), applies --set overrides, validates.
SystemParams experiment_params(const ExperimentSpec &spec);

Scheme parse_scheme(const std::string &name);

/// Deterministic CSV assembly: '#'-prefixed metadata lines, then a header
/// row and data rows. The body (header + rows) is the determinism surface.
class CsvWriter {
  public:
    void meta(const std::string &key, const std::string &value);
    void meta(const std::string &key, double value);
    void header(const std::vector<std::string> &columns);
    void row(const std::vector<std::string> &cells);
    std::string str() const;  // metadata + body
    std::string body() const; // header + rows only
  private:
    std::string meta_;
    std::string body_;
    std::size_t n_columns_ = 0;
};

std::string format_double(double v);

/// Average DL rate versus residual loopback power, both association
/// schemes, both user power levels, MC/analytic/upper-bound methods.
std::string run_fig1(const ExperimentSpec &spec);

/// Average UL rate versus user power for MRC/MRT and ZF/MRT at two
/// interferer power levels and two path-loss exponents.
std::string run_fig2(const ExperimentSpec &spec);

/// UL/DL rate region traced by the DL fraction, full- and half-duplex,
/// including the total-power-split ARA variant.
std::string run_fig3(const ExperimentSpec &spec);

/// Single-point query: MC estimate plus analytic values where defined.
std::string run_point(const ExperimentSpec &spec);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double elapsed_s = 0.0;
    std::string details;
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;
    std::uint64_t seed = 0;
    double budget_scale = 1.0;

    bool all_pass() const;
    std::string to_text() const; // one pass/fail line per criterion
    std::string to_json() const; // machine-readable report
};

/// Runs the full acceptance matrix at the stated tolerances.
ValidationReport run_validate(const ExperimentSpec &spec);

} // namespace cranfd
