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

#include "cranfd/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

// Exit codes: 0 success, 1 validation failure, 2 configuration error.
constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitConfigError = 2;

void write_output(const cranfd::ExperimentSpec &spec, const std::string &text) {
    if (spec.out_path.empty() || spec.out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(spec.out_path, std::ios::binary);
    if (!out) throw cranfd::ConfigError("cannot open output file '" +
                                        spec.out_path + "'");
    out << text;
}

void add_common(CLI::App *cmd, cranfd::ExperimentSpec &spec,
                std::vector<std::string> &sets, std::string &budget) {
    cmd->add_option("--config", spec.config_path,
                    "Config file (key = value lines); defaults apply otherwise");
    cmd->add_option("--out", spec.out_path, "Output path ('-' = stdout)");
    cmd->add_option("--seed", spec.seed, "Master RNG seed");
    cmd->add_option("--budget", budget,
                    "MC budget as N_SPATIAL[xN_FADING], e.g. 2000x100");
    cmd->add_flag("--fast", spec.fast,
                  "Shrink MC budgets 10x for smoke-test runs");
    cmd->add_option("--set", sets, "Config override key=value (repeatable)");
    cmd->add_option("--threads", spec.threads,
                    "Worker threads (0 = auto; CRAN_DUPLEX_THREADS caps)");
    cmd->add_option("--tolerance-scale", spec.tolerance_scale,
                    "Multiplier on validation tolerances (0 forces failure)");
}

void apply_budget(cranfd::ExperimentSpec &spec, const std::string &budget) {
    if (budget.empty()) return;
    const auto x = budget.find('x');
    try {
        if (x == std::string::npos) {
            spec.n_spatial = std::stoul(budget);
        } else {
            spec.n_spatial = std::stoul(budget.substr(0, x));
            spec.n_fading = std::stoul(budget.substr(x + 1));
        }
    } catch (const std::exception &) {
        throw cranfd::ConfigError("cannot parse --budget '" + budget +
                                  "' (want N or NxM)");
    }
}

void apply_sets(cranfd::ExperimentSpec &spec,
                const std::vector<std::string> &sets) {
    for (const auto &kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw cranfd::ConfigError("--set expects key=value, got '" + kv + "'");
        spec.overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"cranfd: full-duplex C-RAN average-rate experiments"};
    app.require_subcommand(1);

    struct SubState {
        cranfd::ExperimentSpec spec;
        std::vector<std::string> sets;
        std::string budget;
    };
    std::map<std::string, SubState> states;

    for (const char *name : {"fig1", "fig2", "fig3", "validate", "point"}) {
        auto &st = states[name];
        st.spec.experiment = name;
        CLI::App *cmd = app.add_subcommand(
            name,
            std::string(name) == "validate"
                ? "Run the MC-vs-analytic validation matrix"
                : (std::string(name) == "point"
                       ? "Single-point MC + analytic query"
                       : "Emit the corresponding experiment sweep as CSV"));
        add_common(cmd, st.spec, st.sets, st.budget);
        if (std::string(name) == "point")
            cmd->add_option("--scheme", st.spec.scheme_name,
                            "Scheme name, e.g. SRA-ZF-FD, ARA-MRC-HD");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfigError;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        SubState &st = states[name];
        apply_budget(st.spec, st.budget);
        apply_sets(st.spec, st.sets);

        if (name == "validate") {
            const cranfd::ValidationReport report = cranfd::run_validate(st.spec);
            std::cout << report.to_text();
            if (!st.spec.out_path.empty())
                write_output(st.spec, report.to_json() + "\n");
            return report.all_pass() ? kExitOk : kExitValidationFailed;
        }
        std::string csv;
        if (name == "fig1") csv = cranfd::run_fig1(st.spec);
        else if (name == "fig2") csv = cranfd::run_fig2(st.spec);
        else if (name == "fig3") csv = cranfd::run_fig3(st.spec);
        else csv = cranfd::run_point(st.spec);
        write_output(st.spec, csv);
        return kExitOk;
    } catch (const cranfd::ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationFailed;
    }
}
