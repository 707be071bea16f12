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
// Acceptance suite: runs the full MC-vs-analytic validation matrix at its
// stated tolerances and prints one pass/fail line per criterion.

#include "cranfd/experiments.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char **argv) {
    cranfd::ExperimentSpec spec;
    spec.experiment = "validate";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0) spec.fast = true;
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            spec.seed = std::strtoull(argv[++i], nullptr, 10);
        else {
            std::cerr << "usage: acceptance_tests [--fast] [--seed N]\n";
            return 2;
        }
    }
    const cranfd::ValidationReport report = cranfd::run_validate(spec);
    std::cout << report.to_text();
    return report.all_pass() ? 0 : 1;
}
