// SPDX-License-Identifier: Apache-2.0
//
// swfde - spherical-wave antenna de-embedding from near-field surface dumps
// Copyright (C) 2026 the swfde authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace swfde::validation {

// Built-in verification suite behind `swfde validate`. Each criterion prints
// one pass/fail line with the measured numbers; thresholds are fixed here,
// not configurable.
//
// Known red: criterion 5 includes a single-degree (n_max = 1) 1 dB bound for
// a 0.3-wavelength offset source that is not physically attainable (about 41%
// of the radiated power sits in degrees >= 2); it is asserted anyway and
// reported with the measured value.
struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    std::vector<int> criteria;  // empty -> all (1..7)
    std::string cli_path;       // binary for the pipeline equivalence leg; empty skips that leg
};

std::vector<CriterionResult> run_acceptance(const Options& opt, std::ostream& out);

}  // namespace swfde::validation
