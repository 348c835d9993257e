// Copyright 2026 The qentropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include "cli/structured.hpp"
#include "qentropy/tolerances.hpp"

namespace qentropy::cli {

struct Options {
    std::string state;
    std::string split;
    std::string trace_out;
    double epsilon = tol::kDefaultEpsilon;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::string dims = "2x2";
    std::string axes = "z,z";
    std::string obs;
    std::string ensemble;
    bool sweep = false;
    double sweep_step = 1.0;
    std::size_t ancillae = 2;
};

/// Each command throws UsageError for bad input and qentropy::Error when the
/// numerics fail; property verdicts are data and set exit_code 1.
RunResult cmd_diagram(const Options &opt);
RunResult cmd_separability(const Options &opt);
RunResult cmd_measure(const std::string &scenario, const Options &opt);
RunResult cmd_kholevo(const Options &opt);
RunResult cmd_verify(const std::string &suite, const Options &opt);

}  // namespace qentropy::cli
