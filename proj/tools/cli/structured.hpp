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

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace qentropy::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFailure = 1,
    kExitUsage = 2,
    kExitNumeric = 3,
};

/// Bad command line, unparsable state or ensemble description (exit 2).
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Outcome of one command: structured sections plus the text rendering.
struct RunResult {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    Json verdicts = Json::object();
    std::string text;
    int exit_code = kExitOk;
    double wall_time_s = 0.0;
};

/// {meta, inputs, results, verdicts}. Wall time is only included on request
/// so that repeated runs give identical documents.
Json to_document(const RunResult &result, bool include_timing = false);

/// JSON text with every floating-point number at 17 significant digits.
std::string dump_structured(const Json &doc);
Json parse_structured(const std::string &text);

/// 64-bit FNV-1a of the structured dump, as 16 hex digits.
std::string input_digest(const Json &inputs);

/// Fixed six-decimal rendering used by every text view, "-0" folded to "0".
std::string fixed6(double value);

}  // namespace qentropy::cli
