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
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qentropy/hermitian.hpp"
#include "qentropy/layout.hpp"
#include "qentropy/measurement.hpp"

namespace qentropy::cli {

struct StateSpec;

/// bell:phi+, ghz:3, werner:0.25, maxmixed:2x2, classical:3, zero, plus, ...
struct NamedSpec {
    std::string name;
    std::vector<std::string> params;
};

struct ExplicitSpec {
    SubsystemLayout layout;
    Matrix entries;
};

struct PureSpec {
    SubsystemLayout layout;
    Vector amplitudes;
};

struct SeparableStateSpec {
    std::vector<double> weights;
    std::vector<StateSpec> factors_a;
    std::vector<StateSpec> factors_b;
};

struct RandomSpec {
    std::vector<std::size_t> dims;
    std::size_t rank = 0;  // 0 means full rank
    std::uint64_t seed = 0;
};

struct StateSpec {
    std::variant<NamedSpec, ExplicitSpec, PureSpec, SeparableStateSpec, RandomSpec> value;
    std::string source;  // the text or file the spec came from
};

/// Inline grammar first; anything else is treated as a path to a JSON state
/// file. Errors throw UsageError with the offending position.
StateSpec parse_state_spec(const std::string &text);
StateSpec parse_state_json(const nlohmann::json &doc, const std::string &where);

/// Raises UsageError when the description does not give a valid density operator.
DensityOperator build_state(const StateSpec &spec);

/// "A/B", "AB/C", "Q1,A1/Q2,A2". Bare multi-letter parts are split into
/// single-character labels when every character is a layout label.
std::vector<LabelSet> parse_split(const std::string &text, const SubsystemLayout &layout);
LabelSet parse_label_list(const std::string &text, const SubsystemLayout &layout);

/// Multiplicity-aware dims "2x3x2".
std::vector<std::size_t> parse_dims(const std::string &text);

/// z | x | y | computational | angle:DEG (x-z plane) | axis:THETA,PHI (degrees).
Observable parse_observable(const std::string &text, std::size_t dim = 2);
std::vector<std::string> split_list(const std::string &text, char sep);

/// Help text for the state grammar.
std::string state_grammar_help();

}  // namespace qentropy::cli
