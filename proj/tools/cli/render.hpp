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

#include <string>
#include <vector>

#include "cli/structured.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/separability.hpp"

namespace qentropy::cli {

/// "1.000000 b"
std::string bits(double value);

std::string render_bipartite(const BipartiteDiagram &d, const std::string &a, const std::string &b);
std::string render_ternary(const TernaryDiagram &d, const std::string &a, const std::string &b,
                           const std::string &c);

Json to_json(const BipartiteDiagram &d);
Json to_json(const TernaryDiagram &d);
Json to_json(const SeparabilityReport &r);
Json to_json(const std::vector<double> &values);

std::string part_name(const LabelSet &part);

}  // namespace qentropy::cli
