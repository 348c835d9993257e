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

#include "qentropy/kholevo.hpp"

namespace qentropy::cli {

struct EnsembleFile {
    std::size_t dim = 0;
    std::vector<double> priors;
    std::vector<std::string> descriptions;  // one per signal, as written
    std::vector<DensityOperator> signals;

    PreparationEnsemble ensemble() const;
};

/// Line-based format: see docs/ensemble_format.md. Errors carry "name:line:column".
EnsembleFile parse_ensemble(const std::string &text, const std::string &name = "<ensemble>");
EnsembleFile read_ensemble_file(const std::string &path);

}  // namespace qentropy::cli
