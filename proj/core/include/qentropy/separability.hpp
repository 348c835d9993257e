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
#include <optional>
#include <span>
#include <vector>

#include "qentropy/hermitian.hpp"
#include "qentropy/tolerances.hpp"

namespace qentropy {

/// Necessary-condition diagnostics for separability of a bipartite state.
struct SeparabilityReport {
    double max_conditional_eigenvalue_ab = 0;  // spectrum of rho_{A|B}
    double max_conditional_eigenvalue_ba = 0;  // spectrum of rho_{B|A}
    double s_a_given_b = 0;
    double s_b_given_a = 0;
    double ppt_min_eigenvalue = 0;  // partial transpose on B
    /// Largest eigenvalue drift between the two regularizations.
    double spectrum_disagreement = 0;

    bool classicality_passes = true;           // every conditional eigenvalue <= 1 + 1e-9
    bool conditional_entropy_nonnegative = true;
    bool ppt_passes = true;                    // min PT eigenvalue >= -1e-9
    bool spectrum_stable = true;
};

/// Evaluates both conditioning orientations plus the partial transpose.
/// `a` and `b` must partition the layout.
SeparabilityReport conditional_spectrum_test(const DensityOperator &rho, const LabelSet &a, const LabelSet &b,
                                             double epsilon = tol::kDefaultEpsilon);

struct PptResult {
    double min_eigenvalue = 0;
    bool entangled = false;
};

PptResult ppt_test(const DensityOperator &rho, const LabelSet &part);

struct WernerRow {
    double x = 0;
    double max_conditional_eigenvalue = 0;
    double s_a_given_b = 0;
    double ppt_min_eigenvalue = 0;
};

/// Throws RangeError for grid values outside [0, 1].
std::vector<WernerRow> werner_scan(std::span<const double> x_grid, double epsilon = tol::kDefaultEpsilon);

struct WernerThresholds {
    double classicality = 0;  // max conditional eigenvalue crosses 1
    double ppt = 0;           // min partial-transpose eigenvalue crosses 0
};

/// Coarse scan over `x_grid` followed by bisection on each crossing.
/// Throws RangeError if either quantity does not cross within the grid.
WernerThresholds locate_werner_thresholds(std::span<const double> x_grid, double tolerance = 1e-6,
                                          double epsilon = tol::kDefaultEpsilon);

struct SurveyReport {
    std::size_t trials = 0;
    std::size_t dim_a = 0, dim_b = 0;
    std::uint64_t seed = 0;
    std::size_t classicality_violations = 0;
    std::size_t negative_conditional_entropies = 0;
    std::size_t ppt_violations = 0;
    double max_eigenvalue_observed = 0;
    double min_conditional_entropy = 0;
    std::optional<std::size_t> first_violation_trial;
};

/// Random separable mixtures on dim_a x dim_b; trial t uses seed + t, with
/// between 1 and 2 dim_a dim_b product terms.
SurveyReport random_separable_survey(std::size_t n_trials, std::size_t dim_a, std::size_t dim_b,
                                     std::uint64_t seed);

}  // namespace qentropy
