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

#include "qentropy/separability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qentropy/entropy.hpp"
#include "qentropy/error.hpp"
#include "qentropy/states.hpp"

namespace qentropy {

SeparabilityReport conditional_spectrum_test(const DensityOperator &rho, const LabelSet &a, const LabelSet &b,
                                             double epsilon) {
    validate_parts(rho.layout(), {a, b}, true);
    SeparabilityReport r;
    const auto ab = conditional_spectrum(rho, b, epsilon);
    const auto ba = conditional_spectrum(rho, a, epsilon);
    r.max_conditional_eigenvalue_ab = ab.eigenvalues.front();
    r.max_conditional_eigenvalue_ba = ba.eigenvalues.front();
    r.spectrum_disagreement = std::max(ab.disagreement, ba.disagreement);
    r.spectrum_stable = ab.stable && ba.stable;
    r.s_a_given_b = conditional_entropy(rho, b);
    r.s_b_given_a = conditional_entropy(rho, a);
    r.ppt_min_eigenvalue = ppt_test(rho, b).min_eigenvalue;

    r.classicality_passes = r.max_conditional_eigenvalue_ab <= tol::kClassicalityThreshold &&
                            r.max_conditional_eigenvalue_ba <= tol::kClassicalityThreshold;
    r.conditional_entropy_nonnegative = r.s_a_given_b >= -tol::kPpt && r.s_b_given_a >= -tol::kPpt;
    r.ppt_passes = r.ppt_min_eigenvalue >= -tol::kPpt;
    return r;
}

PptResult ppt_test(const DensityOperator &rho, const LabelSet &part) {
    validate_parts(rho.layout(), {part}, false);
    const auto pt = partial_transpose(rho.op(), part);
    PptResult r;
    r.min_eigenvalue = spectral_decompose(pt).min();
    r.entangled = r.min_eigenvalue < -tol::kPpt;
    return r;
}

namespace {

void check_grid(std::span<const double> grid) {
    for (double x : grid) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw Error(ErrorCode::RangeError, "Werner grid values must lie in [0, 1]");
        }
    }
}

WernerRow werner_row(double x, double epsilon) {
    const auto rho = werner_state(x);
    WernerRow row;
    row.x = x;
    row.max_conditional_eigenvalue = spectral_decompose(conditional_amplitude_operator(rho, {"B"}, epsilon)).max();
    row.s_a_given_b = conditional_entropy(rho, {"B"});
    row.ppt_min_eigenvalue = ppt_test(rho, {"B"}).min_eigenvalue;
    return row;
}

// Root of an increasing-sign predicate `above` between lo (false) and hi (true).
double bisect(double lo, double hi, double tolerance, const std::function<bool(double)> &above) {
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        (above(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<WernerRow> werner_scan(std::span<const double> x_grid, double epsilon) {
    check_grid(x_grid);
    std::vector<WernerRow> rows;
    rows.reserve(x_grid.size());
    for (double x : x_grid) {
        rows.push_back(werner_row(x, epsilon));
    }
    return rows;
}

WernerThresholds locate_werner_thresholds(std::span<const double> x_grid, double tolerance, double epsilon) {
    std::vector<double> grid(x_grid.begin(), x_grid.end());
    std::sort(grid.begin(), grid.end());
    const auto rows = werner_scan(grid, epsilon);

    const auto classical_above = [&](double x) { return werner_row(x, epsilon).max_conditional_eigenvalue > 1.0; };
    const auto ppt_above = [&](double x) { return werner_row(x, epsilon).ppt_min_eigenvalue < 0.0; };

    std::optional<double> classicality, ppt;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        if (!classicality && rows[k - 1].max_conditional_eigenvalue <= 1.0 && rows[k].max_conditional_eigenvalue > 1.0) {
            classicality = bisect(rows[k - 1].x, rows[k].x, tolerance, classical_above);
        }
        if (!ppt && rows[k - 1].ppt_min_eigenvalue >= 0.0 && rows[k].ppt_min_eigenvalue < 0.0) {
            ppt = bisect(rows[k - 1].x, rows[k].x, tolerance, ppt_above);
        }
    }
    if (!classicality || !ppt) {
        throw Error(ErrorCode::RangeError, "Werner thresholds do not fall inside the grid");
    }
    return {*classicality, *ppt};
}

SurveyReport random_separable_survey(std::size_t n_trials, std::size_t dim_a, std::size_t dim_b,
                                     std::uint64_t seed) {
    if (n_trials < 1) {
        throw Error(ErrorCode::InvalidArgument, "survey needs at least one trial");
    }
    const SubsystemLayout la({{"A", dim_a}});
    const SubsystemLayout lb({{"B", dim_b}});
    SurveyReport report;
    report.trials = n_trials;
    report.dim_a = dim_a;
    report.dim_b = dim_b;
    report.seed = seed;
    report.min_conditional_entropy = INFINITY;

    for (std::size_t t = 0; t < n_trials; ++t) {
        Rng rng(seed + t);
        const auto n_terms = 1 + static_cast<std::size_t>(rng.below(2 * dim_a * dim_b));
        const auto sample = random_separable(la, lb, n_terms, rng);
        const auto r = conditional_spectrum_test(sample.state, {"A"}, {"B"});

        report.max_eigenvalue_observed = std::max(
            {report.max_eigenvalue_observed, r.max_conditional_eigenvalue_ab, r.max_conditional_eigenvalue_ba});
        report.min_conditional_entropy = std::min({report.min_conditional_entropy, r.s_a_given_b, r.s_b_given_a});
        const bool violated = !r.classicality_passes || !r.conditional_entropy_nonnegative || !r.ppt_passes;
        report.classicality_violations += r.classicality_passes ? 0 : 1;
        report.negative_conditional_entropies += r.conditional_entropy_nonnegative ? 0 : 1;
        report.ppt_violations += r.ppt_passes ? 0 : 1;
        if (violated && !report.first_violation_trial) {
            report.first_violation_trial = t;
        }
    }
    return report;
}

}  // namespace qentropy
