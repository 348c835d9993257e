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

#include <gtest/gtest.h>

#include <vector>

#include "oracle.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/error.hpp"
#include "qentropy/separability.hpp"
#include "qentropy/states.hpp"

using namespace qentropy;

namespace {

std::vector<double> grid(double step) {
    std::vector<double> xs;
    const int n = static_cast<int>(std::lround(1.0 / step));
    for (int i = 0; i <= n; ++i) {
        xs.push_back(i * step);
    }
    return xs;
}

}  // namespace

TEST(ConditionalSpectrumTest, EprFails) {
    const auto r = conditional_spectrum_test(bell_state(BellState::PhiPlus).density(), {"A"}, {"B"});
    EXPECT_FALSE(r.classicality_passes);
    EXPECT_NEAR(r.max_conditional_eigenvalue_ab, 2.0, 1e-9);
    EXPECT_NEAR(r.max_conditional_eigenvalue_ba, 2.0, 1e-9);
    EXPECT_FALSE(r.conditional_entropy_nonnegative);
    EXPECT_FALSE(r.ppt_passes);
    EXPECT_TRUE(r.spectrum_stable);
}

TEST(ConditionalSpectrumTest, ClassicalStatePasses) {
    const auto r = conditional_spectrum_test(classically_correlated(2), {"A"}, {"B"});
    EXPECT_TRUE(r.classicality_passes);
    EXPECT_NEAR(r.max_conditional_eigenvalue_ab, 1.0, 1e-9);
    EXPECT_NEAR(r.s_a_given_b, 0.0, 1e-12);
    EXPECT_TRUE(r.ppt_passes);
}

TEST(ConditionalSpectrumTest, RandomSeparablePasses) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = random_separable(SubsystemLayout({{"A", 2}}), SubsystemLayout({{"B", 3}}), 1 + seed % 6, seed);
        const auto r = conditional_spectrum_test(s.state, {"A"}, {"B"});
        EXPECT_TRUE(r.classicality_passes) << "seed " << seed << " max " << r.max_conditional_eigenvalue_ab << " / "
                                           << r.max_conditional_eigenvalue_ba;
        EXPECT_TRUE(r.ppt_passes) << "seed " << seed;
    }
}

TEST(ConditionalSpectrumTest, ReportIsConsistent) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto rho = random_density(SubsystemLayout::qubits({"A", "B"}), 1 + seed % 4, seed);
        const auto r = conditional_spectrum_test(rho, {"A"}, {"B"});
        if (r.s_a_given_b < -1e-6) {
            EXPECT_GT(r.max_conditional_eigenvalue_ab, 1.0 + 1e-9) << "seed " << seed;
        }
        if (r.s_b_given_a < -1e-6) {
            EXPECT_GT(r.max_conditional_eigenvalue_ba, 1.0 + 1e-9) << "seed " << seed;
        }
    }
}

TEST(Ppt, Examples) {
    const auto phi = ppt_test(bell_state(BellState::PhiPlus).density(), {"B"});
    EXPECT_NEAR(phi.min_eigenvalue, -0.5, 1e-12);
    EXPECT_TRUE(phi.entangled);
    const auto w = ppt_test(werner_state(0.2), {"B"});
    EXPECT_NEAR(w.min_eigenvalue, (1.0 - 3 * 0.2) / 4, 1e-12);
    EXPECT_FALSE(w.entangled);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = random_density(SubsystemLayout({{"A", 2}}), 2, seed);
        const auto b = random_density(SubsystemLayout({{"B", 3}}), 3, seed + 100);
        EXPECT_FALSE(ppt_test(tensor_product(a, b), {"B"}).entangled);
    }
}

TEST(WernerScan, ClosedFormValues) {
    const std::vector<double> xs = {0.0, 1.0 / 3.0, 0.5, 1.0};
    const auto rows = werner_scan(xs);
    ASSERT_EQ(rows.size(), 4u);
    for (const auto &row : rows) {
        EXPECT_NEAR(row.ppt_min_eigenvalue, (1.0 - 3.0 * row.x) / 4.0, 1e-9);
    }
    EXPECT_NEAR(rows[1].max_conditional_eigenvalue, 1.0, 1e-6);
    EXPECT_NEAR(rows[3].s_a_given_b, -1.0, 1e-12);
}

TEST(WernerScan, MonotoneEigenvalue) {
    const auto rows = werner_scan(grid(0.01));
    for (std::size_t k = 1; k < rows.size(); ++k) {
        EXPECT_GE(rows[k].max_conditional_eigenvalue, rows[k - 1].max_conditional_eigenvalue - 1e-12);
    }
}

TEST(WernerScan, RejectsOutOfRange) {
    const std::vector<double> xs = {0.5, 1.2};
    EXPECT_THROW((void)werner_scan(xs), Error);
}

TEST(WernerScan, BoundariesAgreeOnFineGrid) {
    for (double step : {0.1, 0.01, 0.001}) {
        const auto rows = werner_scan(grid(step));
        double x_class = -1, x_ppt = -1;
        for (const auto &row : rows) {
            if (x_class < 0 && row.max_conditional_eigenvalue > 1.0 + 1e-9) {
                x_class = row.x;
            }
            if (x_ppt < 0 && row.ppt_min_eigenvalue < -1e-9) {
                x_ppt = row.x;
            }
        }
        ASSERT_GE(x_class, 0.0);
        ASSERT_GE(x_ppt, 0.0);
        EXPECT_LT(std::abs(x_class - x_ppt), step) << "step " << step;
    }
}

TEST(WernerThresholds, BisectionMeetsAtOneThird) {
    const auto t = locate_werner_thresholds(grid(0.05));
    EXPECT_NEAR(t.ppt, 1.0 / 3.0, 1e-6);
    EXPECT_NEAR(t.classicality, 1.0 / 3.0, 1e-4);
    EXPECT_LT(std::abs(t.classicality - t.ppt), 1e-4);
}

TEST(Survey, NoViolations) {
    const struct {
        std::size_t trials, da, db;
    } cases[] = {{200, 2, 2}, {100, 2, 3}, {50, 3, 3}};
    for (const auto &c : cases) {
        const auto r = random_separable_survey(c.trials, c.da, c.db, 1);
        EXPECT_EQ(r.trials, c.trials);
        EXPECT_EQ(r.classicality_violations, 0u) << c.da << "x" << c.db << " max " << r.max_eigenvalue_observed;
        EXPECT_LE(r.max_eigenvalue_observed, 1.0 + 1e-9);
        EXPECT_EQ(r.negative_conditional_entropies, 0u);
        EXPECT_GE(r.min_conditional_entropy, -1e-9);
        EXPECT_EQ(r.ppt_violations, 0u);
        EXPECT_FALSE(r.first_violation_trial.has_value());
    }
}

TEST(Survey, Deterministic) {
    const auto a = random_separable_survey(30, 2, 3, 99);
    const auto b = random_separable_survey(30, 2, 3, 99);
    EXPECT_EQ(a.max_eigenvalue_observed, b.max_eigenvalue_observed);
    EXPECT_EQ(a.min_conditional_entropy, b.min_conditional_entropy);
    EXPECT_EQ(a.classicality_violations, b.classicality_violations);
    EXPECT_THROW((void)random_separable_survey(0, 2, 2, 1), Error);
}

TEST(Hierarchy, NegativeEntropyImpliesClassicalityFailureImpliesPptFailure) {
    for (double x : grid(0.01)) {
        const auto r = conditional_spectrum_test(werner_state(x), {"A"}, {"B"});
        if (r.s_a_given_b < -1e-9) {
            EXPECT_FALSE(r.classicality_passes) << "x " << x;
        }
        if (!r.classicality_passes) {
            EXPECT_FALSE(r.ppt_passes) << "x " << x;
        }
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto r = conditional_spectrum_test(random_density(SubsystemLayout({{"A", 2}, {"B", 3}}), 1 + seed % 6, seed),
                                                 {"A"}, {"B"});
        if (std::min(r.s_a_given_b, r.s_b_given_a) < -1e-9) {
            EXPECT_FALSE(r.classicality_passes) << "seed " << seed;
        }
    }
}
