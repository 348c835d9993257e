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

#include <cmath>

#include "oracle.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/error.hpp"
#include "qentropy/random.hpp"
#include "qentropy/states.hpp"

using namespace qentropy;

namespace {

double max_abs(const Matrix &m) {
    return m.cwiseAbs().maxCoeff();
}

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no qentropy::Error thrown";
    return ErrorCode::InvalidArgument;
}

DensityOperator epr() {
    return bell_state(BellState::PhiPlus).density();
}

DensityOperator case_two() {
    return classically_correlated(2);
}

DensityOperator case_one() {
    return maximally_mixed(SubsystemLayout::qubits({"A", "B"}));
}

DensityOperator product_ab(std::uint64_t seed, std::size_t da = 2, std::size_t db = 2) {
    Rng rng(seed);
    return tensor_product(random_density(SubsystemLayout({{"A", da}}), da, rng),
                          random_density(SubsystemLayout({{"B", db}}), db, rng));
}

DensityOperator random_diagonal(const SubsystemLayout &layout, Rng &rng) {
    const auto w = flat_simplex(layout.total_dim(), rng);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(w.size()), static_cast<Eigen::Index>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = w[i];
    }
    return DensityOperator(layout, m);
}

// S(AB) - S(B) from the oracle, with A the first dim and B the second.
double oracle_conditional(const DensityOperator &rho, std::size_t da, std::size_t db) {
    return oracle::entropy(rho.matrix()) - oracle::entropy(oracle::partial_trace(rho.matrix(), {da, db}, {false, true}));
}

}  // namespace

TEST(VonNeumann, Examples) {
    EXPECT_NEAR(von_neumann_entropy(maximally_mixed(SubsystemLayout({{"Q", 2}}))), 1.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(epr()), 0.0, 1e-9);
    EXPECT_NEAR(von_neumann_entropy(random_pure_state(SubsystemLayout({{"A", 3}, {"B", 2}}), 4u).density()), 0.0, 1e-9);
    EXPECT_NEAR(von_neumann_entropy(partial_trace(epr(), {"A"})), 1.0, 1e-12);
}

TEST(VonNeumann, MatchesOracleAndBounds) {
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const SubsystemLayout l({{"A", 2}, {"B", 3}});
        const auto rho = random_density(l, 1 + rng.below(6), rng);
        const double s = von_neumann_entropy(rho);
        EXPECT_NEAR(s, oracle::entropy(rho.matrix()), 1e-10);
        EXPECT_GE(s, -1e-12);
        EXPECT_LE(s, std::log2(6.0) + 1e-12);
    }
}

TEST(Shannon, Examples) {
    EXPECT_NEAR(shannon_entropy(ClassicalDistribution({0.5, 0.5})), 1.0, 1e-15);
    EXPECT_EQ(shannon_entropy(ClassicalDistribution({1.0, 0.0})), 0.0);
    EXPECT_NEAR(shannon_entropy(ClassicalDistribution({0.75, 0.25})), oracle::shannon({0.75, 0.25}), 1e-15);
    EXPECT_NEAR(shannon_entropy(ClassicalDistribution({0.75, 0.25})), 0.811278, 1e-6);
    EXPECT_EQ(code_of([] { (void)ClassicalDistribution({0.5, 0.6}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { (void)ClassicalDistribution({1.5, -0.5}); }), ErrorCode::InvalidArgument);
}

TEST(ConditionalOperator, EprHasOnesAtCorners) {
    const auto op = conditional_amplitude_operator(epr(), {"B"});
    Matrix want = Matrix::Zero(4, 4);
    want(0, 0) = want(0, 3) = want(3, 0) = want(3, 3) = 1.0;
    EXPECT_LT(max_abs(op.matrix() - want), 1e-9);
    EXPECT_EQ(nonclassical_eigenvalue_count(op), 1u);
    EXPECT_NEAR(spectral_decompose(op).max(), 2.0, 1e-9);
}

TEST(ConditionalOperator, ProductGivesMarginalTimesIdentity) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const auto a = random_density(SubsystemLayout({{"A", 2}}), 2, rng);
        const auto b = random_density(SubsystemLayout({{"B", 3}}), 3, rng);
        const auto op = conditional_amplitude_operator(tensor_product(a, b), {"B"});
        EXPECT_LT(max_abs(op.matrix() - oracle::kron(a.matrix(), Matrix::Identity(3, 3))), 1e-9);
    }
}

TEST(ConditionalOperator, ClassicallyCorrelated) {
    const auto op = conditional_amplitude_operator(case_two(), {"B"});
    Matrix want = Matrix::Zero(4, 4);
    want(0, 0) = want(3, 3) = 1.0;
    EXPECT_LT(max_abs(op.matrix() - want), 1e-9);
    EXPECT_EQ(nonclassical_eigenvalue_count(op), 0u);
}

TEST(ConditionalOperator, CommutingCaseMatchesPseudoInverseProduct) {
    Rng rng(21);
    const SubsystemLayout l({{"A", 2}, {"B", 3}});
    for (int t = 0; t < 20; ++t) {
        const auto rho = random_diagonal(l, rng);
        const Matrix sigma = oracle::kron(Matrix::Identity(2, 2), oracle::partial_trace(rho.matrix(), {2, 3}, {false, true}));
        Matrix want = Matrix::Zero(6, 6);
        for (Eigen::Index i = 0; i < 6; ++i) {
            if (sigma(i, i).real() > 0) {
                want(i, i) = rho.matrix()(i, i) / sigma(i, i);
            }
        }
        EXPECT_LT(max_abs(conditional_amplitude_operator(rho, {"B"}).matrix() - want), 1e-6);
    }
}

TEST(ConditionalOperator, Errors) {
    EXPECT_EQ(code_of([] { (void)conditional_amplitude_operator(epr(), {"Z"}); }), ErrorCode::UnknownLabel);
    EXPECT_EQ(code_of([] { (void)conditional_amplitude_operator(epr(), {"A", "B"}); }), ErrorCode::InvalidPartition);
    EXPECT_EQ(code_of([] { (void)conditional_amplitude_operator(epr(), {"B"}, 0.0); }), ErrorCode::InvalidArgument);
}

TEST(ConditionalOperator, DensityOperatorsHaveNoNonclassicalEigenvalue) {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto rho = random_density(SubsystemLayout({{"A", 3}, {"B", 2}}), 1 + rng.below(6), rng);
        EXPECT_EQ(nonclassical_eigenvalue_count(rho.op()), 0u);
    }
}

TEST(MutualOperator, ProductIsIdentityOnSupport) {
    const auto rho = product_ab(4);
    const auto op = mutual_amplitude_operator(rho, {"A"}, {"B"});
    EXPECT_LT(max_abs(op.matrix() - Matrix::Identity(4, 4)), 1e-9);
}

TEST(MutualOperator, TraceFormExamples) {
    EXPECT_NEAR(mutual_entropy_trace(epr(), {"A"}, {"B"}), 2.0, 1e-6);
    EXPECT_NEAR(mutual_entropy_trace(case_two(), {"A"}, {"B"}), 1.0, 1e-6);
    EXPECT_NEAR(mutual_entropy_trace(case_one(), {"A"}, {"B"}), 0.0, 1e-6);
}

TEST(MutualOperator, TraceFormAgreesOnRandomStates) {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_density(SubsystemLayout({{"A", 2}, {"B", 2}}), 1 + rng.below(4), rng);
        EXPECT_NEAR(mutual_entropy_trace(rho, {"A"}, {"B"}), mutual_entropy(rho, {"A"}, {"B"}), 1e-5) << "trial " << t;
    }
}

TEST(ConditionalEntropy, Examples) {
    EXPECT_NEAR(conditional_entropy(epr(), {"B"}), -1.0, 1e-12);
    EXPECT_NEAR(conditional_entropy(case_two(), {"B"}), 0.0, 1e-12);
    EXPECT_NEAR(conditional_entropy(case_one(), {"B"}), 1.0, 1e-12);
    EXPECT_EQ(code_of([] { (void)conditional_entropy(epr(), {"X"}); }), ErrorCode::UnknownLabel);
}

TEST(ConditionalEntropy, TraceFormAgreesWithDifference) {
    const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{2, 2}, {2, 3}, {3, 3}};
    Rng rng(2024);
    int trials = 0;
    double worst = 0;
    for (const auto &[da, db] : shapes) {
        const SubsystemLayout l({{"A", da}, {"B", db}});
        for (int t = 0; t < 167; ++t, ++trials) {
            const auto rho = random_density(l, 1 + rng.below(da * db), rng);
            const double diff = std::abs(conditional_entropy_trace(rho, {"B"}, 1e-12) - oracle_conditional(rho, da, db));
            worst = std::max(worst, diff);
        }
    }
    EXPECT_GE(trials, 500);
    EXPECT_LT(worst, 1e-5);
}

TEST(ConditionalEntropy, NegativeValueForcesNonclassicalEigenvalue) {
    Rng rng(77);
    int negatives = 0;
    for (int t = 0; t < 200; ++t) {
        const auto rho = random_density(SubsystemLayout({{"A", 2}, {"B", 2}}), 1 + rng.below(2), rng);
        if (conditional_entropy(rho, {"B"}) < -1e-6) {
            ++negatives;
            EXPECT_GE(nonclassical_eigenvalue_count(conditional_amplitude_operator(rho, {"B"})), 1u) << "trial " << t;
        }
    }
    EXPECT_GT(negatives, 0);
}

TEST(MutualEntropy, Examples) {
    EXPECT_NEAR(mutual_entropy(epr(), {"A"}, {"B"}), 2.0, 1e-12);
    EXPECT_NEAR(mutual_entropy(product_ab(8, 3, 2), {"A"}, {"B"}), 0.0, 1e-9);
    const auto ghz = ghz_state(3).density();
    EXPECT_NEAR(mutual_entropy(ghz, {"A", "B"}, {"C"}), 2.0, 1e-12);
    EXPECT_NEAR(mutual_entropy(ghz, {"A", "B"}, {"C"}), 2.0 * oracle::marginal_entropy(ghz.matrix(), {2, 2, 2}, {false, false, true}),
                1e-12);
    EXPECT_EQ(code_of([&] { (void)mutual_entropy(ghz, {"A", "B"}, {"B"}); }), ErrorCode::OverlappingParts);
}

TEST(MutualEntropy, Bounds) {
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t da = 2 + rng.below(2), db = 2 + rng.below(2);
        const SubsystemLayout l({{"A", da}, {"B", db}});
        const auto rho = random_density(l, 1 + rng.below(da * db), rng);
        const double sa = oracle::marginal_entropy(rho.matrix(), {da, db}, {true, false});
        const double sb = oracle::marginal_entropy(rho.matrix(), {da, db}, {false, true});
        const double m = mutual_entropy(rho, {"A"}, {"B"});
        EXPECT_GE(m, -1e-9);
        EXPECT_LE(m, 2.0 * std::min(sa, sb) + 1e-9);
        EXPECT_GE(oracle::entropy(rho.matrix()), std::abs(sa - sb) - 1e-9);
    }
}

TEST(MutualEntropy, ClassicalStatesObeyTighterBound) {
    Rng rng(6);
    for (int t = 0; t < 200; ++t) {
        const auto rho = random_diagonal(SubsystemLayout({{"A", 2}, {"B", 3}}), rng);
        const auto d = bipartite_diagram(rho, {"A"}, {"B"});
        EXPECT_LE(d.s_mutual, std::min(d.s_a, d.s_b) + 1e-9);
        EXPECT_GE(d.s_a_given_b, -1e-9);
    }
}

TEST(ConditionalMutual, Examples) {
    const auto ghz = ghz_state(3).density();
    EXPECT_NEAR(conditional_mutual_entropy(ghz, {"A"}, {"B"}, {"C"}), 1.0, 1e-12);
    Rng rng(1);
    const auto p3 = tensor_product(tensor_product(random_density(SubsystemLayout({{"A", 2}}), 2, rng),
                                                  random_density(SubsystemLayout({{"B", 2}}), 2, rng)),
                                   random_density(SubsystemLayout({{"C", 2}}), 2, rng));
    EXPECT_NEAR(conditional_mutual_entropy(p3, {"A"}, {"B"}, {"C"}), 0.0, 1e-9);
    const auto epr_c = tensor_product(epr(), maximally_mixed(SubsystemLayout({{"C", 2}})));
    EXPECT_NEAR(conditional_mutual_entropy(epr_c, {"A"}, {"B"}, {"C"}), 2.0, 1e-9);
    EXPECT_EQ(code_of([&] { (void)conditional_mutual_entropy(ghz, {"A"}, {"A"}, {"C"}); }), ErrorCode::OverlappingParts);
}

TEST(ConditionalMutual, StrongSubadditivity) {
    Rng rng(500);
    const SubsystemLayout l = SubsystemLayout::qubits({"A", "B", "C"});
    double worst = 0;
    for (int t = 0; t < 500; ++t) {
        const auto rho = random_density(l, 1 + rng.below(8), rng);
        const std::vector<std::size_t> dims = {2, 2, 2};
        // S(AC) + S(BC) - S(C) - S(ABC) from the oracle.
        const double ssa = oracle::marginal_entropy(rho.matrix(), dims, {true, false, true}) +
                           oracle::marginal_entropy(rho.matrix(), dims, {false, true, true}) -
                           oracle::marginal_entropy(rho.matrix(), dims, {false, false, true}) - oracle::entropy(rho.matrix());
        EXPECT_NEAR(conditional_mutual_entropy(rho, {"A"}, {"B"}, {"C"}), ssa, 1e-9);
        worst = std::min(worst, ssa);
    }
    EXPECT_GE(worst, -1e-9);
}

TEST(Ternary, Examples) {
    EXPECT_NEAR(ternary_mutual_entropy(ghz_state(3).density(), {"A"}, {"B"}, {"C"}), 0.0, 1e-12);
    EXPECT_NEAR(ternary_mutual_entropy(maximally_mixed(SubsystemLayout::qubits({"A", "B", "C"})), {"A"}, {"B"}, {"C"}),
                0.0, 1e-12);
    // diag over {000, 111}: classical Venn entries are H = 1 for every marginal.
    const auto triple = classically_correlated(3);
    const double h = oracle::shannon({0.5, 0.5});
    EXPECT_NEAR(ternary_mutual_entropy(triple, {"A"}, {"B"}, {"C"}), 3 * h - 3 * h + h, 1e-12);
}

TEST(Ternary, SymmetricUnderPermutation) {
    Rng rng(31);
    const SubsystemLayout l({{"A", 2}, {"B", 2}, {"C", 3}});
    for (int t = 0; t < 30; ++t) {
        const auto rho = random_density(l, 1 + rng.below(12), rng);
        const double ref = ternary_mutual_entropy(rho, {"A"}, {"B"}, {"C"});
        EXPECT_NEAR(ternary_mutual_entropy(rho, {"B"}, {"C"}, {"A"}), ref, 1e-9);
        EXPECT_NEAR(ternary_mutual_entropy(rho, {"C"}, {"A"}, {"B"}), ref, 1e-9);
        EXPECT_NEAR(ternary_mutual_entropy(rho, {"B"}, {"A"}, {"C"}), ref, 1e-9);
        EXPECT_NEAR(ref, mutual_entropy(rho, {"A"}, {"B"}) - conditional_mutual_entropy(rho, {"A"}, {"B"}, {"C"}), 1e-9);
    }
}

TEST(Ternary, PureStatesHaveZeroCenterAndSchmidtSymmetry) {
    Rng rng(41);
    const SubsystemLayout l({{"A", 2}, {"B", 2}, {"C", 2}});
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_pure_state(l, rng).density();
        EXPECT_LT(std::abs(ternary_mutual_entropy(rho, {"A"}, {"B"}, {"C"})), 1e-8);
        const std::vector<std::size_t> dims = {2, 2, 2};
        EXPECT_LT(std::abs(oracle::marginal_entropy(rho.matrix(), dims, {true, true, false}) -
                           oracle::marginal_entropy(rho.matrix(), dims, {false, false, true})),
                  1e-9);
    }
}

TEST(Multiway, Examples) {
    EXPECT_NEAR(multiway_mutual_entropy(epr(), {{"A"}, {"B"}}), 2.0, 1e-12);
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto ghz = ghz_state(n).density();
        std::vector<LabelSet> parts;
        for (const auto &l : ghz.layout().labels()) {
            parts.push_back({l});
        }
        EXPECT_NEAR(multiway_mutual_entropy(ghz, parts), 1.0 + (n % 2 == 0 ? 1.0 : -1.0), 1e-9) << "n = " << n;
    }
    EXPECT_EQ(code_of([] { (void)multiway_mutual_entropy(epr(), {{"A", "B"}}); }), ErrorCode::BadArity);
}

TEST(Multiway, ThreePartsMatchesTernary) {
    Rng rng(2);
    const auto rho = random_density(SubsystemLayout::qubits({"A", "B", "C"}), 5, rng);
    EXPECT_NEAR(multiway_mutual_entropy(rho, {{"A"}, {"B"}, {"C"}}), ternary_mutual_entropy(rho, {"A"}, {"B"}, {"C"}), 1e-12);
}

TEST(Bipartite, FigureCases) {
    const auto three = bipartite_diagram(epr(), {"A"}, {"B"});
    EXPECT_NEAR(three.s_a_given_b, -1.0, 1e-12);
    EXPECT_NEAR(three.s_mutual, 2.0, 1e-12);
    EXPECT_NEAR(three.s_b_given_a, -1.0, 1e-12);
    EXPECT_NEAR(three.s_ab, 0.0, 1e-12);

    const auto two = bipartite_diagram(case_two(), {"A"}, {"B"});
    EXPECT_NEAR(two.s_a_given_b, 0.0, 1e-12);
    EXPECT_NEAR(two.s_mutual, 1.0, 1e-12);
    EXPECT_NEAR(two.s_b_given_a, 0.0, 1e-12);

    const auto one = bipartite_diagram(case_one(), {"A"}, {"B"});
    EXPECT_NEAR(one.s_a_given_b, 1.0, 1e-12);
    EXPECT_NEAR(one.s_mutual, 0.0, 1e-12);
    EXPECT_NEAR(one.s_b_given_a, 1.0, 1e-12);
}

TEST(Bipartite, Invariants) {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_density(SubsystemLayout({{"A", 3}, {"B", 2}}), 1 + rng.below(6), rng);
        const auto d = bipartite_diagram(rho, {"A"}, {"B"});
        EXPECT_NEAR(d.s_a_given_b, d.s_ab - d.s_b, 1e-9);
        EXPECT_NEAR(d.s_mutual, d.s_a + d.s_b - d.s_ab, 1e-9);
        EXPECT_GE(d.s_ab, std::abs(d.s_a - d.s_b) - 1e-9);
        EXPECT_LE(std::abs(d.s_a_given_b), d.s_a + 1e-9);
        EXPECT_NEAR(d.s_a, oracle::marginal_entropy(rho.matrix(), {3, 2}, {true, false}), 1e-10);
    }
}

TEST(Bipartite, LocalUnitaryInvariance) {
    Rng rng(14);
    const SubsystemLayout la({{"A", 2}}), lb({{"B", 3}});
    for (int t = 0; t < 50; ++t) {
        const auto rho = random_density(la.concat(lb), 1 + rng.below(6), rng);
        const auto u = tensor_product(random_unitary(la, rng), random_unitary(lb, rng));
        const auto before = bipartite_diagram(rho, {"A"}, {"B"});
        const auto after = bipartite_diagram(evolve(rho, u), {"A"}, {"B"});
        EXPECT_NEAR(before.s_a, after.s_a, 1e-9);
        EXPECT_NEAR(before.s_b, after.s_b, 1e-9);
        EXPECT_NEAR(before.s_ab, after.s_ab, 1e-9);
        EXPECT_NEAR(before.s_a_given_b, after.s_a_given_b, 1e-9);
        EXPECT_NEAR(before.s_b_given_a, after.s_b_given_a, 1e-9);
        EXPECT_NEAR(before.s_mutual, after.s_mutual, 1e-9);
    }
}

TEST(TernaryDiagram, Ghz) {
    const auto d = ternary_diagram(ghz_state(3).density(), {"A"}, {"B"}, {"C"});
    EXPECT_NEAR(d.s_a_given_bc, -1.0, 1e-12);
    EXPECT_NEAR(d.s_b_given_ac, -1.0, 1e-12);
    EXPECT_NEAR(d.s_c_given_ab, -1.0, 1e-12);
    EXPECT_NEAR(d.s_ab_given_c, 1.0, 1e-12);
    EXPECT_NEAR(d.s_ac_given_b, 1.0, 1e-12);
    EXPECT_NEAR(d.s_bc_given_a, 1.0, 1e-12);
    EXPECT_NEAR(d.s_ternary, 0.0, 1e-12);
}

TEST(TernaryDiagram, GhzPairWithTrivialThirdParty) {
    const auto ab = partial_trace(ghz_state(3).density(), {"A", "B"});
    const auto rho = tensor_product(ab, basis_state(SubsystemLayout({{"C", 2}}), 0).density());
    const auto d = ternary_diagram(rho, {"A"}, {"B"}, {"C"});
    EXPECT_NEAR(d.s_ab_given_c, 1.0, 1e-12);
    EXPECT_NEAR(d.s_ternary, 0.0, 1e-12);
}

TEST(TernaryDiagram, ProductOfThree) {
    Rng rng(15);
    const auto a = random_density(SubsystemLayout({{"A", 2}}), 2, rng);
    const auto b = random_density(SubsystemLayout({{"B", 2}}), 2, rng);
    const auto c = random_density(SubsystemLayout({{"C", 2}}), 2, rng);
    const auto d = ternary_diagram(tensor_product(tensor_product(a, b), c), {"A"}, {"B"}, {"C"});
    EXPECT_NEAR(d.s_a_given_bc, oracle::entropy(a.matrix()), 1e-9);
    EXPECT_NEAR(d.s_b_given_ac, oracle::entropy(b.matrix()), 1e-9);
    EXPECT_NEAR(d.s_c_given_ab, oracle::entropy(c.matrix()), 1e-9);
    EXPECT_NEAR(d.s_ab_given_c, 0.0, 1e-9);
    EXPECT_NEAR(d.s_ac_given_b, 0.0, 1e-9);
    EXPECT_NEAR(d.s_bc_given_a, 0.0, 1e-9);
    EXPECT_NEAR(d.s_ternary, 0.0, 1e-9);
}

TEST(TernaryDiagram, SumRuleAndStrongSubadditivity) {
    Rng rng(16);
    const SubsystemLayout l({{"A", 2}, {"B", 2}, {"C", 2}});
    for (int t = 0; t < 100; ++t) {
        const auto rho = random_density(l, 1 + rng.below(8), rng);
        const auto d = ternary_diagram(rho, {"A"}, {"B"}, {"C"});
        const double sum = d.s_a_given_bc + d.s_b_given_ac + d.s_c_given_ab + d.s_ab_given_c + d.s_ac_given_b +
                           d.s_bc_given_a + d.s_ternary;
        EXPECT_NEAR(sum, oracle::entropy(rho.matrix()), 1e-9);
        EXPECT_GE(d.s_ab_given_c, -1e-9);
        EXPECT_GE(d.s_ac_given_b, -1e-9);
        EXPECT_GE(d.s_bc_given_a, -1e-9);
        EXPECT_NEAR(d.s_ternary, mutual_entropy(rho, {"A"}, {"B"}) - d.s_ab_given_c, 1e-9);
    }
}

TEST(Trotter, CommutingCaseExactAtFirstOrder) {
    const auto limit = conditional_amplitude_operator(epr(), {"B"});
    EXPECT_LT(max_abs(trotter_approximant(epr(), {"B"}, 1).matrix() - limit.matrix()), 1e-8);
}

TEST(Trotter, ProductStateAtEveryOrder) {
    Rng rng(17);
    const auto a = random_density(SubsystemLayout({{"A", 2}}), 2, rng);
    const auto b = random_density(SubsystemLayout({{"B", 2}}), 2, rng);
    const auto rho = tensor_product(a, b);
    const Matrix want = oracle::kron(a.matrix(), Matrix::Identity(2, 2));
    for (int n = 1; n <= 1024; n *= 2) {
        EXPECT_LT(max_abs(trotter_approximant(rho, {"B"}, n).matrix() - want), 1e-8) << "n = " << n;
    }
}

TEST(Trotter, ConvergesOnRandomFullRankStates) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto rho = random_density(SubsystemLayout::qubits({"A", "B"}), 4, seed);
        const auto limit = conditional_amplitude_operator(rho, {"B"});
        std::vector<double> errs;
        for (int n : {16, 64, 256, 1024}) {
            errs.push_back((trotter_approximant(rho, {"B"}, n).matrix() - limit.matrix()).norm());
        }
        EXPECT_LT(errs.back(), errs.front()) << "seed " << seed;
        for (std::size_t k = 1; k < errs.size(); ++k) {
            EXPECT_LE(errs[k], errs[k - 1] * 1.000001) << "seed " << seed;
        }
    }
}

TEST(Trotter, RejectsBadOrder) {
    EXPECT_EQ(code_of([] { (void)trotter_approximant(epr(), {"B"}, 3); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { (void)trotter_approximant(epr(), {"B"}, 0); }), ErrorCode::InvalidArgument);
}

TEST(ConditionalSpectrum, StableOnEpr) {
    const auto s = conditional_spectrum(epr(), {"B"});
    EXPECT_TRUE(s.stable);
    EXPECT_LT(s.disagreement, 1e-6);
    EXPECT_NEAR(s.eigenvalues.front(), 2.0, 1e-9);
}

TEST(ChainRules, GhzTerms) {
    const auto r = verify_chain_rules(ghz_state(3).density(), {{"A"}, {"B"}, {"C"}});
    ASSERT_EQ(r.entropy_terms.size(), 3u);
    EXPECT_NEAR(r.entropy_terms[0], 1.0, 1e-12);
    EXPECT_NEAR(r.entropy_terms[1], 0.0, 1e-12);
    EXPECT_NEAR(r.entropy_terms[2], -1.0, 1e-12);
    EXPECT_LT(std::abs(r.entropy_residual), 1e-12);
}

TEST(ChainRules, RandomPureStates) {
    Rng rng(18);
    for (int t = 0; t < 50; ++t) {
        const auto rho = random_pure_state(SubsystemLayout::qubits({"A", "B", "C"}), rng).density();
        const auto r = verify_chain_rules(rho, {{"A"}, {"B"}, {"C"}});
        EXPECT_LT(std::abs(r.entropy_residual), 1e-9);
        EXPECT_LT(std::abs(r.mutual_residual), 1e-9);
        // Oracle: S(A) + S(B|A) + S(C|AB) telescopes to S(ABC).
        const std::vector<std::size_t> dims = {2, 2, 2};
        const double sa = oracle::marginal_entropy(rho.matrix(), dims, {true, false, false});
        const double sab = oracle::marginal_entropy(rho.matrix(), dims, {true, true, false});
        EXPECT_NEAR(r.entropy_terms[0], sa, 1e-9);
        EXPECT_NEAR(r.entropy_terms[1], sab - sa, 1e-9);
        EXPECT_NEAR(r.entropy_terms[2], oracle::entropy(rho.matrix()) - sab, 1e-9);
    }
}

TEST(ChainRules, MutualChainOnEprWithQubit) {
    Rng rng(19);
    // Order A, C, B: S(AC:B) = S(A:B) + S(C:B|A).
    const auto rho = tensor_product(epr(), random_density(SubsystemLayout({{"C", 2}}), 2, rng));
    const auto r = verify_chain_rules(rho, {{"A"}, {"C"}, {"B"}});
    EXPECT_LT(std::abs(r.mutual_residual), 1e-9);
    ASSERT_EQ(r.mutual_terms.size(), 2u);
    EXPECT_NEAR(r.mutual_terms[0], 2.0, 1e-9);
    EXPECT_NEAR(r.mutual_terms[1], 0.0, 1e-9);
}

TEST(MarginalEntropies, CachesAndMatchesOracle) {
    Rng rng(20);
    const auto rho = random_density(SubsystemLayout({{"A", 2}, {"B", 3}, {"C", 2}}), 7, rng);
    const MarginalEntropies s(rho);
    const std::vector<std::size_t> dims = {2, 3, 2};
    EXPECT_NEAR(s({"A", "C"}), oracle::marginal_entropy(rho.matrix(), dims, {true, false, true}), 1e-10);
    EXPECT_EQ(s({"C", "A"}), s({"A", "C"}));
    EXPECT_EQ(s({}), 0.0);
}
