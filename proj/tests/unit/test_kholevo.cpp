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
#include <numbers>

#include "oracle.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/error.hpp"
#include "qentropy/kholevo.hpp"
#include "qentropy/measurement.hpp"
#include "qentropy/random.hpp"
#include "qentropy/states.hpp"

using namespace qentropy;

namespace {

const SubsystemLayout kQ({{"Q", 2}});

PreparationEnsemble zero_plus() {
    return PreparationEnsemble(ClassicalDistribution({0.5, 0.5}),
                               {qubit_state("zero").density(), qubit_state("plus").density()});
}

PreparationEnsemble orthogonal() {
    return PreparationEnsemble(ClassicalDistribution({0.5, 0.5}),
                               {qubit_state("zero").density(), qubit_state("one").density()});
}

PreparationEnsemble random_ensemble(Rng &rng) {
    const std::size_t d = 2 + rng.below(2);
    const std::size_t n = 2 + rng.below(3);
    const SubsystemLayout q({{"Q", d}});
    std::vector<DensityOperator> signals;
    for (std::size_t k = 0; k < n; ++k) {
        signals.push_back(random_density(q, 1 + rng.below(d), rng));
    }
    return PreparationEnsemble(ClassicalDistribution(flat_simplex(n, rng)), std::move(signals));
}

// Classical mutual information of a joint table p[x][a].
double table_mutual(const std::vector<std::vector<double>> &p) {
    std::vector<double> px(p.size(), 0.0), pa(p.front().size(), 0.0), flat;
    for (std::size_t x = 0; x < p.size(); ++x) {
        for (std::size_t a = 0; a < p[x].size(); ++a) {
            px[x] += p[x][a];
            pa[a] += p[x][a];
            flat.push_back(p[x][a]);
        }
    }
    return oracle::shannon(px) + oracle::shannon(pa) - oracle::shannon(flat);
}

Matrix random_basis(std::size_t d, Rng &rng) {
    return haar_unitary(d, rng);
}

}  // namespace

TEST(JointPreparer, BlockDiagonalAndEntropy) {
    Rng rng(1);
    for (int t = 0; t < 30; ++t) {
        const auto ens = random_ensemble(rng);
        const auto rho = joint_preparer_state(ens);
        double want = oracle::shannon(ens.priors().probabilities());
        for (std::size_t i = 0; i < ens.size(); ++i) {
            want += ens.priors().probabilities()[i] * oracle::entropy(ens.signals()[i].matrix());
        }
        EXPECT_NEAR(von_neumann_entropy(rho), want, 1e-9);
        EXPECT_LT((partial_trace(rho, {"Q"}).matrix() - ens.average_state().matrix()).cwiseAbs().maxCoeff(), 1e-12);
        const auto d = static_cast<Eigen::Index>(ens.signal_dim());
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(ens.size()); ++i) {
            for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(ens.size()); ++j) {
                if (i != j) {
                    EXPECT_EQ(rho.matrix().block(i * d, j * d, d, d).cwiseAbs().maxCoeff(), 0.0);
                }
            }
        }
    }
}

TEST(JointPreparer, Examples) {
    EXPECT_NEAR(von_neumann_entropy(joint_preparer_state(orthogonal())), 1.0, 1e-12);
    const auto rho = maximally_mixed(kQ);
    const PreparationEnsemble same(ClassicalDistribution({0.25, 0.75}), {rho, rho});
    EXPECT_NEAR(mutual_entropy(joint_preparer_state(same), {"X"}, {"Q"}), 0.0, 1e-12);
    const double lam = (1.0 + 1.0 / std::numbers::sqrt2) / 2.0;
    EXPECT_NEAR(von_neumann_entropy(zero_plus().average_state()), oracle::binary_entropy(lam), 1e-12);
    EXPECT_NEAR(oracle::binary_entropy(lam), 0.600876, 1e-6);
}

TEST(JointPreparer, LayoutMismatch) {
    EXPECT_THROW(PreparationEnsemble(ClassicalDistribution({0.5, 0.5}),
                                     {qubit_state("zero").density(), maximally_mixed(SubsystemLayout({{"Q", 3}}))}),
                 Error);
    EXPECT_THROW(PreparationEnsemble(ClassicalDistribution({1.0}),
                                     {qubit_state("zero").density(), qubit_state("one").density()}),
                 Error);
}

TEST(KholevoBound, Examples) {
    EXPECT_NEAR(kholevo_bound(orthogonal()), 1.0, 1e-12);
    EXPECT_NEAR(kholevo_bound(zero_plus()), 0.600876, 1e-5);
    const auto rho = random_density(kQ, 2, 3u);
    EXPECT_NEAR(kholevo_bound(PreparationEnsemble(ClassicalDistribution({0.5, 0.5}), {rho, rho})), 0.0, 1e-12);
}

TEST(KholevoBound, EqualsPreparerMutualEntropy) {
    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        const auto ens = random_ensemble(rng);
        const double chi = kholevo_bound(ens);
        EXPECT_NEAR(chi, mutual_entropy(joint_preparer_state(ens), {"X"}, {"Q"}), 1e-9);
        EXPECT_GE(chi, -1e-9);
        EXPECT_LE(chi, oracle::shannon(ens.priors().probabilities()) + 1e-9);
    }
}

TEST(MeasureEnsemble, OrthogonalSignalsOwnBasis) {
    const auto m = measure_ensemble(orthogonal(), MeasurementModel(Observable::pauli('z')));
    EXPECT_NEAR(m.report.accessible_info, 1.0, 1e-9);
    EXPECT_NEAR(m.report.chi, 1.0, 1e-9);
    EXPECT_NEAR(m.report.deficit, 0.0, 1e-9);
}

TEST(MeasureEnsemble, ZeroPlusComputationalBasis) {
    const auto m = measure_ensemble(zero_plus(), MeasurementModel(Observable::pauli('z')));
    const double want = oracle::binary_entropy(0.75) - 0.5;
    EXPECT_NEAR(m.report.accessible_info, want, 1e-9);
    EXPECT_NEAR(m.report.accessible_info, 0.311278, 1e-5);
    EXPECT_LT(m.report.accessible_info, m.report.chi);
    EXPECT_NEAR(accessible_information(zero_plus(), Observable::pauli('z')), want, 1e-9);
}

TEST(MeasureEnsemble, SinglePureSignal) {
    Rng rng(3);
    const PreparationEnsemble one(ClassicalDistribution({1.0}), {random_pure_state(kQ, rng).density()});
    for (int t = 0; t < 5; ++t) {
        const Observable obs("r", random_basis(2, rng));
        EXPECT_NEAR(measure_ensemble(one, MeasurementModel(obs)).report.accessible_info, 0.0, 1e-12);
    }
}

TEST(AccessibleInformation, Examples) {
    EXPECT_NEAR(accessible_information(orthogonal(), Observable::pauli('x')), 0.0, 1e-12);
    EXPECT_NEAR(accessible_information(orthogonal(), Observable::pauli('z')), 1.0, 1e-12);
    const auto table = outcome_table(zero_plus(), Observable::pauli('z'));
    ASSERT_EQ(table.size(), 2u);
    EXPECT_NEAR(table[0][0], 1.0, 1e-12);
    EXPECT_NEAR(table[0][1], 0.0, 1e-12);
    EXPECT_NEAR(table[1][0], 0.5, 1e-12);
    EXPECT_NEAR(table[1][1], 0.5, 1e-12);
}

TEST(BoundChain, RandomEnsemblesAndMeasurements) {
    Rng rng(200);
    for (int t = 0; t < 200; ++t) {
        const auto ens = random_ensemble(rng);
        const Observable obs("r", random_basis(ens.signal_dim(), rng));
        const auto m = measure_ensemble(ens, MeasurementModel(obs));
        const auto &r = m.report;
        const double h = oracle::shannon(ens.priors().probabilities());
        EXPECT_GE(r.accessible_info, -1e-9) << "trial " << t;
        EXPECT_LE(r.accessible_info, r.chi + 1e-9) << "trial " << t;
        EXPECT_LE(r.chi, h + 1e-9) << "trial " << t;
        EXPECT_NEAR(r.chi, r.s_xq_mutual, 1e-9);
        EXPECT_GE(r.deficit, -1e-9);
        EXPECT_LT(std::abs(r.decomposition_residual), 1e-9);
        EXPECT_LT(std::abs(r.conservation_residual), 1e-9);

        // The X'A' table is the classical p_i Tr(P_a rho_i); its mutual information is S(X':A').
        std::vector<std::vector<double>> joint(ens.size(), std::vector<double>(obs.outcome_count()));
        for (std::size_t i = 0; i < ens.size(); ++i) {
            for (std::size_t a = 0; a < obs.outcome_count(); ++a) {
                joint[i][a] = ens.priors().probabilities()[i] * (obs.projector(a) * ens.signals()[i].matrix()).trace().real();
            }
        }
        EXPECT_NEAR(r.accessible_info, table_mutual(joint), 1e-9);

        const Matrix &xa = m.preparer_ancilla.matrix();
        const Matrix off = xa - Matrix(xa.diagonal().asDiagonal());
        EXPECT_LT(off.cwiseAbs().sum(), 1e-10);
        const auto da = m.preparer_ancilla.layout().dim_of("A");
        for (std::size_t i = 0; i < ens.size(); ++i) {
            for (std::size_t a = 0; a < obs.outcome_count(); ++a) {
                const auto k = static_cast<Eigen::Index>(i * da + a);
                EXPECT_NEAR(xa(k, k).real(), joint[i][a], 1e-10);
            }
        }
    }
}

TEST(Conservation, ArbitraryUnitaries) {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        const auto ens = random_ensemble(rng);
        const std::size_t da = 2 + rng.below(2);
        const Matrix u = haar_unitary(ens.signal_dim() * da, rng);
        const auto m = evolve_ensemble(ens, u, da);
        EXPECT_LT(std::abs(m.report.conservation_residual), 1e-9) << "trial " << t;
        const double after = mutual_entropy(m.joint, {"X"}, {"Q", "A"});
        EXPECT_NEAR(after, kholevo_bound(ens), 1e-9);
    }
}

TEST(ClassicalVsQuantum, Examples) {
    const Matrix id = Matrix::Identity(2, 2);
    const auto epr = classical_vs_quantum_mutual(bell_state(BellState::PhiPlus).density(), id, id);
    EXPECT_NEAR(epr.h_classical, 1.0, 1e-12);
    EXPECT_NEAR(epr.s_quantum, 2.0, 1e-12);
    Rng rng(5);
    Matrix diag = Matrix::Zero(4, 4);
    const auto w = flat_simplex(4, rng);
    for (Eigen::Index i = 0; i < 4; ++i) {
        diag(i, i) = w[static_cast<std::size_t>(i)];
    }
    const auto cl = classical_vs_quantum_mutual(DensityOperator(SubsystemLayout::qubits({"A", "B"}), diag), id, id);
    EXPECT_NEAR(cl.h_classical, cl.s_quantum, 1e-12);
    const auto prod = tensor_product(random_density(SubsystemLayout({{"A", 2}}), 2, rng),
                                     random_density(SubsystemLayout({{"B", 2}}), 2, rng));
    const auto p = classical_vs_quantum_mutual(prod, random_basis(2, rng), random_basis(2, rng));
    EXPECT_NEAR(p.h_classical, 0.0, 1e-12);
    EXPECT_NEAR(p.s_quantum, 0.0, 1e-9);
}

TEST(ClassicalVsQuantum, ShannonNeverExceedsQuantum) {
    Rng rng(6);
    for (int t = 0; t < 200; ++t) {
        const std::size_t da = 2 + rng.below(2), db = 2 + rng.below(2);
        const auto rho = random_density(SubsystemLayout({{"X", da}, {"Y", db}}), 1 + rng.below(da * db), rng);
        const Matrix bx = random_basis(da, rng), by = random_basis(db, rng);
        const auto r = classical_vs_quantum_mutual(rho, bx, by);
        EXPECT_LE(r.h_classical, r.s_quantum + 1e-9) << "trial " << t;
        const Matrix b = oracle::kron(bx, by);
        std::vector<std::vector<double>> table(da, std::vector<double>(db));
        for (std::size_t x = 0; x < da; ++x) {
            for (std::size_t y = 0; y < db; ++y) {
                const auto col = b.col(static_cast<Eigen::Index>(x * db + y));
                table[x][y] = (col.adjoint() * rho.matrix() * col)(0, 0).real();
            }
        }
        EXPECT_NEAR(r.h_classical, table_mutual(table), 1e-10);
    }
}

TEST(Sweep, ZeroPlusBestAngle) {
    const auto pts = accessible_information_sweep(zero_plus(), 1.0);
    ASSERT_FALSE(pts.empty());
    double best = -1, best_angle = 0;
    for (const auto &p : pts) {
        if (p.information > best) {
            best = p.information;
            best_angle = p.angle_deg;
        }
        EXPECT_LE(p.information, kholevo_bound(zero_plus()) + 1e-9);
    }
    // Helstrom measurement for two equiprobable pure states: success (1 + sqrt(1 - |<a|b>|^2)) / 2.
    const double overlap2 = 0.5;
    const double helstrom = 1.0 - oracle::binary_entropy((1.0 + std::sqrt(1.0 - overlap2)) / 2.0);
    EXPECT_NEAR(best, helstrom, 1e-9);
    EXPECT_NEAR(std::fmod(best_angle, 180.0), 135.0, 1e-9);
    EXPECT_THROW((void)accessible_information_sweep(zero_plus(), 0.0), Error);
}
