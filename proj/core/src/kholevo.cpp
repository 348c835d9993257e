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

#include "qentropy/kholevo.hpp"

#include <cmath>
#include <numbers>

#include "qentropy/error.hpp"
#include "qentropy/tolerances.hpp"

namespace qentropy {

namespace {

SubsystemLayout signal_layout(std::size_t dim) {
    return SubsystemLayout({{"Q", dim}});
}

Matrix block_diagonal_joint(const PreparationEnsemble &ensemble) {
    const auto n = static_cast<Eigen::Index>(ensemble.size());
    const auto d = static_cast<Eigen::Index>(ensemble.signal_dim());
    Matrix m = Matrix::Zero(n * d, n * d);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        m.block(i * d, i * d, d, d) = ensemble.priors().probabilities()[k] * ensemble.signals()[k].matrix();
    }
    return m;
}

KholevoReport evaluate(const PreparationEnsemble &ensemble, const DensityOperator &joint) {
    const MarginalEntropies s(joint);
    KholevoReport r;
    r.chi = kholevo_bound(ensemble);
    r.s_xq_mutual = mutual_entropy(joint_preparer_state(ensemble), {"X"}, {"Q"});
    r.accessible_info = s({"X"}) + s({"A"}) - s({"X", "A"});
    r.deficit = s({"X", "A"}) + s({"Q", "A"}) - s({"A"}) - s({"X", "Q", "A"});
    const double conserved = s({"X"}) + s({"Q", "A"}) - s({"X", "Q", "A"});
    r.conservation_residual = conserved - r.s_xq_mutual;
    r.decomposition_residual = r.chi - r.deficit - r.accessible_info;
    return r;
}

}  // namespace

PreparationEnsemble::PreparationEnsemble(ClassicalDistribution priors, std::vector<DensityOperator> signals)
    : priors_(std::move(priors)), signals_(std::move(signals)) {
    if (signals_.empty() || signals_.size() != priors_.size()) {
        throw Error(ErrorCode::LayoutMismatch, "ensemble needs exactly one signal per prior");
    }
    for (const auto &s : signals_) {
        if (s.dim() != signals_.front().dim()) {
            throw Error(ErrorCode::LayoutMismatch, "ensemble signals must share one dimension");
        }
    }
}

DensityOperator PreparationEnsemble::average_state() const {
    const auto d = static_cast<Eigen::Index>(signal_dim());
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < size(); ++i) {
        m += priors_.probabilities()[i] * signals_[i].matrix();
    }
    return DensityOperator(signal_layout(signal_dim()), m);
}

DensityOperator joint_preparer_state(const PreparationEnsemble &ensemble) {
    const SubsystemLayout layout({{"X", ensemble.size()}, {"Q", ensemble.signal_dim()}});
    return DensityOperator(layout, block_diagonal_joint(ensemble));
}

double kholevo_bound(const PreparationEnsemble &ensemble) {
    double mixed = 0.0;
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        mixed += ensemble.priors().probabilities()[i] * von_neumann_entropy(ensemble.signals()[i]);
    }
    return von_neumann_entropy(ensemble.average_state()) - mixed;
}

MeasuredEnsemble evolve_ensemble(const PreparationEnsemble &ensemble, const Matrix &u_qa, std::size_t ancilla_dim) {
    const auto xq = joint_preparer_state(ensemble);
    const SubsystemLayout ancilla({{"A", ancilla_dim}});
    const auto before = tensor_product(xq, basis_state(ancilla, 0).density());

    const auto nx = static_cast<Eigen::Index>(ensemble.size());
    if (u_qa.rows() != static_cast<Eigen::Index>(ensemble.signal_dim() * ancilla_dim)) {
        throw Error(ErrorCode::LayoutMismatch, "unitary does not act on Q (x) A");
    }
    Matrix u = Matrix::Zero(before.dim(), before.dim());
    for (Eigen::Index i = 0; i < nx; ++i) {
        u.block(i * u_qa.rows(), i * u_qa.rows(), u_qa.rows(), u_qa.cols()) = u_qa;
    }
    auto after = evolve(before, UnitaryOperator(before.layout(), u));
    auto xa = partial_trace(after, {"X", "A"});
    auto report = evaluate(ensemble, after);
    return {std::move(after), std::move(xa), report};
}

MeasuredEnsemble measure_ensemble(const PreparationEnsemble &ensemble, const MeasurementModel &model) {
    if (model.observable().dim() != ensemble.signal_dim()) {
        throw Error(ErrorCode::LayoutMismatch, "measurement does not act on the signal space");
    }
    const auto u = measurement_unitary(model, "Q", "A");
    return evolve_ensemble(ensemble, u.matrix(), model.ancilla_dim());
}

std::vector<std::vector<double>> outcome_table(const PreparationEnsemble &ensemble, const Observable &observable) {
    if (observable.dim() != ensemble.signal_dim()) {
        throw Error(ErrorCode::LayoutMismatch, "observable does not act on the signal space");
    }
    std::vector<std::vector<double>> table(ensemble.size(), std::vector<double>(observable.outcome_count()));
    for (std::size_t a = 0; a < observable.outcome_count(); ++a) {
        const Matrix p = observable.projector(a);
        for (std::size_t i = 0; i < ensemble.size(); ++i) {
            table[i][a] = std::max(0.0, (p * ensemble.signals()[i].matrix()).trace().real());
        }
    }
    return table;
}

double accessible_information(const PreparationEnsemble &ensemble, const Observable &observable) {
    const auto table = outcome_table(ensemble, observable);
    const auto &p = ensemble.priors().probabilities();
    std::vector<double> marginal(observable.outcome_count(), 0.0);
    double conditional = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t a = 0; a < marginal.size(); ++a) {
            marginal[a] += p[i] * table[i][a];
        }
        conditional += p[i] * entropy_of_spectrum(table[i]);
    }
    return entropy_of_spectrum(marginal) - conditional;
}

ClassicalQuantumMutual classical_vs_quantum_mutual(const DensityOperator &rho_xy, const Matrix &basis_x,
                                                   const Matrix &basis_y) {
    const auto &layout = rho_xy.layout();
    if (layout.size() != 2) {
        throw Error(ErrorCode::InvalidPartition, "classical vs quantum comparison needs a bipartite state");
    }
    const auto dx = static_cast<Eigen::Index>(layout.parts()[0].dim);
    const auto dy = static_cast<Eigen::Index>(layout.parts()[1].dim);
    if (basis_x.rows() != dx || basis_x.cols() != dx || basis_y.rows() != dy || basis_y.cols() != dy) {
        throw Error(ErrorCode::LayoutMismatch, "bases do not match the part dimensions");
    }
    if (unitarity_defect(basis_x) > tol::kUnitarity || unitarity_defect(basis_y) > tol::kUnitarity) {
        throw Error(ErrorCode::InvalidArgument, "measurement bases must be orthonormal");
    }
    std::vector<double> joint(static_cast<std::size_t>(dx * dy));
    std::vector<double> px(static_cast<std::size_t>(dx), 0.0), py(static_cast<std::size_t>(dy), 0.0);
    for (Eigen::Index x = 0; x < dx; ++x) {
        for (Eigen::Index y = 0; y < dy; ++y) {
            Vector v(dx * dy);
            for (Eigen::Index i = 0; i < dx; ++i) {
                v.segment(i * dy, dy) = basis_x(i, x) * basis_y.col(y);
            }
            const double p = std::max(0.0, (v.adjoint() * rho_xy.matrix() * v)(0, 0).real());
            joint[static_cast<std::size_t>(x * dy + y)] = p;
            px[static_cast<std::size_t>(x)] += p;
            py[static_cast<std::size_t>(y)] += p;
        }
    }
    const auto labels = layout.labels();
    return {entropy_of_spectrum(px) + entropy_of_spectrum(py) - entropy_of_spectrum(joint),
            mutual_entropy(rho_xy, {labels[0]}, {labels[1]})};
}

std::vector<SweepPoint> accessible_information_sweep(const PreparationEnsemble &ensemble, double step_deg) {
    if (ensemble.signal_dim() != 2) {
        throw Error(ErrorCode::LayoutMismatch, "angle sweep is defined for qubit ensembles");
    }
    if (!(step_deg > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "sweep step must be positive");
    }
    std::vector<SweepPoint> points;
    for (int k = 0;; ++k) {
        const double deg = k * step_deg;
        if (deg >= 180.0) {
            break;
        }
        const auto obs = Observable::qubit_axis(deg * std::numbers::pi / 180.0);
        points.push_back({deg, accessible_information(ensemble, obs)});
    }
    return points;
}

}  // namespace qentropy
