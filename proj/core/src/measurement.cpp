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

#include "qentropy/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qentropy/error.hpp"
#include "qentropy/tolerances.hpp"

namespace qentropy {

namespace {

Matrix shift_map(std::size_t dim, std::size_t by) {
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix v = Matrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        v((k + static_cast<Eigen::Index>(by)) % d, k) = 1.0;
    }
    return v;
}

}  // namespace

Observable::Observable(std::string label, Matrix basis)
    : Observable(std::move(label), basis, [&] {
          std::vector<std::size_t> ids(static_cast<std::size_t>(basis.cols()));
          for (std::size_t k = 0; k < ids.size(); ++k) {
              ids[k] = k;
          }
          return ids;
      }()) {
}

Observable::Observable(std::string label, Matrix basis, std::vector<std::size_t> outcome_of)
    : label_(std::move(label)), basis_(std::move(basis)), outcome_of_(std::move(outcome_of)) {
    if (basis_.rows() == 0 || basis_.rows() != basis_.cols()) {
        throw Error(ErrorCode::InvalidModel, "observable basis must be a non-empty square matrix");
    }
    if (unitarity_defect(basis_) > tol::kUnitarity) {
        throw Error(ErrorCode::InvalidModel, "observable basis is not orthonormal");
    }
    if (outcome_of_.size() != static_cast<std::size_t>(basis_.cols())) {
        throw Error(ErrorCode::InvalidModel, "need one outcome index per basis vector");
    }
    outcome_count_ = outcome_of_.empty() ? 0 : *std::max_element(outcome_of_.begin(), outcome_of_.end()) + 1;
    for (std::size_t a = 0; a < outcome_count_; ++a) {
        if (std::find(outcome_of_.begin(), outcome_of_.end(), a) == outcome_of_.end()) {
            throw Error(ErrorCode::InvalidModel, "outcome indices must be contiguous from 0");
        }
    }
}

Observable Observable::from_hermitian(std::string label, const Matrix &hermitian, double degeneracy) {
    const auto spec = spectral_decompose(hermitian);
    std::vector<std::size_t> ids(spec.eigenvalues.size());
    std::size_t outcome = 0;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        if (k > 0 && spec.eigenvalues[k - 1] - spec.eigenvalues[k] > degeneracy) {
            ++outcome;
        }
        ids[k] = outcome;
    }
    return Observable(std::move(label), spec.eigenvectors, std::move(ids));
}

Observable Observable::pauli(char axis) {
    const double h = std::numbers::sqrt2 / 2.0;
    Matrix b(2, 2);
    switch (axis) {
        case 'z':
            b << 1.0, 0.0, 0.0, 1.0;
            break;
        case 'x':
            b << h, h, h, -h;
            break;
        case 'y':
            b << h, h, Complex(0.0, h), Complex(0.0, -h);
            break;
        default:
            throw Error(ErrorCode::InvalidArgument, std::string("unknown Pauli axis '") + axis + "'");
    }
    return Observable(std::string("sigma_") + axis, b);
}

Observable Observable::qubit_axis(double theta, double phi, std::string label) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex e = std::polar(1.0, phi);
    Matrix b(2, 2);
    b << c, s, e * s, -e * c;
    if (label.empty()) {
        label = "axis";
    }
    return Observable(std::move(label), b);
}

Matrix Observable::projector(std::size_t outcome) const {
    if (outcome >= outcome_count_) {
        throw Error(ErrorCode::RangeError, "outcome index out of range");
    }
    const auto n = basis_.rows();
    Matrix p = Matrix::Zero(n, n);
    for (std::size_t k = 0; k < outcome_of_.size(); ++k) {
        if (outcome_of_[k] == outcome) {
            const auto col = basis_.col(static_cast<Eigen::Index>(k));
            p += col * col.adjoint();
        }
    }
    return p;
}

Matrix Observable::overlap(const Observable &second) const {
    if (second.dim() != dim()) {
        throw Error(ErrorCode::LayoutMismatch, "observables act on spaces of different dimension");
    }
    // (B^dagger A)_{ji} = <b_j|a_i>
    return (second.basis_.adjoint() * basis_).transpose();
}

MeasurementModel::MeasurementModel(Observable observable, std::size_t ancilla_dim)
    : observable_(std::move(observable)), ancilla_dim_(ancilla_dim == 0 ? observable_.outcome_count() : ancilla_dim) {
    if (ancilla_dim_ < observable_.outcome_count()) {
        throw Error(ErrorCode::InvalidModel, "ancilla has fewer levels than the observable has outcomes");
    }
    for (std::size_t a = 0; a < observable_.outcome_count(); ++a) {
        pointer_maps_.push_back(shift_map(ancilla_dim_, a));
    }
}

MeasurementModel::MeasurementModel(Observable observable, std::size_t ancilla_dim, std::vector<Matrix> pointer_maps)
    : observable_(std::move(observable)), ancilla_dim_(ancilla_dim), pointer_maps_(std::move(pointer_maps)) {
    if (ancilla_dim_ < observable_.outcome_count()) {
        throw Error(ErrorCode::InvalidModel, "ancilla has fewer levels than the observable has outcomes");
    }
    if (pointer_maps_.size() != observable_.outcome_count()) {
        throw Error(ErrorCode::InvalidModel, "need one pointer map per outcome");
    }
    const auto d = static_cast<Eigen::Index>(ancilla_dim_);
    Matrix pointers(d, static_cast<Eigen::Index>(pointer_maps_.size()));
    for (std::size_t a = 0; a < pointer_maps_.size(); ++a) {
        const auto &v = pointer_maps_[a];
        if (v.rows() != d || v.cols() != d || unitarity_defect(v) > tol::kUnitarity) {
            throw Error(ErrorCode::InvalidModel, "pointer map " + std::to_string(a) + " is not a unitary on the ancilla");
        }
        pointers.col(static_cast<Eigen::Index>(a)) = v.col(0);
    }
    if (unitarity_defect(pointers) > tol::kUnitarity) {
        throw Error(ErrorCode::InvalidModel, "pointer states V_a|0> are not orthonormal");
    }
}

UnitaryOperator measurement_unitary(const MeasurementModel &model, const std::string &system_label,
                                    const std::string &ancilla_label) {
    const SubsystemLayout layout({{system_label, model.observable().dim()}, {ancilla_label, model.ancilla_dim()}});
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    Matrix u = Matrix::Zero(n, n);
    for (std::size_t a = 0; a < model.observable().outcome_count(); ++a) {
        u += embed_local(model.observable().projector(a), layout, system_label) *
             embed_local(model.pointer_map(a), layout, ancilla_label);
    }
    return UnitaryOperator(layout, u);
}

ChainState::ChainState(DensityOperator initial)
    : state_(std::move(initial)), systems_(state_.layout().labels()), initial_entropy_(von_neumann_entropy(state_)) {
}

LabelSet ChainState::ancillae() const {
    LabelSet out;
    for (const auto &step : history_) {
        out.push_back(step.ancilla);
    }
    return out;
}

ChainState attach_ancilla(const ChainState &chain, const MeasurementModel &model, const std::string &target) {
    const std::string system = target.empty() ? chain.systems_.front() : target;
    if (std::find(chain.systems_.begin(), chain.systems_.end(), system) == chain.systems_.end()) {
        throw Error(ErrorCode::UnknownLabel, "'" + system + "' is not a measured system of this chain");
    }
    const auto &old_layout = chain.state_.layout();
    if (old_layout.dim_of(system) != model.observable().dim()) {
        throw Error(ErrorCode::LayoutMismatch, "observable dimension does not match system '" + system + "'");
    }
    std::string label;
    for (std::size_t k = chain.history_.size() + 1;; ++k) {
        label = "A" + std::to_string(k);
        if (!old_layout.contains(label)) {
            break;
        }
    }
    const SubsystemLayout ancilla({{label, model.ancilla_dim()}});
    const auto reference = basis_state(ancilla, 0).density();
    const auto extended = tensor_product(chain.state_, reference);
    const auto &layout = extended.layout();

    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    Matrix u = Matrix::Zero(n, n);
    for (std::size_t a = 0; a < model.observable().outcome_count(); ++a) {
        u += embed_local(model.observable().projector(a), layout, system) *
             embed_local(model.pointer_map(a), layout, label);
    }

    ChainState next = chain;
    next.state_ = evolve(extended, UnitaryOperator(layout, u));
    next.history_.push_back({label, system, model.observable().label()});
    return next;
}

AncillaStatistics ancilla_statistics(const ChainState &chain) {
    const auto ancillae = chain.ancillae();
    if (ancillae.empty()) {
        throw Error(ErrorCode::NoAncilla, "chain has no ancilla attached");
    }
    auto reduced = partial_trace(chain.state(), ancillae);
    std::vector<double> distribution(reduced.dim());
    for (std::size_t k = 0; k < distribution.size(); ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        distribution[k] = std::max(0.0, reduced.matrix()(i, i).real());
    }
    std::variant<BipartiteDiagram, TernaryDiagram> diagram =
        ancillae.size() == 1
            ? std::variant<BipartiteDiagram, TernaryDiagram>(
                  bipartite_diagram(chain.state(), chain.systems(), ancillae))
            : std::variant<BipartiteDiagram, TernaryDiagram>(ternary_diagram(
                  chain.state(), chain.systems(), {ancillae.front()}, LabelSet(ancillae.begin() + 1, ancillae.end())));
    return {std::move(reduced), diagram, std::move(distribution)};
}

ChainState sequential_measurement(const PureState &q, const Observable &first, const Observable &second) {
    ChainState chain(q.density());
    chain = attach_ancilla(chain, MeasurementModel(first));
    return attach_ancilla(chain, MeasurementModel(second));
}

UncertaintyCheck entropic_uncertainty_check(const PureState &q, const Observable &first, const Observable &second) {
    const auto chain = sequential_measurement(q, first, second);
    const MarginalEntropies s(chain.state());
    UncertaintyCheck out;
    out.lhs = s({"A1"}) + s({"A2"});

    const Matrix u = first.overlap(second);
    out.rhs = INFINITY;
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        std::vector<double> row(static_cast<std::size_t>(u.cols()));
        for (Eigen::Index j = 0; j < u.cols(); ++j) {
            row[static_cast<std::size_t>(j)] = std::norm(u(i, j));
        }
        out.rhs = std::min(out.rhs, entropy_of_spectrum(row));
    }
    out.holds = out.lhs >= out.rhs - 1e-9;
    return out;
}

EprReport epr_experiment(const Observable &first, const Observable &second) {
    const auto pair = bell_state(BellState::PhiPlus, {"Q1", "Q2"}).density();
    ChainState chain(pair);
    chain = attach_ancilla(chain, MeasurementModel(first), "Q1");
    chain = attach_ancilla(chain, MeasurementModel(second), "Q2");
    const auto &state = chain.state();

    EprReport r{bipartite_diagram(pair, {"Q1"}, {"Q2"}),
                partial_trace(state, {"A1", "A2"}),
                bipartite_diagram(state, {"A1"}, {"A2"}),
                ternary_diagram(state, {"Q1", "Q2"}, {"A1"}, {"A2"}),
                bipartite_diagram(state, {"Q1", "A1"}, {"Q2", "A2"}),
                von_neumann_entropy(state)};
    return r;
}

}  // namespace qentropy
