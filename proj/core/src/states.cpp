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

#include "qentropy/states.hpp"

#include <cmath>
#include <numbers>

#include "qentropy/error.hpp"
#include "qentropy/tolerances.hpp"

namespace qentropy {

PureState::PureState(SubsystemLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != static_cast<Eigen::Index>(layout_.total_dim())) {
        throw Error(ErrorCode::LayoutMismatch, "amplitude count does not match layout " + layout_.to_string());
    }
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > tol::kNormalization) {
        throw Error(ErrorCode::NotDensity, "state vector is not normalized");
    }
}

DensityOperator PureState::density() const {
    return DensityOperator(layout_, amplitudes_ * amplitudes_.adjoint());
}

PureState bell_state(BellState which, const LabelSet &labels) {
    const double h = std::numbers::sqrt2 / 2.0;
    Vector v = Vector::Zero(4);
    switch (which) {
        case BellState::PhiPlus:
            v(0) = h;
            v(3) = h;
            break;
        case BellState::PhiMinus:
            v(0) = h;
            v(3) = -h;
            break;
        case BellState::PsiPlus:
            v(1) = h;
            v(2) = h;
            break;
        case BellState::PsiMinus:
            v(1) = h;
            v(2) = -h;
            break;
    }
    return PureState(SubsystemLayout::qubits(labels), v);
}

PureState ghz_state(std::size_t n_parties) {
    if (n_parties < 2) {
        throw Error(ErrorCode::BadArity, "GHZ state needs at least 2 parties");
    }
    auto layout = SubsystemLayout::qubits(default_labels(n_parties));
    Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
    v(0) = std::numbers::sqrt2 / 2.0;
    v(v.size() - 1) = std::numbers::sqrt2 / 2.0;
    return PureState(std::move(layout), v);
}

DensityOperator werner_state(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::RangeError, "Werner parameter must lie in [0, 1]");
    }
    const auto singlet = bell_state(BellState::PsiMinus).amplitudes();
    const Matrix m = x * (singlet * singlet.adjoint()) + (1.0 - x) * 0.25 * Matrix::Identity(4, 4);
    return DensityOperator(SubsystemLayout::qubits({"A", "B"}), m);
}

PureState qubit_state(const std::string &name, const std::string &label) {
    const double h = std::numbers::sqrt2 / 2.0;
    Vector v(2);
    if (name == "zero" || name == "0") {
        v << 1.0, 0.0;
    } else if (name == "one" || name == "1") {
        v << 0.0, 1.0;
    } else if (name == "plus" || name == "+") {
        v << h, h;
    } else if (name == "minus" || name == "-") {
        v << h, -h;
    } else if (name == "plus-i" || name == "+i") {
        v << h, Complex(0.0, h);
    } else if (name == "minus-i" || name == "-i") {
        v << h, Complex(0.0, -h);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown qubit state '" + name + "'");
    }
    return PureState(SubsystemLayout({{label, 2}}), v);
}

PureState basis_state(const SubsystemLayout &layout, std::size_t index) {
    if (index >= layout.total_dim()) {
        throw Error(ErrorCode::RangeError, "basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return PureState(layout, v);
}

DensityOperator maximally_mixed(const SubsystemLayout &layout) {
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    return DensityOperator(layout, Matrix::Identity(n, n) / static_cast<double>(n));
}

DensityOperator classically_correlated(std::size_t n_parties) {
    if (n_parties < 2) {
        throw Error(ErrorCode::BadArity, "classical correlation needs at least 2 parties");
    }
    auto layout = SubsystemLayout::qubits(default_labels(n_parties));
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    Matrix m = Matrix::Zero(n, n);
    m(0, 0) = 0.5;
    m(n - 1, n - 1) = 0.5;
    return DensityOperator(std::move(layout), m);
}

void SeparableSpec::validate() const {
    if (weights.empty() || weights.size() != factors.size()) {
        throw Error(ErrorCode::InvalidArgument, "separable spec needs one weight per factor pair");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw Error(ErrorCode::InvalidArgument, "separable weights must be non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > tol::kTrace) {
        throw Error(ErrorCode::InvalidArgument, "separable weights must sum to 1");
    }
    const auto &la = factors.front().first.layout();
    const auto &lb = factors.front().second.layout();
    for (const auto &[a, b] : factors) {
        if (!(a.layout() == la) || !(b.layout() == lb)) {
            throw Error(ErrorCode::LayoutMismatch, "all separable factors must share the two layouts");
        }
    }
}

DensityOperator separable_mixture(const SeparableSpec &spec) {
    spec.validate();
    const auto layout = spec.factors.front().first.layout().concat(spec.factors.front().second.layout());
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t k = 0; k < spec.weights.size(); ++k) {
        m += spec.weights[k] * tensor_product(spec.factors[k].first.op(), spec.factors[k].second.op()).matrix();
    }
    return DensityOperator(layout, m);
}

DensityOperator random_density(const SubsystemLayout &layout, std::size_t rank, Rng &rng) {
    if (rank < 1 || rank > layout.total_dim()) {
        throw Error(ErrorCode::RankError, "rank must lie in [1, " + std::to_string(layout.total_dim()) + "]");
    }
    const Matrix g = ginibre(layout.total_dim(), rank, rng);
    Matrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityOperator(layout, (m + m.adjoint()) * 0.5);
}

DensityOperator random_density(const SubsystemLayout &layout, std::size_t rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(layout, rank, rng);
}

PureState random_pure_state(const SubsystemLayout &layout, Rng &rng) {
    return PureState(layout, random_unit_vector(layout.total_dim(), rng));
}

PureState random_pure_state(const SubsystemLayout &layout, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure_state(layout, rng);
}

UnitaryOperator random_unitary(const SubsystemLayout &layout, Rng &rng) {
    return UnitaryOperator(layout, haar_unitary(layout.total_dim(), rng));
}

RandomSeparable random_separable(const SubsystemLayout &layout_a, const SubsystemLayout &layout_b,
                                 std::size_t n_terms, Rng &rng) {
    if (n_terms < 1) {
        throw Error(ErrorCode::InvalidArgument, "a separable mixture needs at least one term");
    }
    SeparableSpec spec;
    spec.weights = flat_simplex(n_terms, rng);
    spec.factors.reserve(n_terms);
    for (std::size_t k = 0; k < n_terms; ++k) {
        auto a = random_pure_state(layout_a, rng).density();
        auto b = random_pure_state(layout_b, rng).density();
        spec.factors.emplace_back(std::move(a), std::move(b));
    }
    auto state = separable_mixture(spec);
    return {std::move(state), std::move(spec)};
}

RandomSeparable random_separable(const SubsystemLayout &layout_a, const SubsystemLayout &layout_b,
                                 std::size_t n_terms, std::uint64_t seed) {
    Rng rng(seed);
    return random_separable(layout_a, layout_b, n_terms, rng);
}

}  // namespace qentropy
