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
#include <variant>
#include <vector>

#include "qentropy/entropy.hpp"
#include "qentropy/hermitian.hpp"
#include "qentropy/states.hpp"

namespace qentropy {

/// Projective observable: an orthonormal eigenbasis with each basis vector
/// assigned to an outcome. Degenerate eigenvalues share one outcome, so the
/// outcome projectors can have rank above one.
class Observable {
   public:
    /// Non-degenerate: basis column k is outcome k.
    Observable(std::string label, Matrix basis);
    /// outcome_of[k] is the outcome of basis column k; outcomes must be 0..m-1.
    Observable(std::string label, Matrix basis, std::vector<std::size_t> outcome_of);

    /// Eigenbasis of a Hermitian matrix; eigenvalues closer than
    /// `degeneracy` are merged into one outcome.
    static Observable from_hermitian(std::string label, const Matrix &hermitian, double degeneracy = 1e-9);
    /// Pauli observable on a qubit: axis is 'x', 'y' or 'z'. Outcome 0 is the
    /// +1 eigenvector (|0> for z).
    static Observable pauli(char axis);
    /// Spin along the unit vector (sin t cos p, sin t sin p, cos t).
    static Observable qubit_axis(double theta, double phi = 0.0, std::string label = "");

    const std::string &label() const {
        return label_;
    }
    const Matrix &basis() const {
        return basis_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(basis_.rows());
    }
    std::size_t outcome_count() const {
        return outcome_count_;
    }
    const std::vector<std::size_t> &outcome_of() const {
        return outcome_of_;
    }
    /// P_alpha as a dim x dim matrix.
    Matrix projector(std::size_t outcome) const;
    /// U_ij = <b_j | a_i> with a = this basis, b = `second`'s basis.
    Matrix overlap(const Observable &second) const;

   private:
    std::string label_;
    Matrix basis_;
    std::vector<std::size_t> outcome_of_;
    std::size_t outcome_count_ = 0;
};

/// Von Neumann measurement U = sum_a P_a (x) V_a with V_a|0> = |a>.
class MeasurementModel {
   public:
    /// Pointer maps are modular shifts |k> -> |k + a mod d>. ancilla_dim 0
    /// means one level per outcome. Throws InvalidModel if ancilla_dim is
    /// smaller than the outcome count.
    explicit MeasurementModel(Observable observable, std::size_t ancilla_dim = 0);
    /// Explicit pointer unitaries, one per outcome, with orthonormal V_a|0>.
    MeasurementModel(Observable observable, std::size_t ancilla_dim, std::vector<Matrix> pointer_maps);

    const Observable &observable() const {
        return observable_;
    }
    std::size_t ancilla_dim() const {
        return ancilla_dim_;
    }
    const Matrix &pointer_map(std::size_t outcome) const {
        return pointer_maps_.at(outcome);
    }

   private:
    Observable observable_;
    std::size_t ancilla_dim_;
    std::vector<Matrix> pointer_maps_;
};

/// U on the two-part layout (system_label, ancilla_label).
UnitaryOperator measurement_unitary(const MeasurementModel &model, const std::string &system_label = "Q",
                                    const std::string &ancilla_label = "A");

struct ChainStep {
    std::string ancilla;
    std::string system;
    std::string observable;
};

/// A measured system together with every ancilla attached so far.
class ChainState {
   public:
    explicit ChainState(DensityOperator initial);

    const DensityOperator &state() const {
        return state_;
    }
    const std::vector<ChainStep> &history() const {
        return history_;
    }
    const LabelSet &systems() const {
        return systems_;
    }
    LabelSet ancillae() const;
    double initial_entropy() const {
        return initial_entropy_;
    }

   private:
    friend ChainState attach_ancilla(const ChainState &, const MeasurementModel &, const std::string &);

    DensityOperator state_;
    LabelSet systems_;
    std::vector<ChainStep> history_;
    double initial_entropy_ = 0;
};

/// Adds a fresh ancilla A<k> at |0> and applies the measurement unitary to
/// (target, ancilla). An empty target means the first system.
ChainState attach_ancilla(const ChainState &chain, const MeasurementModel &model, const std::string &target = "");

struct AncillaStatistics {
    DensityOperator ancilla_state;
    /// Bipartite (systems | A1) for one ancilla, ternary (systems, A1,
    /// remaining ancillae) otherwise.
    std::variant<BipartiteDiagram, TernaryDiagram> diagram;
    /// Diagonal of the ancilla register: joint outcome probabilities.
    std::vector<double> outcome_distribution;
};

/// Throws NoAncilla on a chain without ancillae.
AncillaStatistics ancilla_statistics(const ChainState &chain);

/// Measures `first`, then `second`, on the pure state q (ancillae A1, A2).
ChainState sequential_measurement(const PureState &q, const Observable &first, const Observable &second);

struct UncertaintyCheck {
    double lhs = 0;  // S(A1) + S(A2)
    double rhs = 0;  // min_i H[|U_ij|^2]
    bool holds = true;
};

UncertaintyCheck entropic_uncertainty_check(const PureState &q, const Observable &first, const Observable &second);

struct EprReport {
    BipartiteDiagram pre_measurement;  // Q1 | Q2
    DensityOperator ancilla_state;     // rho_{A1 A2}
    BipartiteDiagram ancillae;         // A1 | A2
    TernaryDiagram joint;              // Q1Q2, A1, A2
    BipartiteDiagram sides;            // Q1A1 | Q2A2
    double global_entropy = 0;
};

/// Measures the two halves of (|00> + |11>)/sqrt(2) with their own ancilla.
EprReport epr_experiment(const Observable &first, const Observable &second);

}  // namespace qentropy
