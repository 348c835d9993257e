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
#include <string>
#include <utility>
#include <vector>

#include "qentropy/hermitian.hpp"
#include "qentropy/random.hpp"

namespace qentropy {

/// Unit vector over a labeled space.
class PureState {
   public:
    /// Throws LayoutMismatch on a length mismatch, NotDensity when the squared
    /// norm is off by more than tol::kNormalization.
    PureState(SubsystemLayout layout, Vector amplitudes);

    const SubsystemLayout &layout() const {
        return layout_;
    }
    const Vector &amplitudes() const {
        return amplitudes_;
    }
    DensityOperator density() const;

   private:
    SubsystemLayout layout_;
    Vector amplitudes_;
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Two-qubit Bell state on parts "A", "B" (or the given labels).
PureState bell_state(BellState which, const LabelSet &labels = {"A", "B"});

/// (|0...0> + |1...1>)/sqrt(2) on qubits A, B, C, ...; throws BadArity for n < 2.
PureState ghz_state(std::size_t n_parties);

/// x |Psi-><Psi-| + (1 - x) 1/4 on qubits A, B; throws RangeError outside [0, 1].
DensityOperator werner_state(double x);

/// Single-qubit state by name: zero, one, plus, minus, plus-i, minus-i.
/// Throws InvalidArgument for an unknown name.
PureState qubit_state(const std::string &name, const std::string &label = "Q");

/// Computational basis vector |index>.
PureState basis_state(const SubsystemLayout &layout, std::size_t index);

DensityOperator maximally_mixed(const SubsystemLayout &layout);

/// (|0..0><0..0| + |1..1><1..1|)/2 on n qubits: classical perfect correlation.
DensityOperator classically_correlated(std::size_t n_parties);

/// Construction record of a separable state sum_k w_k rho_A^(k) (x) rho_B^(k).
struct SeparableSpec {
    std::vector<double> weights;
    std::vector<std::pair<DensityOperator, DensityOperator>> factors;

    /// Throws InvalidArgument or LayoutMismatch when the invariants fail.
    void validate() const;
};

DensityOperator separable_mixture(const SeparableSpec &spec);

/// G G^dagger / Tr(G G^dagger) with G a total_dim x rank Ginibre matrix.
/// Throws RankError unless 1 <= rank <= total_dim.
DensityOperator random_density(const SubsystemLayout &layout, std::size_t rank, std::uint64_t seed);
DensityOperator random_density(const SubsystemLayout &layout, std::size_t rank, Rng &rng);

PureState random_pure_state(const SubsystemLayout &layout, std::uint64_t seed);
PureState random_pure_state(const SubsystemLayout &layout, Rng &rng);

UnitaryOperator random_unitary(const SubsystemLayout &layout, Rng &rng);

struct RandomSeparable {
    DensityOperator state;
    SeparableSpec spec;
};

/// Flat-simplex mixture of n_terms random pure product states.
RandomSeparable random_separable(const SubsystemLayout &layout_a, const SubsystemLayout &layout_b,
                                 std::size_t n_terms, std::uint64_t seed);
RandomSeparable random_separable(const SubsystemLayout &layout_a, const SubsystemLayout &layout_b,
                                 std::size_t n_terms, Rng &rng);

}  // namespace qentropy
