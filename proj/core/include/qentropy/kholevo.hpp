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

#include <vector>

#include "qentropy/entropy.hpp"
#include "qentropy/hermitian.hpp"
#include "qentropy/measurement.hpp"

namespace qentropy {

/// Preparer distribution p_i with signal states rho_i on a common space Q.
/// The preparer register X uses its computational basis as |x_i>.
class PreparationEnsemble {
   public:
    /// Throws LayoutMismatch when the signal count differs from the prior
    /// count or the signals do not share one dimension.
    PreparationEnsemble(ClassicalDistribution priors, std::vector<DensityOperator> signals);

    const ClassicalDistribution &priors() const {
        return priors_;
    }
    const std::vector<DensityOperator> &signals() const {
        return signals_;
    }
    std::size_t size() const {
        return signals_.size();
    }
    std::size_t signal_dim() const {
        return signals_.front().dim();
    }
    /// sum_i p_i rho_i on a single part "Q".
    DensityOperator average_state() const;

   private:
    ClassicalDistribution priors_;
    std::vector<DensityOperator> signals_;
};

/// rho_XQ = sum_i p_i |x_i><x_i| (x) rho_i on layout X, Q.
DensityOperator joint_preparer_state(const PreparationEnsemble &ensemble);

/// chi = S(sum p_i rho_i) - sum p_i S(rho_i).
double kholevo_bound(const PreparationEnsemble &ensemble);

struct KholevoReport {
    double chi = 0;                    // Kholevo bound from the signal entropies
    double s_xq_mutual = 0;            // S(X:Q) before measurement
    double accessible_info = 0;        // S(X':A')
    double deficit = 0;                // S(X':Q'|A')
    double conservation_residual = 0;  // S(X':Q'A') - S(X:Q)
    double decomposition_residual = 0; // chi - deficit - accessible_info
};

struct MeasuredEnsemble {
    DensityOperator joint;             // rho_{X'Q'A'}
    DensityOperator preparer_ancilla;  // rho_{X'A'}
    KholevoReport report;
};

/// Couples Q to a fresh ancilla at |0> with the measurement unitary and
/// evaluates every entropy of the post-measurement state.
MeasuredEnsemble measure_ensemble(const PreparationEnsemble &ensemble, const MeasurementModel &model);

/// Same bookkeeping for an arbitrary unitary on Q (x) A.
MeasuredEnsemble evolve_ensemble(const PreparationEnsemble &ensemble, const Matrix &u_qa, std::size_t ancilla_dim);

/// Shannon mutual information between preparer and outcome,
/// H[Tr(P_a rho)] - sum_i p_i H[Tr(P_a rho_i)].
double accessible_information(const PreparationEnsemble &ensemble, const Observable &observable);

/// p_{a|i} = Tr(P_a rho_i), one row per signal.
std::vector<std::vector<double>> outcome_table(const PreparationEnsemble &ensemble, const Observable &observable);

struct ClassicalQuantumMutual {
    double h_classical = 0;  // Shannon mutual entropy of <x,y|rho|x,y>
    double s_quantum = 0;    // S(X:Y)
};

/// `rho_xy` has exactly two parts; the bases are unitary matrices whose
/// columns are |x> and |y>.
ClassicalQuantumMutual classical_vs_quantum_mutual(const DensityOperator &rho_xy, const Matrix &basis_x,
                                                   const Matrix &basis_y);

struct SweepPoint {
    double angle_deg = 0;
    double information = 0;
};

/// Accessible information for qubit measurements along axes in the x-z
/// plane, angle from the z axis in [0, 180).
std::vector<SweepPoint> accessible_information_sweep(const PreparationEnsemble &ensemble, double step_deg = 1.0);

}  // namespace qentropy
