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

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qentropy/layout.hpp"

namespace qentropy {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Hermitian matrix over a labeled multipartite space. Not necessarily
/// positive or unit-trace: conditional and mutual amplitude operators live here.
class HermitianOperator {
   public:
    /// Throws LayoutMismatch on a shape mismatch and NotHermitian when the max
    /// elementwise deviation from the adjoint exceeds tol::kHermiticity. The
    /// stored entries are the Hermitian part of `entries`.
    HermitianOperator(SubsystemLayout layout, const Matrix &entries);

    static HermitianOperator identity(const SubsystemLayout &layout);

    const SubsystemLayout &layout() const {
        return layout_;
    }
    const Matrix &matrix() const {
        return entries_;
    }
    std::size_t dim() const {
        return layout_.total_dim();
    }
    double trace() const {
        return entries_.trace().real();
    }

    HermitianOperator scaled(double factor) const;

   private:
    SubsystemLayout layout_;
    Matrix entries_;
};

/// Eigen-decomposition with eigenvalues in descending order; column k of
/// `eigenvectors` belongs to `eigenvalues[k]`.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;

    Matrix reconstruct() const;
    double min() const {
        return eigenvalues.back();
    }
    double max() const {
        return eigenvalues.front();
    }
};

/// Positive semidefinite, unit-trace Hermitian operator.
///
/// Construction checks the trace (tol::kTrace) and the spectrum: eigenvalues
/// in [-tol::kNegativityClamp, 0) are clamped to zero and the matrix rebuilt,
/// anything more negative throws NotDensity. The clamped spectrum is cached.
class DensityOperator {
   public:
    explicit DensityOperator(HermitianOperator op);
    DensityOperator(SubsystemLayout layout, const Matrix &entries);

    /// |psi><psi|; the amplitudes must have unit norm within tol::kNormalization.
    static DensityOperator from_pure(const SubsystemLayout &layout, const Vector &amplitudes);

    const HermitianOperator &op() const {
        return op_;
    }
    const SubsystemLayout &layout() const {
        return op_.layout();
    }
    const Matrix &matrix() const {
        return op_.matrix();
    }
    std::size_t dim() const {
        return op_.dim();
    }
    /// Clamped eigenvalues, descending.
    const std::vector<double> &eigenvalues() const {
        return eigenvalues_;
    }

   private:
    HermitianOperator op_;
    std::vector<double> eigenvalues_;
};

/// Unitary matrix over a labeled space (checked to tol::kUnitarity).
class UnitaryOperator {
   public:
    UnitaryOperator(SubsystemLayout layout, const Matrix &entries);

    static UnitaryOperator identity(const SubsystemLayout &layout);

    const SubsystemLayout &layout() const {
        return layout_;
    }
    const Matrix &matrix() const {
        return entries_;
    }

   private:
    SubsystemLayout layout_;
    Matrix entries_;
};

/// Kronecker product; layout is `a` then `b`. Throws DuplicateLabel.
HermitianOperator tensor_product(const HermitianOperator &a, const HermitianOperator &b);
DensityOperator tensor_product(const DensityOperator &a, const DensityOperator &b);
UnitaryOperator tensor_product(const UnitaryOperator &a, const UnitaryOperator &b);

/// Trace over every part not in `keep`; the result keeps original order.
HermitianOperator partial_trace(const HermitianOperator &op, const LabelSet &keep);
DensityOperator partial_trace(const DensityOperator &rho, const LabelSet &keep);

/// Transpose of the tensor factor `part` only.
HermitianOperator partial_transpose(const HermitianOperator &op, const std::string &part);
HermitianOperator partial_transpose(const HermitianOperator &op, const LabelSet &parts);

/// Same operator expressed with its tensor factors in `target` order. The
/// target must be a permutation of the operator's parts.
HermitianOperator reorder(const HermitianOperator &op, const SubsystemLayout &target);

/// Throws NotHermitian when the operator fails the hermiticity tolerance
/// (only reachable for raw matrices; see the Matrix overload).
Spectrum spectral_decompose(const HermitianOperator &op);
Spectrum spectral_decompose(const Matrix &hermitian);

/// V f(diag l) V^dagger. Throws DomainError when f is non-finite at some
/// eigenvalue.
HermitianOperator matrix_function(const HermitianOperator &op, const std::function<double(double)> &f);

/// Natural log. Eigenvalues must be positive after clamping.
HermitianOperator matrix_log(const HermitianOperator &op);
HermitianOperator matrix_exp(const HermitianOperator &op);
/// op^p; negative spectrum beyond the clamp throws, as does 0^p for p < 0.
HermitianOperator matrix_power(const HermitianOperator &op, double p);

/// ln(op + epsilon * 1) for positive semidefinite op.
HermitianOperator regularized_log(const HermitianOperator &op, double epsilon);

/// Projector onto eigenvectors with eigenvalue > threshold.
HermitianOperator support_projector(const HermitianOperator &op, double threshold);

/// Embed an operator acting on the single factor `label` into the full layout.
Matrix embed_local(const Matrix &local, const SubsystemLayout &layout, const std::string &label);

/// U rho U^dagger; layouts must match.
DensityOperator evolve(const DensityOperator &rho, const UnitaryOperator &u);

/// Max |a_ij - conj(a_ji)|.
double hermiticity_defect(const Matrix &m);
/// Max |(U^dagger U - 1)_ij|.
double unitarity_defect(const Matrix &m);

}  // namespace qentropy
