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

#include "qentropy/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qentropy/error.hpp"
#include "qentropy/tolerances.hpp"

namespace qentropy {

namespace {

void require_square(const SubsystemLayout &layout, const Matrix &m) {
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    if (m.rows() != n || m.cols() != n) {
        std::ostringstream os;
        os << "matrix is " << m.rows() << "x" << m.cols() << " but layout " << layout.to_string()
           << " has dimension " << n;
        throw Error(ErrorCode::LayoutMismatch, os.str());
    }
}

// Per joint index: the digit tuple of every factor.
std::vector<std::vector<std::size_t>> digit_table(const SubsystemLayout &layout) {
    std::vector<std::vector<std::size_t>> table(layout.total_dim());
    for (std::size_t i = 0; i < table.size(); ++i) {
        table[i] = layout.digits(i);
    }
    return table;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix from_spectrum(const Matrix &vectors, const std::vector<double> &values) {
    Eigen::VectorXd d(static_cast<Eigen::Index>(values.size()));
    for (std::size_t k = 0; k < values.size(); ++k) {
        d(static_cast<Eigen::Index>(k)) = values[k];
    }
    return vectors * d.asDiagonal() * vectors.adjoint();
}

}  // namespace

double hermiticity_defect(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(SubsystemLayout layout, const Matrix &entries) : layout_(std::move(layout)) {
    require_square(layout_, entries);
    const double defect = entries.size() ? hermiticity_defect(entries) : 0.0;
    if (!(defect <= tol::kHermiticity)) {
        std::ostringstream os;
        os << "max |a_ij - conj(a_ji)| = " << defect << " exceeds " << tol::kHermiticity;
        throw Error(ErrorCode::NotHermitian, os.str());
    }
    entries_ = (entries + entries.adjoint()) * 0.5;
}

HermitianOperator HermitianOperator::identity(const SubsystemLayout &layout) {
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    return HermitianOperator(layout, Matrix::Identity(n, n));
}

HermitianOperator HermitianOperator::scaled(double factor) const {
    return HermitianOperator(layout_, entries_ * factor);
}

Matrix Spectrum::reconstruct() const {
    return from_spectrum(eigenvectors, eigenvalues);
}

DensityOperator::DensityOperator(HermitianOperator op) : op_(std::move(op)) {
    const double tr = op_.trace();
    if (std::abs(tr - 1.0) > tol::kTrace) {
        std::ostringstream os;
        os.precision(17);
        os << "trace " << tr << " differs from 1";
        throw Error(ErrorCode::NotDensity, os.str());
    }
    auto spec = spectral_decompose(op_);
    if (spec.min() < -tol::kNegativityClamp) {
        std::ostringstream os;
        os << "eigenvalue " << spec.min() << " is below the clamp tolerance " << -tol::kNegativityClamp;
        throw Error(ErrorCode::NotDensity, os.str());
    }
    if (spec.min() < 0.0) {
        for (auto &l : spec.eigenvalues) {
            l = std::max(l, 0.0);
        }
        op_ = HermitianOperator(op_.layout(), spec.reconstruct());
    }
    eigenvalues_ = std::move(spec.eigenvalues);
}

DensityOperator::DensityOperator(SubsystemLayout layout, const Matrix &entries)
    : DensityOperator(HermitianOperator(std::move(layout), entries)) {
}

DensityOperator DensityOperator::from_pure(const SubsystemLayout &layout, const Vector &amplitudes) {
    if (amplitudes.size() != static_cast<Eigen::Index>(layout.total_dim())) {
        throw Error(ErrorCode::LayoutMismatch, "amplitude vector length does not match layout " + layout.to_string());
    }
    if (std::abs(amplitudes.squaredNorm() - 1.0) > tol::kNormalization) {
        throw Error(ErrorCode::NotDensity, "amplitudes are not normalized");
    }
    return DensityOperator(layout, amplitudes * amplitudes.adjoint());
}

UnitaryOperator::UnitaryOperator(SubsystemLayout layout, const Matrix &entries) : layout_(std::move(layout)) {
    require_square(layout_, entries);
    const double defect = unitarity_defect(entries);
    if (!(defect <= tol::kUnitarity)) {
        std::ostringstream os;
        os << "max |(U^dagger U - 1)_ij| = " << defect;
        throw Error(ErrorCode::NotUnitary, os.str());
    }
    entries_ = entries;
}

UnitaryOperator UnitaryOperator::identity(const SubsystemLayout &layout) {
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    return UnitaryOperator(layout, Matrix::Identity(n, n));
}

HermitianOperator tensor_product(const HermitianOperator &a, const HermitianOperator &b) {
    auto layout = a.layout().concat(b.layout());
    return HermitianOperator(std::move(layout), kron(a.matrix(), b.matrix()));
}

DensityOperator tensor_product(const DensityOperator &a, const DensityOperator &b) {
    return DensityOperator(tensor_product(a.op(), b.op()));
}

UnitaryOperator tensor_product(const UnitaryOperator &a, const UnitaryOperator &b) {
    auto layout = a.layout().concat(b.layout());
    return UnitaryOperator(std::move(layout), kron(a.matrix(), b.matrix()));
}

HermitianOperator partial_trace(const HermitianOperator &op, const LabelSet &keep) {
    const auto &layout = op.layout();
    const auto kept = layout.select(keep);
    const auto traced = layout.select(layout.complement(keep));

    std::vector<bool> is_kept(layout.size());
    for (std::size_t k = 0; k < layout.size(); ++k) {
        is_kept[k] = kept.contains(layout.parts()[k].label);
    }
    // Split every joint index into its kept and traced sub-indices.
    const auto n = layout.total_dim();
    std::vector<std::size_t> kept_index(n), traced_index(n);
    std::vector<std::size_t> kd, td;
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = layout.digits(i);
        kd.clear();
        td.clear();
        for (std::size_t k = 0; k < d.size(); ++k) {
            (is_kept[k] ? kd : td).push_back(d[k]);
        }
        kept_index[i] = kept.compose(kd);
        traced_index[i] = traced.compose(td);
    }
    std::vector<std::vector<std::size_t>> groups(traced.total_dim());
    for (std::size_t i = 0; i < n; ++i) {
        groups[traced_index[i]].push_back(i);
    }

    const auto m = static_cast<Eigen::Index>(kept.total_dim());
    Matrix out = Matrix::Zero(m, m);
    const auto &in = op.matrix();
    for (const auto &g : groups) {
        for (auto i : g) {
            for (auto j : g) {
                out(static_cast<Eigen::Index>(kept_index[i]), static_cast<Eigen::Index>(kept_index[j])) +=
                    in(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return HermitianOperator(kept, out);
}

DensityOperator partial_trace(const DensityOperator &rho, const LabelSet &keep) {
    if (keep.empty()) {
        throw Error(ErrorCode::InvalidPartition, "partial trace needs at least one kept label");
    }
    return DensityOperator(partial_trace(rho.op(), keep));
}

HermitianOperator partial_transpose(const HermitianOperator &op, const std::string &part) {
    const auto &layout = op.layout();
    const auto k = layout.index_of(part);
    const auto table = digit_table(layout);
    const auto n = layout.total_dim();
    const auto &in = op.matrix();
    Matrix out(in.rows(), in.cols());
    std::vector<std::size_t> di, dj;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            di = table[i];
            dj = table[j];
            std::swap(di[k], dj[k]);
            out(static_cast<Eigen::Index>(layout.compose(di)), static_cast<Eigen::Index>(layout.compose(dj))) =
                in(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return HermitianOperator(layout, out);
}

HermitianOperator partial_transpose(const HermitianOperator &op, const LabelSet &parts) {
    HermitianOperator out = op;
    for (const auto &p : parts) {
        out = partial_transpose(out, p);
    }
    return out;
}

HermitianOperator reorder(const HermitianOperator &op, const SubsystemLayout &target) {
    const auto &source = op.layout();
    if (source.size() != target.size()) {
        throw Error(ErrorCode::LayoutMismatch, "cannot reorder " + source.to_string() + " into " + target.to_string());
    }
    std::vector<std::size_t> position(source.size());
    for (std::size_t k = 0; k < source.size(); ++k) {
        const auto &p = source.parts()[k];
        position[k] = target.index_of(p.label);
        if (target.parts()[position[k]].dim != p.dim) {
            throw Error(ErrorCode::LayoutMismatch, "dimension of '" + p.label + "' differs");
        }
    }
    if (source == target) {
        return op;
    }
    const auto n = source.total_dim();
    std::vector<std::size_t> map(n);
    std::vector<std::size_t> td(source.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = source.digits(i);
        for (std::size_t k = 0; k < d.size(); ++k) {
            td[position[k]] = d[k];
        }
        map[i] = target.compose(td);
    }
    const auto &in = op.matrix();
    Matrix out(in.rows(), in.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(map[j])) =
                in(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return HermitianOperator(target, out);
}

Spectrum spectral_decompose(const Matrix &hermitian) {
    const double defect = hermiticity_defect(hermitian);
    if (!(defect <= tol::kHermiticity)) {
        std::ostringstream os;
        os << "max |a_ij - conj(a_ji)| = " << defect << " exceeds " << tol::kHermiticity;
        throw Error(ErrorCode::NotHermitian, os.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::DomainError, "Hermitian eigensolver did not converge");
    }
    const auto n = hermitian.rows();
    Spectrum out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors.resize(n, n);
    // Eigen sorts ascending.
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
        out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    }
    return out;
}

Spectrum spectral_decompose(const HermitianOperator &op) {
    return spectral_decompose(op.matrix());
}

HermitianOperator matrix_function(const HermitianOperator &op, const std::function<double(double)> &f) {
    auto spec = spectral_decompose(op);
    for (auto &l : spec.eigenvalues) {
        const double v = f(l);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "function is not finite at eigenvalue " << l;
            throw Error(ErrorCode::DomainError, os.str());
        }
        l = v;
    }
    return HermitianOperator(op.layout(), spec.reconstruct());
}

namespace {

double clamp_or_throw(double l) {
    if (l < -tol::kNegativityClamp) {
        std::ostringstream os;
        os << "eigenvalue " << l << " is negative beyond the clamp tolerance";
        throw Error(ErrorCode::DomainError, os.str());
    }
    return std::max(l, 0.0);
}

}  // namespace

HermitianOperator matrix_log(const HermitianOperator &op) {
    return matrix_function(op, [](double l) { return std::log(clamp_or_throw(l)); });
}

HermitianOperator matrix_exp(const HermitianOperator &op) {
    return matrix_function(op, [](double l) { return std::exp(l); });
}

HermitianOperator matrix_power(const HermitianOperator &op, double p) {
    return matrix_function(op, [p](double l) {
        const double c = clamp_or_throw(l);
        if (c == 0.0 && p < 0.0) {
            return static_cast<double>(INFINITY);
        }
        return std::pow(c, p);
    });
}

HermitianOperator regularized_log(const HermitianOperator &op, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "regularization epsilon must be positive");
    }
    return matrix_function(op, [epsilon](double l) { return std::log(clamp_or_throw(l) + epsilon); });
}

HermitianOperator support_projector(const HermitianOperator &op, double threshold) {
    return matrix_function(op, [threshold](double l) { return l > threshold ? 1.0 : 0.0; });
}

Matrix embed_local(const Matrix &local, const SubsystemLayout &layout, const std::string &label) {
    const auto k = layout.index_of(label);
    const auto d = static_cast<Eigen::Index>(layout.parts()[k].dim);
    if (local.rows() != d || local.cols() != d) {
        throw Error(ErrorCode::LayoutMismatch, "local operator does not match dimension of '" + label + "'");
    }
    Eigen::Index left = 1, right = 1;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const auto di = static_cast<Eigen::Index>(layout.parts()[i].dim);
        if (i < k) {
            left *= di;
        } else if (i > k) {
            right *= di;
        }
    }
    return kron(kron(Matrix::Identity(left, left), local), Matrix::Identity(right, right));
}

DensityOperator evolve(const DensityOperator &rho, const UnitaryOperator &u) {
    if (!(rho.layout() == u.layout())) {
        throw Error(ErrorCode::LayoutMismatch,
                    "state layout " + rho.layout().to_string() + " differs from unitary layout " + u.layout().to_string());
    }
    const Matrix out = u.matrix() * rho.matrix() * u.matrix().adjoint();
    return DensityOperator(rho.layout(), (out + out.adjoint()) * 0.5);
}

}  // namespace qentropy
