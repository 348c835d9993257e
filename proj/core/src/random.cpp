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

#include "qentropy/random.hpp"

#include <cmath>
#include <numbers>

#include "qentropy/error.hpp"

namespace qentropy {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::exponential() {
    return -std::log(1.0 - uniform());
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "below(0)");
    }
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
}

Matrix ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
    Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            g(i, j) = rng.complex_normal();
        }
    }
    return g;
}

Vector random_unit_vector(std::size_t dim, Rng &rng) {
    Vector v = ginibre(dim, 1, rng).col(0);
    return v / v.norm();
}

Matrix haar_unitary(std::size_t dim, Rng &rng) {
    const Matrix g = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const Complex d = r(k, k);
        const double a = std::abs(d);
        if (a > 0.0) {
            q.col(k) *= d / a;
        }
    }
    return q;
}

std::vector<double> flat_simplex(std::size_t n, Rng &rng) {
    std::vector<double> w(n);
    double total = 0.0;
    for (auto &x : w) {
        x = rng.exponential();
        total += x;
    }
    for (auto &x : w) {
        x /= total;
    }
    return w;
}

}  // namespace qentropy
