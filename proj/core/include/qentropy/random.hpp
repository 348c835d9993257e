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
#include <random>
#include <vector>

#include "qentropy/hermitian.hpp"

namespace qentropy {

/// Seeded generator. The 64-bit Mersenne Twister sequence is fixed by the
/// standard; the transforms on top of it are written out here so a seed
/// yields the same variates with any standard library.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal (Box-Muller, one variate per call).
    double normal();
    /// Exponential with unit rate.
    double exponential();
    /// Real and imaginary parts independent standard normals.
    Complex complex_normal();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

   private:
    std::mt19937_64 engine_;
};

/// rows x cols matrix of independent standard complex Gaussians.
Matrix ginibre(std::size_t rows, std::size_t cols, Rng &rng);
/// Normalized Gaussian vector (unitarily invariant distribution).
Vector random_unit_vector(std::size_t dim, Rng &rng);
/// Haar-distributed unitary matrix (QR of a Ginibre matrix with phase fix).
Matrix haar_unitary(std::size_t dim, Rng &rng);
/// Uniform point on the probability simplex via normalized exponentials.
std::vector<double> flat_simplex(std::size_t n, Rng &rng);

}  // namespace qentropy
