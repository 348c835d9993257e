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

// Every numeric tolerance used by the library lives here.
namespace qentropy::tol {

// Max absolute elementwise deviation from the conjugate transpose.
inline constexpr double kHermiticity = 1e-10;
inline constexpr double kTrace = 1e-10;
// Eigenvalues in [-kNegativityClamp, 0) are clamped to zero.
inline constexpr double kNegativityClamp = 1e-10;
// Frobenius-relative error of V diag(l) V^dagger against the input.
inline constexpr double kReconstruction = 1e-9;
inline constexpr double kUnitarity = 1e-10;
inline constexpr double kNormalization = 1e-10;
// Eigenvalues above this belong to the support of an operator.
inline constexpr double kSupport = 1e-10;
// Eigenvalues within kSpectralNoise * dim * max|eigenvalue| of zero are
// rounding noise from the decomposition and are treated as exact zeros
// before a state is regularized.
inline constexpr double kSpectralNoise = 16 * 2.220446049250313e-16;

// Eigenvalues of a conditional amplitude operator above this are non-classical.
inline constexpr double kClassicalityThreshold = 1.0 + 1e-9;
// Partial-transpose eigenvalues below -kPpt flag entanglement.
inline constexpr double kPpt = 1e-9;

inline constexpr double kDefaultEpsilon = 1e-12;
inline constexpr double kStabilityEpsilon = 1e-10;
inline constexpr double kStabilityAgreement = 1e-6;

}  // namespace qentropy::tol
