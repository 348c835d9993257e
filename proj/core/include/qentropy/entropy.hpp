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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qentropy/hermitian.hpp"
#include "qentropy/tolerances.hpp"

// All entropies are in bits. Amplitude operators are built from natural logs
// and exponentials, where the base cancels.
//
// Label-set arguments name parts of the state's layout. Unless stated
// otherwise the sets must be non-empty and pairwise disjoint but need not cover
// the layout; uncovered parts are traced out.

namespace qentropy {

class ClassicalDistribution {
   public:
    /// Throws InvalidArgument unless all entries are >= 0 and sum to 1
    /// within tol::kTrace.
    explicit ClassicalDistribution(std::vector<double> probabilities);

    const std::vector<double> &probabilities() const {
        return p_;
    }
    std::size_t size() const {
        return p_.size();
    }

   private:
    std::vector<double> p_;
};

double shannon_entropy(const ClassicalDistribution &p);
/// -sum l log2 l with 0 log 0 = 0; negative entries are treated as 0.
double entropy_of_spectrum(std::span<const double> values);
double von_neumann_entropy(const DensityOperator &rho);

/// Caching evaluator of marginal entropies S(T) for label sets T of one state.
/// The empty set has entropy 0.
class MarginalEntropies {
   public:
    explicit MarginalEntropies(DensityOperator rho);

    double operator()(const LabelSet &labels) const;
    const DensityOperator &state() const {
        return rho_;
    }

   private:
    DensityOperator rho_;
    mutable std::map<std::string, double> cache_;
};

/// Conditional amplitude operator rho_{A|B} with B = `given` and A the rest:
/// exp(ln(rho_AB + eps) - ln(1_A (x) rho_B + eps)), the closed form of the
/// infinite product limit.
HermitianOperator conditional_amplitude_operator(const DensityOperator &rho, const LabelSet &given,
                                                 double epsilon = tol::kDefaultEpsilon);

/// Mutual amplitude operator rho_{A:B} restricted to supp(rho_AB): the
/// log difference ln(rho_A (x) rho_B + eps) - ln(rho_AB + eps) is compressed
/// by the support projector before exponentiating. `a` and `b` must
/// partition the layout.
HermitianOperator mutual_amplitude_operator(const DensityOperator &rho, const LabelSet &a, const LabelSet &b,
                                            double epsilon = tol::kDefaultEpsilon);

/// Finite-n symmetrized approximant [s^{-1/2n} r^{1/n} s^{-1/2n}]^n with
/// r = rho_AB + eps and s = 1_A (x) rho_B + eps. n must be a power of two.
HermitianOperator trotter_approximant(const DensityOperator &rho, const LabelSet &given, int n,
                                      double epsilon = tol::kDefaultEpsilon);

/// Eigenvalues of rho_{A|B} at two regularizations. `stable` is false when
/// they disagree by tol::kStabilityAgreement or more.
struct StableSpectrum {
    std::vector<double> eigenvalues;
    double disagreement = 0.0;
    bool stable = true;
};
StableSpectrum conditional_spectrum(const DensityOperator &rho, const LabelSet &given,
                                    double epsilon = tol::kDefaultEpsilon,
                                    double check_epsilon = tol::kStabilityEpsilon);

/// Number of eigenvalues of `op` above `threshold`.
std::size_t nonclassical_eigenvalue_count(const HermitianOperator &op,
                                          double threshold = tol::kClassicalityThreshold);

/// S(rest | given) = S(all) - S(given), on the full layout.
double conditional_entropy(const DensityOperator &rho, const LabelSet &given);
/// S(A|B) as -Tr[rho log2 rho_{A|B}] from the regularized operator.
double conditional_entropy_trace(const DensityOperator &rho, const LabelSet &given,
                                 double epsilon = tol::kDefaultEpsilon);

/// S(A:B) = S(A) + S(B) - S(AB).
double mutual_entropy(const DensityOperator &rho, const LabelSet &a, const LabelSet &b);
/// S(A:B) as -Tr[rho log2 rho_{A:B}]; `a` and `b` partition the layout.
double mutual_entropy_trace(const DensityOperator &rho, const LabelSet &a, const LabelSet &b,
                            double epsilon = tol::kDefaultEpsilon);

/// S(A:B|C) = S(AC) + S(BC) - S(C) - S(ABC).
double conditional_mutual_entropy(const DensityOperator &rho, const LabelSet &a, const LabelSet &b,
                                  const LabelSet &c);
/// S(A:B:C) = S(A:B) - S(A:B|C).
double ternary_mutual_entropy(const DensityOperator &rho, const LabelSet &a, const LabelSet &b,
                              const LabelSet &c);
/// Inclusion-exclusion sum over non-empty subsets T of the parts,
/// (-1)^{|T|+1} S(T). Two parts give S(A:B). Needs at least two parts.
double multiway_mutual_entropy(const DensityOperator &rho, const std::vector<LabelSet> &parts);

struct BipartiteDiagram {
    double s_a = 0, s_b = 0, s_ab = 0;
    double s_a_given_b = 0, s_b_given_a = 0, s_mutual = 0;
};

/// Venn entries of a three-part system, plus every marginal.
struct TernaryDiagram {
    double s_a = 0, s_b = 0, s_c = 0;
    double s_ab = 0, s_ac = 0, s_bc = 0, s_abc = 0;
    double s_a_given_bc = 0, s_b_given_ac = 0, s_c_given_ab = 0;
    double s_ab_given_c = 0;  // S(A:B|C)
    double s_ac_given_b = 0;  // S(A:C|B)
    double s_bc_given_a = 0;  // S(B:C|A)
    double s_ternary = 0;     // S(A:B:C)
};

BipartiteDiagram bipartite_diagram(const DensityOperator &rho, const LabelSet &a, const LabelSet &b);
TernaryDiagram ternary_diagram(const DensityOperator &rho, const LabelSet &a, const LabelSet &b,
                               const LabelSet &c);

struct ChainRuleReport {
    /// S(A1), S(A2|A1), S(A3|A1A2), ...
    std::vector<double> entropy_terms;
    /// S(A1:B), S(A2:B|A1), ... with B the last part.
    std::vector<double> mutual_terms;
    double entropy_residual = 0;
    double mutual_residual = 0;
};

/// Chain rules over an ordered partition with at least two parts.
ChainRuleReport verify_chain_rules(const DensityOperator &rho, const std::vector<LabelSet> &ordered_parts);

/// Throws UnknownLabel / InvalidPartition / OverlappingParts.
void validate_parts(const SubsystemLayout &layout, const std::vector<LabelSet> &parts, bool must_cover);

}  // namespace qentropy
