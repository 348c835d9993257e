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

#include "qentropy/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "qentropy/error.hpp"

namespace qentropy {

namespace {

constexpr double kLn2 = std::numbers::ln2;

HermitianOperator difference(const HermitianOperator &a, const HermitianOperator &b) {
    return HermitianOperator(a.layout(), a.matrix() - b.matrix());
}

// f(l + epsilon) on the spectrum of a state-like operator. The regulator is
// far below the rounding noise of a rank-deficient spectrum, so eigenvalues
// within that noise of zero are taken as exact zeros in the same
// decomposition (a reconstruct/re-decompose round trip would bring the noise
// back).
HermitianOperator regularized_state_function(const HermitianOperator &a, double epsilon,
                                             const std::function<double(double)> &f) {
    if (!(epsilon > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "regularization epsilon must be positive");
    }
    auto spec = spectral_decompose(a);
    const double scale = std::max(std::abs(spec.max()), std::abs(spec.min()));
    const double floor = tol::kSpectralNoise * static_cast<double>(a.dim()) * scale;
    for (auto &l : spec.eigenvalues) {
        if (l < -tol::kNegativityClamp) {
            throw Error(ErrorCode::DomainError, "state has a negative eigenvalue beyond the clamp tolerance");
        }
        const double v = f((l < floor ? 0.0 : l) + epsilon);
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::DomainError, "regularized function is not finite");
        }
        l = v;
    }
    return HermitianOperator(a.layout(), spec.reconstruct());
}

HermitianOperator state_log(const HermitianOperator &a, double epsilon) {
    return regularized_state_function(a, epsilon, [](double x) { return std::log(x); });
}

HermitianOperator state_power(const HermitianOperator &a, double epsilon, double p) {
    return regularized_state_function(a, epsilon, [p](double x) { return std::pow(x, p); });
}

/// 1_rest (x) rho_given, expressed in the layout of rho.
HermitianOperator identity_times_marginal(const DensityOperator &rho, const LabelSet &given) {
    const auto &layout = rho.layout();
    const auto rest = layout.select(layout.complement(given));
    const auto marginal = partial_trace(rho.op(), given);
    return reorder(tensor_product(HermitianOperator::identity(rest), marginal), layout);
}

void validate_given(const SubsystemLayout &layout, const LabelSet &given) {
    validate_parts(layout, {given}, false);
    if (given.size() >= layout.size()) {
        throw Error(ErrorCode::InvalidPartition, "conditioning set must be a proper subset of the layout");
    }
}

double trace_product(const Matrix &a, const Matrix &b) {
    // Tr(AB) for Hermitian A, B.
    return (a.transpose().cwiseProduct(b)).sum().real();
}

LabelSet unite(const LabelSet &a, const LabelSet &b) {
    LabelSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

void validate_parts(const SubsystemLayout &layout, const std::vector<LabelSet> &parts, bool must_cover) {
    std::vector<std::string> seen;
    for (const auto &part : parts) {
        if (part.empty()) {
            throw Error(ErrorCode::InvalidPartition, "empty part");
        }
        for (const auto &label : part) {
            layout.index_of(label);
            if (std::find(seen.begin(), seen.end(), label) != seen.end()) {
                throw Error(ErrorCode::OverlappingParts, "label '" + label + "' appears in more than one part");
            }
            seen.push_back(label);
        }
    }
    if (must_cover && seen.size() != layout.size()) {
        throw Error(ErrorCode::InvalidPartition, "parts do not cover layout " + layout.to_string());
    }
}

ClassicalDistribution::ClassicalDistribution(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    double total = 0.0;
    for (double p : p_) {
        if (!(p >= 0.0)) {
            throw Error(ErrorCode::InvalidArgument, "probabilities must be non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > tol::kTrace) {
        throw Error(ErrorCode::InvalidArgument, "probabilities must sum to 1");
    }
}

double entropy_of_spectrum(std::span<const double> values) {
    double h = 0.0;
    for (double v : values) {
        if (v > 0.0) {
            h -= v * std::log2(v);
        }
    }
    return h;
}

double shannon_entropy(const ClassicalDistribution &p) {
    return entropy_of_spectrum(p.probabilities());
}

double von_neumann_entropy(const DensityOperator &rho) {
    return entropy_of_spectrum(rho.eigenvalues());
}

MarginalEntropies::MarginalEntropies(DensityOperator rho) : rho_(std::move(rho)) {
}

double MarginalEntropies::operator()(const LabelSet &labels) const {
    if (labels.empty()) {
        return 0.0;
    }
    const auto &layout = rho_.layout();
    // Canonical key: labels in layout order.
    std::string key;
    for (const auto &l : layout.select(labels).labels()) {
        key += l;
        key += '\x1f';
    }
    if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    const double s = labels.size() == layout.size() ? von_neumann_entropy(rho_)
                                                    : von_neumann_entropy(partial_trace(rho_, labels));
    cache_.emplace(std::move(key), s);
    return s;
}

HermitianOperator conditional_amplitude_operator(const DensityOperator &rho, const LabelSet &given, double epsilon) {
    validate_given(rho.layout(), given);
    const auto sigma = identity_times_marginal(rho, given);
    const auto exponent = difference(state_log(rho.op(), epsilon), state_log(sigma, epsilon));
    return matrix_exp(exponent);
}

HermitianOperator mutual_amplitude_operator(const DensityOperator &rho, const LabelSet &a, const LabelSet &b,
                                            double epsilon) {
    validate_parts(rho.layout(), {a, b}, true);
    const auto rho_a = partial_trace(rho.op(), a);
    const auto rho_b = partial_trace(rho.op(), b);
    const auto product = reorder(tensor_product(rho_a, rho_b), rho.layout());
    const auto exponent = difference(state_log(product, epsilon), state_log(rho.op(), epsilon));
    const auto support = support_projector(rho.op(), tol::kSupport);
    const Matrix compressed = support.matrix() * exponent.matrix() * support.matrix();
    return matrix_exp(HermitianOperator(rho.layout(), compressed));
}

HermitianOperator trotter_approximant(const DensityOperator &rho, const LabelSet &given, int n, double epsilon) {
    validate_given(rho.layout(), given);
    if (n < 1 || (n & (n - 1)) != 0) {
        throw Error(ErrorCode::InvalidArgument, "Trotter order must be a power of two");
    }
    const auto outer = state_power(identity_times_marginal(rho, given), epsilon, -1.0 / (2.0 * n));
    const auto inner = state_power(rho.op(), epsilon, 1.0 / n);
    const Matrix step = outer.matrix() * inner.matrix() * outer.matrix();
    const HermitianOperator step_op(rho.layout(), (step + step.adjoint()) * 0.5);
    return matrix_power(step_op, static_cast<double>(n));
}

StableSpectrum conditional_spectrum(const DensityOperator &rho, const LabelSet &given, double epsilon,
                                    double check_epsilon) {
    const auto primary = spectral_decompose(conditional_amplitude_operator(rho, given, epsilon)).eigenvalues;
    const auto check = spectral_decompose(conditional_amplitude_operator(rho, given, check_epsilon)).eigenvalues;
    StableSpectrum out;
    for (std::size_t k = 0; k < primary.size(); ++k) {
        out.disagreement = std::max(out.disagreement, std::abs(primary[k] - check[k]));
    }
    out.stable = out.disagreement < tol::kStabilityAgreement;
    out.eigenvalues = primary;
    return out;
}

std::size_t nonclassical_eigenvalue_count(const HermitianOperator &op, double threshold) {
    const auto spec = spectral_decompose(op);
    return static_cast<std::size_t>(
        std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(), [&](double l) { return l > threshold; }));
}

double conditional_entropy(const DensityOperator &rho, const LabelSet &given) {
    validate_given(rho.layout(), given);
    return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, given));
}

double conditional_entropy_trace(const DensityOperator &rho, const LabelSet &given, double epsilon) {
    const auto op = conditional_amplitude_operator(rho, given, epsilon);
    // Eigenvalues of op can be as small as ~epsilon^2; the floor only guards
    // exact zeros, where rho has no weight.
    const auto log_op = regularized_log(op, std::numeric_limits<double>::min());
    return -trace_product(rho.matrix(), log_op.matrix()) / kLn2;
}

double mutual_entropy(const DensityOperator &rho, const LabelSet &a, const LabelSet &b) {
    validate_parts(rho.layout(), {a, b}, false);
    const MarginalEntropies s(rho);
    return s(a) + s(b) - s(unite(a, b));
}

double mutual_entropy_trace(const DensityOperator &rho, const LabelSet &a, const LabelSet &b, double epsilon) {
    const auto op = mutual_amplitude_operator(rho, a, b, epsilon);
    return -trace_product(rho.matrix(), matrix_log(op).matrix()) / kLn2;
}

double conditional_mutual_entropy(const DensityOperator &rho, const LabelSet &a, const LabelSet &b,
                                  const LabelSet &c) {
    validate_parts(rho.layout(), {a, b, c}, false);
    const MarginalEntropies s(rho);
    return s(unite(a, c)) + s(unite(b, c)) - s(c) - s(unite(unite(a, b), c));
}

double ternary_mutual_entropy(const DensityOperator &rho, const LabelSet &a, const LabelSet &b, const LabelSet &c) {
    validate_parts(rho.layout(), {a, b, c}, false);
    const MarginalEntropies s(rho);
    const auto ab = unite(a, b);
    const auto ac = unite(a, c);
    const auto bc = unite(b, c);
    return s(a) + s(b) + s(c) - s(ab) - s(ac) - s(bc) + s(unite(ab, c));
}

double multiway_mutual_entropy(const DensityOperator &rho, const std::vector<LabelSet> &parts) {
    if (parts.size() < 2) {
        throw Error(ErrorCode::BadArity, "multiway mutual entropy needs at least two parts");
    }
    if (parts.size() > 20) {
        throw Error(ErrorCode::BadArity, "too many parts");
    }
    validate_parts(rho.layout(), parts, false);
    const MarginalEntropies s(rho);
    double total = 0.0;
    const std::size_t n = parts.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        LabelSet set;
        int count = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (std::size_t{1} << k)) {
                set = unite(set, parts[k]);
                ++count;
            }
        }
        total += (count % 2 == 1 ? 1.0 : -1.0) * s(set);
    }
    return total;
}

BipartiteDiagram bipartite_diagram(const DensityOperator &rho, const LabelSet &a, const LabelSet &b) {
    validate_parts(rho.layout(), {a, b}, false);
    const MarginalEntropies s(rho);
    BipartiteDiagram d;
    d.s_a = s(a);
    d.s_b = s(b);
    d.s_ab = s(unite(a, b));
    d.s_a_given_b = d.s_ab - d.s_b;
    d.s_b_given_a = d.s_ab - d.s_a;
    d.s_mutual = d.s_a + d.s_b - d.s_ab;
    return d;
}

TernaryDiagram ternary_diagram(const DensityOperator &rho, const LabelSet &a, const LabelSet &b, const LabelSet &c) {
    validate_parts(rho.layout(), {a, b, c}, false);
    const MarginalEntropies s(rho);
    TernaryDiagram d;
    d.s_a = s(a);
    d.s_b = s(b);
    d.s_c = s(c);
    d.s_ab = s(unite(a, b));
    d.s_ac = s(unite(a, c));
    d.s_bc = s(unite(b, c));
    d.s_abc = s(unite(unite(a, b), c));
    d.s_a_given_bc = d.s_abc - d.s_bc;
    d.s_b_given_ac = d.s_abc - d.s_ac;
    d.s_c_given_ab = d.s_abc - d.s_ab;
    d.s_ab_given_c = d.s_ac + d.s_bc - d.s_c - d.s_abc;
    d.s_ac_given_b = d.s_ab + d.s_bc - d.s_b - d.s_abc;
    d.s_bc_given_a = d.s_ab + d.s_ac - d.s_a - d.s_abc;
    d.s_ternary = d.s_a + d.s_b + d.s_c - d.s_ab - d.s_ac - d.s_bc + d.s_abc;
    return d;
}

ChainRuleReport verify_chain_rules(const DensityOperator &rho, const std::vector<LabelSet> &ordered_parts) {
    if (ordered_parts.size() < 2) {
        throw Error(ErrorCode::BadArity, "chain rules need at least two parts");
    }
    validate_parts(rho.layout(), ordered_parts, false);
    const MarginalEntropies s(rho);
    ChainRuleReport report;

    // S(A1...An) = S(A1) + S(A2|A1) + ...
    LabelSet prefix;
    double sum = 0.0;
    for (const auto &part : ordered_parts) {
        const auto extended = unite(prefix, part);
        const double term = s(extended) - s(prefix);
        report.entropy_terms.push_back(term);
        sum += term;
        prefix = extended;
    }
    report.entropy_residual = s(prefix) - sum;

    // S(A1...Am : B) = S(A1:B) + S(A2:B|A1) + ..., B the last part.
    const auto &b = ordered_parts.back();
    prefix.clear();
    sum = 0.0;
    for (std::size_t k = 0; k + 1 < ordered_parts.size(); ++k) {
        const auto &ak = ordered_parts[k];
        const double term = s(unite(ak, prefix)) + s(unite(b, prefix)) - s(prefix) - s(unite(unite(ak, b), prefix));
        report.mutual_terms.push_back(term);
        sum += term;
        prefix = unite(prefix, ak);
    }
    const double lhs = s(prefix) + s(b) - s(unite(prefix, b));
    report.mutual_residual = lhs - sum;
    return report;
}

}  // namespace qentropy
