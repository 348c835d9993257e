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

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/render.hpp"
#include "cli/specs.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/kholevo.hpp"
#include "qentropy/measurement.hpp"
#include "qentropy/random.hpp"
#include "qentropy/separability.hpp"
#include "qentropy/states.hpp"

namespace qentropy::cli {

namespace {

// A property holds in a trial when its defect is at most the tolerance.
struct Property {
    std::string suite;
    std::string name;
    double tolerance = 0;
    std::size_t checked = 0;
    std::size_t failures = 0;
    double worst_defect = 0;
    std::optional<std::size_t> first_failure;

    void record(std::size_t trial, double defect) {
        ++checked;
        if (!std::isfinite(defect)) {
            defect = INFINITY;
        }
        worst_defect = std::max(worst_defect, defect);
        if (!(defect <= tolerance)) {
            ++failures;
            if (!first_failure) {
                first_failure = trial;
            }
        }
    }
};

class Suite {
   public:
    Suite(std::string name, std::vector<Property> &sink) : name_(std::move(name)), sink_(sink) {
    }

    Property &operator()(const std::string &property, double tolerance) {
        for (auto &p : sink_) {
            if (p.suite == name_ && p.name == property) {
                return p;
            }
        }
        Property p;
        p.suite = name_;
        p.name = property;
        p.tolerance = tolerance;
        sink_.push_back(std::move(p));
        return sink_.back();
    }

   private:
    std::string name_;
    std::vector<Property> &sink_;
};

SubsystemLayout layout_of(const std::vector<std::size_t> &dims) {
    const auto labels = default_labels(dims.size());
    std::vector<Subsystem> parts;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        parts.push_back({labels[i], dims[i]});
    }
    return SubsystemLayout(std::move(parts));
}

DensityOperator random_state(const SubsystemLayout &layout, Rng &rng) {
    const auto rank = 1 + rng.below(layout.total_dim());
    return random_density(layout, rank, rng);
}

double max_abs_diff(const BipartiteDiagram &x, const BipartiteDiagram &y) {
    return std::max({std::abs(x.s_a - y.s_a), std::abs(x.s_b - y.s_b), std::abs(x.s_ab - y.s_ab),
                     std::abs(x.s_a_given_b - y.s_a_given_b), std::abs(x.s_b_given_a - y.s_b_given_a),
                     std::abs(x.s_mutual - y.s_mutual)});
}

Observable random_observable(std::size_t dim, Rng &rng) {
    return Observable("random", haar_unitary(dim, rng));
}

void suite_inequalities(const Options &opt, std::vector<Property> &out) {
    Suite s("inequalities", out);
    const auto dims = parse_dims(opt.dims);
    const auto bi = layout_of(dims.size() >= 2 ? std::vector<std::size_t>(dims.begin(), dims.begin() + 2)
                                               : std::vector<std::size_t>{2, 2});
    const auto tri = layout_of(dims.size() == 3 ? dims : std::vector<std::size_t>{2, 2, 2});
    for (std::size_t t = 0; t < opt.trials; ++t) {
        Rng rng(opt.seed + t);
        const auto rho3 = random_state(tri, rng);
        s("strong subadditivity", 1e-9)
            .record(t, -std::min({conditional_mutual_entropy(rho3, {"A"}, {"B"}, {"C"}),
                                  conditional_mutual_entropy(rho3, {"A"}, {"C"}, {"B"}),
                                  conditional_mutual_entropy(rho3, {"B"}, {"C"}, {"A"})}));

        const auto rho = random_state(bi, rng);
        const auto d = bipartite_diagram(rho, {"A"}, {"B"});
        s("subadditivity", 1e-9).record(t, -d.s_mutual);
        s("Araki-Lieb", 1e-9).record(t, std::abs(d.s_a - d.s_b) - d.s_ab);
        s("mutual entropy <= 2 min(S(A), S(B))", 1e-9).record(t, d.s_mutual - 2.0 * std::min(d.s_a, d.s_b));
        s("|S(A|B)| <= S(A)", 1e-9).record(t, std::abs(d.s_a_given_b) - d.s_a);
        const double tr = conditional_entropy_trace(rho, {"B"}, opt.epsilon);
        s("trace form matches S(AB) - S(B)", 1e-5).record(t, std::abs(tr - d.s_a_given_b));
        if (d.s_a_given_b < -1e-6) {
            const auto spec = conditional_spectrum(rho, {"B"}, opt.epsilon);
            s("negative S(A|B) implies an eigenvalue above 1", 0.0)
                .record(t, spec.eigenvalues.front() > 1.0 ? 0.0 : 1.0 - spec.eigenvalues.front());
        }

        // Local unitaries leave every diagram entry unchanged.
        const auto ua = UnitaryOperator(bi.select({"A"}), haar_unitary(bi.dim_of("A"), rng));
        const auto ub = UnitaryOperator(bi.select({"B"}), haar_unitary(bi.dim_of("B"), rng));
        const auto moved = evolve(rho, tensor_product(ua, ub));
        s("local unitary invariance", 1e-9).record(t, max_abs_diff(d, bipartite_diagram(moved, {"A"}, {"B"})));

        // Classical (diagonal) states.
        const auto w = flat_simplex(bi.total_dim(), rng);
        Matrix diag = Matrix::Zero(bi.total_dim(), bi.total_dim());
        for (std::size_t i = 0; i < w.size(); ++i) {
            diag(i, i) = w[i];
        }
        const auto cd = bipartite_diagram(DensityOperator(bi, diag), {"A"}, {"B"});
        s("classical: S(A:B) <= min(S(A), S(B))", 1e-9).record(t, cd.s_mutual - std::min(cd.s_a, cd.s_b));
        s("classical: conditional entropies >= 0", 1e-9).record(t, -std::min(cd.s_a_given_b, cd.s_b_given_a));

        // Pure tripartite states have a vanishing centre and equal complementary entropies.
        const auto pure = random_pure_state(tri, rng).density();
        const auto pd = ternary_diagram(pure, {"A"}, {"B"}, {"C"});
        s("pure ABC: S(A:B:C) = 0", 1e-9).record(t, std::abs(pd.s_ternary));
        s("pure ABC: S(A) = S(BC)", 1e-9).record(t, std::abs(pd.s_a - pd.s_bc));
    }
}

void suite_chain_rules(const Options &opt, std::vector<Property> &out) {
    Suite s("chain-rules", out);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        Rng rng(opt.seed + t);
        const std::size_t n = 3 + rng.below(2);
        std::vector<std::size_t> dims(n, 2);
        const auto layout = layout_of(dims);
        const auto rho = random_state(layout, rng);
        std::vector<LabelSet> parts;
        for (const auto &l : layout.labels()) {
            parts.push_back({l});
        }
        const auto forward = verify_chain_rules(rho, parts);
        std::reverse(parts.begin(), parts.end());
        const auto backward = verify_chain_rules(rho, parts);
        s("entropy chain rule", 1e-9)
            .record(t, std::max(std::abs(forward.entropy_residual), std::abs(backward.entropy_residual)));
        s("mutual entropy chain rule", 1e-9)
            .record(t, std::max(std::abs(forward.mutual_residual), std::abs(backward.mutual_residual)));
        const auto d = ternary_diagram(rho, {"A"}, {"B"}, {"C"});
        s("ternary regions sum to S(ABC)", 1e-9)
            .record(t, std::abs(d.s_a_given_bc + d.s_b_given_ac + d.s_c_given_ab + d.s_ab_given_c + d.s_ac_given_b +
                                d.s_bc_given_a + d.s_ternary - d.s_abc));
    }
}

void suite_separability(const Options &opt, std::vector<Property> &out) {
    Suite s("separability-survey", out);
    const auto dims = parse_dims(opt.dims);
    if (dims.size() != 2) {
        throw UsageError("separability-survey needs --dims AxB");
    }
    const auto rep = random_separable_survey(opt.trials, dims[0], dims[1], opt.seed);
    auto from_count = [&](const std::string &name, std::size_t failures, double worst) {
        auto &p = s(name, 0.0);
        p.checked += rep.trials;
        p.failures += failures;
        p.worst_defect = std::max(p.worst_defect, worst);
        if (failures > 0 && !p.first_failure) {
            p.first_failure = rep.first_violation_trial;
        }
    };
    from_count("classicality (conditional eigenvalues <= 1)", rep.classicality_violations,
               std::max(0.0, rep.max_eigenvalue_observed - 1.0));
    from_count("conditional entropies >= 0", rep.negative_conditional_entropies,
               std::max(0.0, -rep.min_conditional_entropy));
    from_count("PPT", rep.ppt_violations, 0.0);

    const std::vector<double> grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 1.0};
    const auto th = locate_werner_thresholds(grid);
    auto &p = s("Werner thresholds at 1/3", 1e-4);
    p.record(0, std::max(std::abs(th.classicality - 1.0 / 3.0), std::abs(th.ppt - 1.0 / 3.0)));
}

void suite_measurement(const Options &opt, std::vector<Property> &out) {
    Suite s("measurement", out);
    const auto dims = parse_dims(opt.dims);
    const std::size_t d = dims.front();
    const SubsystemLayout q_layout({{"Q", d}});
    for (std::size_t t = 0; t < opt.trials; ++t) {
        Rng rng(opt.seed + t);
        const auto q = random_pure_state(q_layout, rng);
        const auto first = random_observable(d, rng);
        const auto second = random_observable(d, rng);

        // Born probabilities from the first ancilla.
        const auto chain1 = attach_ancilla(ChainState(q.density()), MeasurementModel(first));
        const auto stats = ancilla_statistics(chain1);
        double born = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const double p = std::norm(first.basis().col(static_cast<Eigen::Index>(i)).dot(q.amplitudes()));
            born = std::max(born, std::abs(p - stats.outcome_distribution[i]));
        }
        s("outcome statistics equal Born probabilities", 1e-10).record(t, born);

        // Repeating the same observable: the second record copies the first.
        const auto same = sequential_measurement(q, first, first);
        const MarginalEntropies ss(same.state());
        s("repeat measurement: S(A2|A1) = 0", 1e-9).record(t, std::abs(ss({"A1", "A2"}) - ss({"A1"})));
        s("global state stays pure", 1e-9).record(t, std::abs(ss({"Q", "A1", "A2"})));
        s("pure chain: S(Q:A1:A2) = 0", 1e-8)
            .record(t, std::abs(ternary_mutual_entropy(same.state(), {"Q"}, {"A1"}, {"A2"})));

        // Different observables: joint record statistics follow the projection postulate.
        const auto seq = sequential_measurement(q, first, second);
        const auto rec = partial_trace(seq.state(), {"A1", "A2"});
        const Matrix u = first.overlap(second);
        double joint = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const double pi = std::norm(first.basis().col(static_cast<Eigen::Index>(i)).dot(q.amplitudes()));
            for (std::size_t j = 0; j < d; ++j) {
                const double pij = pi * std::norm(u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
                const auto k = static_cast<Eigen::Index>(i * d + j);
                joint = std::max(joint, std::abs(pij - rec.matrix()(k, k).real()));
            }
        }
        s("sequential records match collapse statistics", 1e-10).record(t, joint);

        const auto check = entropic_uncertainty_check(q, first, second);
        s("entropic uncertainty", 1e-9).record(t, check.rhs - check.lhs);
    }
}

void suite_kholevo(const Options &opt, std::vector<Property> &out) {
    Suite s("kholevo", out);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        Rng rng(opt.seed + t);
        const std::size_t d = 2 + rng.below(2);
        const std::size_t n = 2 + rng.below(3);
        const SubsystemLayout q_layout({{"Q", d}});
        std::vector<DensityOperator> signals;
        for (std::size_t i = 0; i < n; ++i) {
            signals.push_back(random_state(q_layout, rng));
        }
        const PreparationEnsemble ens(ClassicalDistribution(flat_simplex(n, rng)), signals);
        const auto obs = random_observable(d, rng);
        const auto m = measure_ensemble(ens, MeasurementModel(obs));
        const auto &k = m.report;
        const double hx = shannon_entropy(ens.priors());
        s("I <= chi", 1e-9).record(t, k.accessible_info - k.chi);
        s("chi <= H(X)", 1e-9).record(t, k.chi - hx);
        s("chi = S(X:Q)", 1e-9).record(t, std::abs(k.chi - k.s_xq_mutual));
        s("chi = I + deficit", 1e-9).record(t, std::abs(k.decomposition_residual));
        s("classical information formula", 1e-9).record(t, std::abs(accessible_information(ens, obs) - k.accessible_info));
        s("conservation under the measurement", 1e-9).record(t, std::abs(k.conservation_residual));

        const auto u = haar_unitary(d * d, rng);
        s("conservation under random unitaries", 1e-9).record(t, std::abs(evolve_ensemble(ens, u, d).report.conservation_residual));

        const SubsystemLayout xy({{"X", d}, {"Y", d}});
        const auto rho = random_state(xy, rng);
        const auto cq = classical_vs_quantum_mutual(rho, haar_unitary(d, rng), haar_unitary(d, rng));
        s("H(X:Y) <= S(X:Y)", 1e-9).record(t, cq.h_classical - cq.s_quantum);
    }
}

Json property_json(const Property &p, std::uint64_t seed) {
    Json j;
    j["suite"] = p.suite;
    j["property"] = p.name;
    j["checked"] = p.checked;
    j["failures"] = p.failures;
    j["worst_defect"] = p.worst_defect;
    j["tolerance"] = p.tolerance;
    if (p.first_failure) {
        Json f;
        f["trial"] = *p.first_failure;
        f["seed"] = seed + *p.first_failure;
        j["first_failure"] = std::move(f);
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

}  // namespace

RunResult cmd_verify(const std::string &suite, const Options &opt) {
    RunResult r;
    r.command = "verify " + suite;
    r.inputs["suite"] = suite;
    r.inputs["seed"] = opt.seed;
    r.inputs["trials"] = opt.trials;
    r.inputs["dims"] = opt.dims;
    r.inputs["epsilon"] = opt.epsilon;

    using Runner = std::function<void(const Options &, std::vector<Property> &)>;
    const std::vector<std::pair<std::string, Runner>> suites = {
        {"inequalities", suite_inequalities},
        {"chain-rules", suite_chain_rules},
        {"separability-survey", suite_separability},
        {"measurement", suite_measurement},
        {"kholevo", suite_kholevo},
    };
    if (opt.trials == 0) {
        throw UsageError("--trials must be positive");
    }
    std::vector<Property> props;
    bool known = false;
    for (const auto &[name, run] : suites) {
        if (suite == "all" || suite == name) {
            known = true;
            run(opt, props);
        }
    }
    if (!known) {
        throw UsageError("unknown suite '" + suite +
                         "' (inequalities, chain-rules, separability-survey, measurement, kholevo, all)");
    }
    std::ostringstream text;
    text << "verify " << suite << "   seed " << opt.seed << "   trials " << opt.trials << "\n";
    Json list = Json::array();
    std::size_t failed = 0;
    std::string current;
    for (const auto &p : props) {
        list.push_back(property_json(p, opt.seed));
        if (p.suite != current) {
            current = p.suite;
            text << "\n[" << current << "]\n";
        }
        char line[256];
        std::snprintf(line, sizeof line, "  %-48s checked %6zu  violations: %zu  worst %.3g\n", p.name.c_str(),
                      p.checked, p.failures, p.worst_defect);
        text << line;
        if (p.failures > 0) {
            ++failed;
            text << "    first failure at trial " << *p.first_failure << "; reproduce with: qentropy verify "
                 << p.suite << " --seed " << opt.seed + *p.first_failure << " --trials 1\n";
        }
        r.verdicts[p.suite + ": " + p.name] = p.failures == 0 ? "pass" : "fail";
    }
    r.results["properties"] = std::move(list);
    r.results["failed_properties"] = failed;
    text << "\n" << (failed == 0 ? "all properties hold" : std::to_string(failed) + " propert" + (failed == 1 ? "y" : "ies") + " failed") << "\n";
    r.exit_code = failed == 0 ? kExitOk : kExitPropertyFailure;
    r.text = text.str();
    return r;
}

}  // namespace qentropy::cli
