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

#include "cli/commands.hpp"

#include <cmath>
#include <sstream>

#include "cli/ensemble_file.hpp"
#include "cli/render.hpp"
#include "cli/specs.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/kholevo.hpp"
#include "qentropy/measurement.hpp"
#include "qentropy/separability.hpp"
#include "qentropy/states.hpp"

namespace qentropy::cli {

namespace {

struct PreparedState {
    DensityOperator rho;
    std::vector<LabelSet> parts;
    LabelSet traced;  // labels removed by --trace-out or by an incomplete split
};

Json labels_json(const LabelSet &labels) {
    Json j = Json::array();
    for (const auto &l : labels) {
        j.push_back(l);
    }
    return j;
}

Json parts_json(const std::vector<LabelSet> &parts) {
    Json j = Json::array();
    for (const auto &p : parts) {
        j.push_back(labels_json(p));
    }
    return j;
}

std::string layout_text(const SubsystemLayout &layout) {
    std::string s;
    for (const auto &p : layout.parts()) {
        s += (s.empty() ? "" : " ") + p.label + "(" + std::to_string(p.dim) + ")";
    }
    return s;
}

std::string values_text(const std::vector<double> &values) {
    std::string s;
    for (double v : values) {
        s += (s.empty() ? "" : " ") + fixed6(v);
    }
    return s;
}

PreparedState prepare(const Options &opt, std::size_t min_parts, std::size_t max_parts) {
    if (opt.state.empty()) {
        throw UsageError("--state is required");
    }
    auto rho = build_state(parse_state_spec(opt.state));
    LabelSet traced;
    if (!opt.trace_out.empty()) {
        const auto drop = parse_label_list(opt.trace_out, rho.layout());
        const auto keep = rho.layout().complement(drop);
        if (keep.empty()) {
            throw UsageError("--trace-out removes every subsystem");
        }
        traced = drop;
        rho = partial_trace(rho, keep);
    }
    std::vector<LabelSet> parts;
    if (opt.split.empty()) {
        const auto n = rho.layout().size();
        if (n < min_parts || n > max_parts) {
            throw UsageError("state has " + std::to_string(n) + " subsystems; give --split");
        }
        for (const auto &l : rho.layout().labels()) {
            parts.push_back({l});
        }
    } else {
        parts = parse_split(opt.split, rho.layout());
    }
    if (parts.size() < min_parts || parts.size() > max_parts) {
        throw UsageError("split '" + opt.split + "' has " + std::to_string(parts.size()) + " parts, expected " +
                         (min_parts == max_parts ? std::to_string(min_parts)
                                                 : std::to_string(min_parts) + " or " + std::to_string(max_parts)));
    }
    const auto used = join_labels(parts);
    if (used.size() != rho.layout().size()) {
        for (const auto &l : rho.layout().complement(used)) {
            traced.push_back(l);
        }
        rho = partial_trace(rho, used);
    }
    return {std::move(rho), std::move(parts), std::move(traced)};
}

void echo_state_inputs(RunResult &r, const Options &opt) {
    r.inputs["state"] = opt.state;
    r.inputs["split"] = opt.split;
    r.inputs["trace_out"] = opt.trace_out;
    r.inputs["epsilon"] = opt.epsilon;
}

Json pass(bool ok) {
    return ok ? "pass" : "fail";
}

std::vector<double> ancilla_distribution(const DensityOperator &rho, const std::string &label) {
    const auto reduced = partial_trace(rho, {label});
    std::vector<double> p;
    for (Eigen::Index i = 0; i < reduced.matrix().rows(); ++i) {
        p.push_back(std::max(0.0, reduced.matrix()(i, i).real()));
    }
    return p;
}

PureState require_pure(const DensityOperator &rho) {
    if (rho.eigenvalues().front() < 1.0 - 1e-9) {
        throw UsageError("this scenario needs a pure state");
    }
    const auto spec = spectral_decompose(rho.op());
    return PureState(rho.layout(), spec.eigenvectors.col(0));
}

}  // namespace

RunResult cmd_diagram(const Options &opt) {
    RunResult r;
    r.command = "diagram";
    echo_state_inputs(r, opt);
    const auto prep = prepare(opt, 2, 3);
    const auto &rho = prep.rho;
    const auto &parts = prep.parts;

    std::ostringstream text;
    text << "state " << opt.state << "   layout " << layout_text(rho.layout());
    if (!prep.traced.empty()) {
        text << "   traced out " << part_name(prep.traced);
    }
    text << "\n\n";
    r.results["parts"] = parts_json(parts);
    r.results["traced_out"] = labels_json(prep.traced);

    if (parts.size() == 2) {
        const auto &a = parts[0];
        const auto &b = parts[1];
        const auto d = bipartite_diagram(rho, a, b);
        const auto ab = conditional_spectrum(rho, b, opt.epsilon);
        const auto ba = conditional_spectrum(rho, a, opt.epsilon);
        const auto mutual = spectral_decompose(mutual_amplitude_operator(rho, a, b, opt.epsilon)).eigenvalues;
        const double trace_ab = conditional_entropy_trace(rho, b, opt.epsilon);
        const double trace_ba = conditional_entropy_trace(rho, a, opt.epsilon);
        const double trace_mutual = mutual_entropy_trace(rho, a, b, opt.epsilon);

        r.results["diagram"] = to_json(d);
        r.results["conditional_spectrum_a_given_b"] = to_json(ab.eigenvalues);
        r.results["conditional_spectrum_b_given_a"] = to_json(ba.eigenvalues);
        r.results["mutual_spectrum"] = to_json(mutual);
        r.results["spectrum_disagreement"] = std::max(ab.disagreement, ba.disagreement);
        Json tr;
        tr["S(A|B)"] = trace_ab;
        tr["S(B|A)"] = trace_ba;
        tr["S(A:B)"] = trace_mutual;
        r.results["trace_form"] = tr;

        const bool stable = ab.stable && ba.stable;
        const bool agrees = std::abs(trace_ab - d.s_a_given_b) < 1e-5 && std::abs(trace_ba - d.s_b_given_a) < 1e-5 &&
                            std::abs(trace_mutual - d.s_mutual) < 1e-5;
        r.verdicts["spectrum_stable"] = pass(stable);
        r.verdicts["trace_form_agrees"] = pass(agrees);

        const auto na = part_name(a);
        const auto nb = part_name(b);
        text << render_bipartite(d, na, nb) << "\n";
        text << "spectrum of rho_{" << na << "|" << nb << "}: " << values_text(ab.eigenvalues) << "\n";
        text << "spectrum of rho_{" << nb << "|" << na << "}: " << values_text(ba.eigenvalues) << "\n";
        text << "spectrum of rho_{" << na << ":" << nb << "}: " << values_text(mutual) << "\n";
        if (!stable) {
            text << "warning: conditional spectrum depends on the regulator (disagreement "
                 << r.results["spectrum_disagreement"].get<double>() << ")\n";
        }
        if (!agrees) {
            r.exit_code = kExitPropertyFailure;
        }
    } else {
        const auto d = ternary_diagram(rho, parts[0], parts[1], parts[2]);
        r.results["diagram"] = to_json(d);
        text << render_ternary(d, part_name(parts[0]), part_name(parts[1]), part_name(parts[2]));
    }
    r.text = text.str();
    return r;
}

RunResult cmd_separability(const Options &opt) {
    RunResult r;
    r.command = "separability";
    echo_state_inputs(r, opt);
    const auto prep = prepare(opt, 2, 2);
    const auto &a = prep.parts[0];
    const auto &b = prep.parts[1];
    const auto rep = conditional_spectrum_test(prep.rho, a, b, opt.epsilon);
    const auto spec_ab = conditional_spectrum(prep.rho, b, opt.epsilon);

    r.results["parts"] = parts_json(prep.parts);
    r.results["report"] = to_json(rep);
    r.results["conditional_spectrum_a_given_b"] = to_json(spec_ab.eigenvalues);
    r.verdicts["classicality"] = pass(rep.classicality_passes);
    r.verdicts["conditional_entropy_nonnegative"] = pass(rep.conditional_entropy_nonnegative);
    r.verdicts["ppt"] = pass(rep.ppt_passes);
    r.verdicts["spectrum_stable"] = pass(rep.spectrum_stable);

    const auto na = part_name(a);
    const auto nb = part_name(b);
    auto verdict = [](bool ok) { return ok ? "passes" : "fails (entangled)"; };
    std::ostringstream text;
    text << "state " << opt.state << "   layout " << layout_text(prep.rho.layout()) << "\n";
    text << "max eigenvalue of rho_{" << na << "|" << nb << "}: " << fixed6(rep.max_conditional_eigenvalue_ab) << "\n";
    text << "max eigenvalue of rho_{" << nb << "|" << na << "}: " << fixed6(rep.max_conditional_eigenvalue_ba) << "\n";
    text << "S(" << na << "|" << nb << ") = " << bits(rep.s_a_given_b) << "   S(" << nb << "|" << na
         << ") = " << bits(rep.s_b_given_a) << "\n";
    text << "min eigenvalue of partial transpose: " << fixed6(rep.ppt_min_eigenvalue) << "\n";
    text << "classicality test (eigenvalues <= 1): " << verdict(rep.classicality_passes) << "\n";
    text << "conditional entropies >= 0: " << verdict(rep.conditional_entropy_nonnegative) << "\n";
    text << "PPT test: " << verdict(rep.ppt_passes) << "\n";
    if (!rep.spectrum_stable) {
        text << "warning: conditional spectrum depends on the regulator\n";
    }
    r.text = text.str();
    return r;
}

namespace {

RunResult measure_chain(const Options &opt, RunResult r) {
    const auto rho = build_state(parse_state_spec(opt.state.empty() ? "plus" : opt.state));
    const auto obs_list = split_list(opt.obs.empty() ? "z" : opt.obs, ',');
    if (opt.ancillae < 1) {
        throw UsageError("--ancillae must be at least 1");
    }
    ChainState chain(rho);
    const std::string system = chain.systems().front();
    const auto dim = rho.layout().dim_of(system);
    std::ostringstream text;
    text << "state " << (opt.state.empty() ? "plus" : opt.state) << "   measured system " << system << "\n";
    Json steps = Json::array();
    for (std::size_t k = 0; k < opt.ancillae; ++k) {
        const auto obs = parse_observable(obs_list[std::min(k, obs_list.size() - 1)], dim);
        chain = attach_ancilla(chain, MeasurementModel(obs), system);
        const auto stats = ancilla_statistics(chain);
        const auto ancillae = chain.ancillae();
        Json step;
        step["ancilla"] = chain.history().back().ancilla;
        step["observable"] = obs.label();
        step["outcome_distribution"] = to_json(stats.outcome_distribution);
        step["S(global)"] = von_neumann_entropy(chain.state());
        text << "\nstep " << (k + 1) << ": " << obs.label() << " recorded in " << ancillae.back() << "\n";
        const auto sys_name = part_name(chain.systems());
        if (const auto *bd = std::get_if<BipartiteDiagram>(&stats.diagram)) {
            step["diagram"] = to_json(*bd);
            text << render_bipartite(*bd, sys_name, ancillae.front());
        } else {
            const auto &td = std::get<TernaryDiagram>(stats.diagram);
            step["diagram"] = to_json(td);
            const LabelSet rest(ancillae.begin() + 1, ancillae.end());
            text << render_ternary(td, sys_name, ancillae.front(), part_name(rest));
        }
        text << "global entropy " << bits(step["S(global)"].get<double>()) << "\n";
        steps.push_back(std::move(step));
    }
    r.results["steps"] = std::move(steps);
    const double global = von_neumann_entropy(chain.state());
    const bool unitary = std::abs(global - von_neumann_entropy(rho)) < 1e-9;
    r.verdicts["global_entropy_conserved"] = pass(unitary);
    if (!unitary) {
        r.exit_code = kExitPropertyFailure;
    }
    r.text = text.str();
    return r;
}

RunResult measure_sequential(const Options &opt, RunResult r) {
    const auto q = require_pure(build_state(parse_state_spec(opt.state.empty() ? "plus" : opt.state)));
    const auto obs_list = split_list(opt.obs.empty() ? "z,x" : opt.obs, ',');
    if (obs_list.size() != 2) {
        throw UsageError("sequential needs --obs FIRST,SECOND");
    }
    const auto sys = q.layout().labels().front();
    const auto dim = q.layout().dim_of(sys);
    const auto first = parse_observable(obs_list[0], dim);
    const auto second = parse_observable(obs_list[1], dim);
    const auto chain = sequential_measurement(q, first, second);
    const auto check = entropic_uncertainty_check(q, first, second);
    const auto stats = ancilla_statistics(chain);
    const auto &td = std::get<TernaryDiagram>(stats.diagram);
    const auto pa = bipartite_diagram(chain.state(), {"A1"}, {"A2"});

    r.results["diagram"] = to_json(td);
    r.results["ancillae"] = to_json(pa);
    r.results["distribution_A1"] = to_json(ancilla_distribution(chain.state(), "A1"));
    r.results["distribution_A2"] = to_json(ancilla_distribution(chain.state(), "A2"));
    r.results["uncertainty_lhs"] = check.lhs;
    r.results["uncertainty_rhs"] = check.rhs;
    r.verdicts["uncertainty"] = pass(check.holds);
    if (!check.holds) {
        r.exit_code = kExitPropertyFailure;
    }

    std::ostringstream text;
    text << "state " << (opt.state.empty() ? "plus" : opt.state) << "   first " << first.label() << " -> A1   second "
         << second.label() << " -> A2\n\n";
    text << render_ternary(td, part_name(chain.systems()), "A1", "A2") << "\n";
    text << render_bipartite(pa, "A1", "A2") << "\n";
    text << "S(A1) + S(A2) = " << bits(check.lhs) << "   bound = " << bits(check.rhs) << "   "
         << (check.holds ? "holds" : "VIOLATED") << "\n";
    r.text = text.str();
    return r;
}

RunResult measure_epr(const Options &opt, RunResult r) {
    const auto axes = split_list(opt.axes, ',');
    if (axes.size() != 2) {
        throw UsageError("epr needs --axes FIRST,SECOND");
    }
    const auto first = parse_observable(axes[0]);
    const auto second = parse_observable(axes[1]);
    const auto rep = epr_experiment(first, second);
    r.results["pre_measurement"] = to_json(rep.pre_measurement);
    r.results["ancillae"] = to_json(rep.ancillae);
    r.results["joint"] = to_json(rep.joint);
    r.results["sides"] = to_json(rep.sides);
    r.results["S(global)"] = rep.global_entropy;
    const bool pure = std::abs(rep.global_entropy) < 1e-9;
    r.verdicts["global_state_pure"] = pass(pure);
    if (!pure) {
        r.exit_code = kExitPropertyFailure;
    }

    std::ostringstream text;
    text << "EPR pair Q1,Q2 in phi+   Q1 measured along " << first.label() << " -> A1   Q2 along " << second.label()
         << " -> A2\n\nbefore measurement\n";
    text << render_bipartite(rep.pre_measurement, "Q1", "Q2");
    text << "\nancillae\n" << render_bipartite(rep.ancillae, "A1", "A2");
    text << "\njoint system\n" << render_ternary(rep.joint, "Q1,Q2", "A1", "A2");
    text << "\nsides\n" << render_bipartite(rep.sides, "Q1,A1", "Q2,A2");
    text << "global entropy " << bits(rep.global_entropy) << "\n";
    r.text = text.str();
    return r;
}

}  // namespace

RunResult cmd_measure(const std::string &scenario, const Options &opt) {
    RunResult r;
    r.command = "measure " + scenario;
    r.inputs["scenario"] = scenario;
    r.inputs["state"] = opt.state;
    r.inputs["obs"] = opt.obs;
    r.inputs["axes"] = opt.axes;
    r.inputs["ancillae"] = opt.ancillae;
    if (scenario == "chain") {
        return measure_chain(opt, std::move(r));
    }
    if (scenario == "sequential") {
        return measure_sequential(opt, std::move(r));
    }
    if (scenario == "epr") {
        return measure_epr(opt, std::move(r));
    }
    throw UsageError("unknown scenario '" + scenario + "' (chain, sequential, epr)");
}

RunResult cmd_kholevo(const Options &opt) {
    RunResult r;
    r.command = "kholevo";
    r.inputs["ensemble"] = opt.ensemble;
    r.inputs["obs"] = opt.obs;
    r.inputs["sweep"] = opt.sweep;
    if (opt.ensemble.empty()) {
        throw UsageError("--ensemble is required");
    }
    const auto file = read_ensemble_file(opt.ensemble);
    const auto ens = file.ensemble();
    const auto obs = parse_observable(opt.obs.empty() ? "computational" : opt.obs, file.dim);
    const auto measured = measure_ensemble(ens, MeasurementModel(obs));
    const auto &k = measured.report;
    const double classical = accessible_information(ens, obs);
    const double hx = shannon_entropy(ens.priors());
    std::vector<double> prior_list = ens.priors().probabilities();

    Json signals = Json::array();
    for (std::size_t i = 0; i < file.signals.size(); ++i) {
        Json s;
        s["prior"] = file.priors[i];
        s["signal"] = file.descriptions[i];
        signals.push_back(std::move(s));
    }
    r.inputs["signals"] = std::move(signals);
    r.results["chi"] = k.chi;
    r.results["S(X:Q)"] = k.s_xq_mutual;
    r.results["accessible_information"] = k.accessible_info;
    r.results["accessible_information_classical"] = classical;
    r.results["deficit"] = k.deficit;
    r.results["conservation_residual"] = k.conservation_residual;
    r.results["decomposition_residual"] = k.decomposition_residual;
    r.results["H(X)"] = hx;
    Json table = Json::array();
    for (const auto &row : outcome_table(ens, obs)) {
        table.push_back(to_json(row));
    }
    r.results["outcome_table"] = std::move(table);

    const bool info_bounded = k.accessible_info <= k.chi + 1e-9;
    const bool chi_bounded = k.chi <= hx + 1e-9;
    const bool conserved = std::abs(k.conservation_residual) < 1e-9;
    const bool decomposed = std::abs(k.decomposition_residual) < 1e-9;
    const bool consistent = std::abs(classical - k.accessible_info) < 1e-9;
    r.verdicts["information_within_bound"] = pass(info_bounded);
    r.verdicts["bound_within_prior_entropy"] = pass(chi_bounded);
    r.verdicts["conservation"] = pass(conserved);
    r.verdicts["decomposition"] = pass(decomposed);
    r.verdicts["classical_formula_agrees"] = pass(consistent);
    if (!(info_bounded && chi_bounded && conserved && decomposed && consistent)) {
        r.exit_code = kExitPropertyFailure;
    }

    std::ostringstream text;
    text << "ensemble " << opt.ensemble << "   " << ens.size() << " signal(s) in dimension " << file.dim
         << "   measurement " << obs.label() << "\n";
    for (std::size_t i = 0; i < file.signals.size(); ++i) {
        text << "  p = " << fixed6(file.priors[i]) << "   " << file.descriptions[i] << "\n";
    }
    text << "\nH(X)                  = " << bits(hx) << "\n";
    text << "chi = S(X:Q)          = " << bits(k.chi) << "\n";
    text << "I = S(X':A')          = " << bits(k.accessible_info) << "\n";
    text << "deficit = S(X':Q'|A') = " << bits(k.deficit) << "\n";
    text << "chi = I + deficit: " << bits(k.chi) << " = " << bits(k.accessible_info) << " + " << bits(k.deficit)
         << "\n";
    text << "conservation residual " << k.conservation_residual << "   decomposition residual "
         << k.decomposition_residual << "\n";

    if (opt.sweep) {
        if (file.dim != 2) {
            throw UsageError("--sweep needs qubit signals");
        }
        if (!(opt.sweep_step > 0.0)) {
            throw UsageError("--sweep-step must be positive");
        }
        const auto points = accessible_information_sweep(ens, opt.sweep_step);
        Json sweep = Json::array();
        SweepPoint best;
        best.information = -1.0;
        for (const auto &p : points) {
            Json j;
            j["angle_deg"] = p.angle_deg;
            j["information"] = p.information;
            sweep.push_back(std::move(j));
            if (p.information > best.information) {
                best = p;
            }
        }
        r.results["sweep"] = std::move(sweep);
        r.results["sweep_best_angle_deg"] = best.angle_deg;
        r.results["sweep_best_information"] = best.information;
        const bool sweep_bounded = best.information <= k.chi + 1e-9;
        r.verdicts["sweep_within_bound"] = pass(sweep_bounded);
        if (!sweep_bounded) {
            r.exit_code = kExitPropertyFailure;
        }
        text << "sweep over x-z plane axes, step " << opt.sweep_step << " deg: best I = " << bits(best.information)
             << " at " << best.angle_deg << " deg\n";
    }
    r.text = text.str();
    return r;
}

}  // namespace qentropy::cli
