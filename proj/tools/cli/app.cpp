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

#include "cli/app.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/specs.hpp"
#include "cli/structured.hpp"
#include "qentropy/error.hpp"

namespace qentropy::cli {

namespace {

struct Common {
    std::string format = "text";
    std::string output;
    bool timing = false;
};

void add_common(CLI::App *sub, Common &c) {
    sub->add_option("--format", c.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    sub->add_option("--output,-o", c.output, "write the result to a file instead of stdout");
    sub->add_flag("--timing", c.timing, "include wall time in structured output");
}

void add_epsilon(CLI::App *sub, Options &opt) {
    sub->add_option("--epsilon", opt.epsilon, "regulator of the amplitude operators")
        ->check(CLI::Validator(
            [](std::string &text) -> std::string {
                double v = 0;
                if (!CLI::detail::lexical_cast(text, v) || !(v > 0)) {
                    return "epsilon must be a positive number, got '" + text + "'";
                }
                return {};
            },
            "POSITIVE"))
        ->capture_default_str();
}

void add_state(CLI::App *sub, Options &opt, bool required) {
    auto *o = sub->add_option("--state", opt.state, "state specification (see 'qentropy states')");
    if (required) {
        o->required();
    }
}

std::string verdict_footer(const RunResult &r) {
    std::string s;
    if (r.exit_code != kExitPropertyFailure) {
        return s;
    }
    for (auto it = r.verdicts.begin(); it != r.verdicts.end(); ++it) {
        if (it.value().is_string() && it.value().get<std::string>() == "fail") {
            s += "FAIL " + it.key() + "\n";
        }
    }
    return s;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qentropy: entropy diagrams, separability tests, unitary measurement and the Kholevo bound"};
    app.footer(state_grammar_help());
    app.require_subcommand(1);
    Options opt;
    Common common;
    std::string scenario;
    std::string suite;

    auto *diagram = app.add_subcommand("diagram", "entropy Venn diagram of a bi- or tripartite split");
    add_state(diagram, opt, true);
    diagram->add_option("--split", opt.split, "parts separated by '/', e.g. A/B, AB/C, Q1,A1/Q2,A2");
    diagram->add_option("--trace-out", opt.trace_out, "labels to trace out first");
    add_epsilon(diagram, opt);
    add_common(diagram, common);

    auto *sep = app.add_subcommand("separability", "conditional-spectrum and PPT tests of a bipartite state");
    add_state(sep, opt, true);
    sep->add_option("--split", opt.split, "two parts, e.g. A/B");
    sep->add_option("--trace-out", opt.trace_out, "labels to trace out first");
    add_epsilon(sep, opt);
    add_common(sep, common);

    auto *measure = app.add_subcommand("measure", "unitary measurement experiments");
    measure->add_option("scenario", scenario, "chain, sequential or epr")->required();
    add_state(measure, opt, false);
    measure->add_option("--obs", opt.obs, "observables, comma separated (z, x, y, computational, angle:DEG)");
    measure->add_option("--axes", opt.axes, "EPR measurement axes, e.g. z,x")->capture_default_str();
    measure->add_option("--ancillae", opt.ancillae, "number of ancillae in a chain")->capture_default_str();
    add_common(measure, common);

    auto *kholevo = app.add_subcommand("kholevo", "Kholevo bound and accessible information of an ensemble");
    kholevo->add_option("--ensemble", opt.ensemble, "ensemble file (see docs/ensemble_format.md)")->required();
    kholevo->add_option("--obs", opt.obs, "measurement (default computational)");
    kholevo->add_flag("--sweep", opt.sweep, "also sweep qubit measurement axes in the x-z plane");
    kholevo->add_option("--sweep-step", opt.sweep_step, "sweep step in degrees")->capture_default_str();
    add_common(kholevo, common);

    auto *verify = app.add_subcommand("verify", "seeded property suites");
    verify->add_option("suite", suite, "inequalities, chain-rules, separability-survey, measurement, kholevo, all")
        ->required();
    verify->add_option("--seed", opt.seed, "base seed; trial t uses seed + t")->capture_default_str();
    verify->add_option("--trials", opt.trials, "trials per suite")->capture_default_str();
    verify->add_option("--dims", opt.dims, "subsystem dimensions, e.g. 2x2 or 2x3")->capture_default_str();
    add_epsilon(verify, opt);
    add_common(verify, common);

    auto *states = app.add_subcommand("states", "print the state specification grammar");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    if (states->parsed()) {
        out << state_grammar_help();
        return kExitOk;
    }

    RunResult result;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (diagram->parsed()) {
            result = cmd_diagram(opt);
        } else if (sep->parsed()) {
            result = cmd_separability(opt);
        } else if (measure->parsed()) {
            result = cmd_measure(scenario, opt);
        } else if (kholevo->parsed()) {
            result = cmd_kholevo(opt);
        } else {
            result = cmd_verify(suite, opt);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception &e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string body;
    if (common.format == "structured") {
        body = dump_structured(to_document(result, common.timing));
    } else {
        body = result.text + verdict_footer(result);
        if (common.timing) {
            body += "wall time " + std::to_string(result.wall_time_s) + " s\n";
        }
    }
    if (common.output.empty()) {
        out << body;
    } else {
        std::ofstream file(common.output);
        if (!file) {
            err << "error: cannot write '" << common.output << "'\n";
            return kExitUsage;
        }
        file << body;
    }
    return result.exit_code;
}

}  // namespace qentropy::cli
