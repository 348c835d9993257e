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

#include "cli/specs.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "cli/structured.hpp"
#include "qentropy/error.hpp"
#include "qentropy/states.hpp"

namespace qentropy::cli {

namespace {

using nlohmann::json;

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(const std::string &text, std::size_t column, const std::string &what) {
    std::ostringstream os;
    os << "state spec '" << text << "', column " << column << ": " << what;
    throw UsageError(os.str());
}

template <typename T>
bool parse_number(const std::string &s, T &out) {
    const char *b = s.data();
    const char *e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e && !s.empty();
}

// Parameters of "name:p1,p2" with their 1-based columns.
struct Param {
    std::string text;
    std::size_t column;
};

std::vector<Param> split_params(const std::string &rest, std::size_t offset) {
    std::vector<Param> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = rest.find(',', start);
        const auto piece = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back({piece, offset + start + 1});
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

bool is_qubit_name(const std::string &s) {
    static const std::set<std::string> names = {"zero", "one", "plus", "minus", "plus-i", "minus-i",
                                                "0",    "1",   "+",    "-",     "+i",     "-i"};
    return names.count(s) > 0;
}

std::string pointer_child(const std::string &where, const std::string &key) {
    return where + "/" + key;
}

std::string pointer_child(const std::string &where, std::size_t i) {
    return where + "/" + std::to_string(i);
}

[[noreturn]] void json_fail(const std::string &where, const std::string &what) {
    throw UsageError("state file " + where + ": " + what);
}

const json &require(const json &obj, const std::string &key, const std::string &where) {
    if (!obj.is_object() || !obj.contains(key)) {
        json_fail(where, "missing key '" + key + "'");
    }
    return obj.at(key);
}

double json_real(const json &j, const std::string &where) {
    if (!j.is_number()) {
        json_fail(where, "expected a number");
    }
    return j.get<double>();
}

std::size_t json_count(const json &j, const std::string &where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        json_fail(where, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

Complex json_complex(const json &j, const std::string &where) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        json_fail(where, "expected [re, im]");
    }
    return {json_real(j[0], pointer_child(where, std::size_t{0})), json_real(j[1], pointer_child(where, 1))};
}

SubsystemLayout json_layout(const json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) {
        json_fail(where, "expected a non-empty list of subsystems");
    }
    std::vector<Subsystem> parts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto at = pointer_child(where, i);
        const auto &e = j[i];
        if (e.is_array() && e.size() == 2 && e[0].is_string()) {
            parts.push_back({e[0].get<std::string>(), json_count(e[1], pointer_child(at, 1))});
        } else if (e.is_object()) {
            const auto &label = require(e, "label", at);
            if (!label.is_string()) {
                json_fail(pointer_child(at, "label"), "expected a string");
            }
            parts.push_back({label.get<std::string>(), json_count(require(e, "dim", at), pointer_child(at, "dim"))});
        } else {
            json_fail(at, "expected [label, dim] or {\"label\", \"dim\"}");
        }
    }
    try {
        return SubsystemLayout(std::move(parts));
    } catch (const Error &e) {
        json_fail(where, e.what());
    }
}

StateSpec json_factor(const json &j, const std::string &where) {
    if (j.is_string()) {
        return parse_state_spec(j.get<std::string>());
    }
    return parse_state_json(j, where);
}

// Give a factor fresh labels: "P" for a single part, P1..Pk otherwise.
DensityOperator relabel(const DensityOperator &rho, const std::string &prefix) {
    std::vector<Subsystem> parts;
    const auto &old = rho.layout().parts();
    for (std::size_t i = 0; i < old.size(); ++i) {
        parts.push_back({old.size() == 1 ? prefix : prefix + std::to_string(i + 1), old[i].dim});
    }
    return DensityOperator(SubsystemLayout(std::move(parts)), rho.matrix());
}

SubsystemLayout layout_for_dims(const std::vector<std::size_t> &dims) {
    const auto labels = default_labels(dims.size());
    std::vector<Subsystem> parts;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        parts.push_back({labels[i], dims[i]});
    }
    return SubsystemLayout(std::move(parts));
}

std::size_t count_param(const std::string &text, const Param &p, std::size_t min_value) {
    std::size_t v = 0;
    if (!parse_number(p.text, v) || v < min_value) {
        fail_at(text, p.column, "expected an integer >= " + std::to_string(min_value) + ", got '" + p.text + "'");
    }
    return v;
}

StateSpec parse_inline(const std::string &text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    std::vector<Param> params;
    if (colon != std::string::npos) {
        params = split_params(text.substr(colon + 1), colon + 1);
    }
    auto expect_params = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi) {
            fail_at(text, colon == std::string::npos ? text.size() + 1 : colon + 1,
                    "'" + name + "' takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                        " parameter(s)");
        }
    };

    StateSpec spec;
    spec.source = text;
    if (is_qubit_name(name) && colon == std::string::npos) {
        spec.value = NamedSpec{"qubit", {name}};
        return spec;
    }
    if (name == "qubit") {
        expect_params(1, 1);
        if (!is_qubit_name(params[0].text)) {
            fail_at(text, params[0].column, "unknown qubit state '" + params[0].text + "'");
        }
        spec.value = NamedSpec{"qubit", {params[0].text}};
        return spec;
    }
    if (name == "bell") {
        expect_params(1, 1);
        static const std::set<std::string> kinds = {"phi+", "phi-", "psi+", "psi-"};
        if (!kinds.count(params[0].text)) {
            fail_at(text, params[0].column, "unknown Bell state '" + params[0].text + "' (phi+, phi-, psi+, psi-)");
        }
        spec.value = NamedSpec{"bell", {params[0].text}};
        return spec;
    }
    if (name == "ghz" || name == "classical") {
        expect_params(1, 1);
        count_param(text, params[0], 2);
        spec.value = NamedSpec{name, {params[0].text}};
        return spec;
    }
    if (name == "werner") {
        expect_params(1, 1);
        double x = 0;
        if (!parse_number(params[0].text, x) || !(x >= 0.0 && x <= 1.0)) {
            fail_at(text, params[0].column, "Werner parameter must be a number in [0, 1], got '" + params[0].text + "'");
        }
        spec.value = NamedSpec{"werner", {params[0].text}};
        return spec;
    }
    if (name == "maxmixed") {
        expect_params(1, 1);
        try {
            parse_dims(params[0].text);
        } catch (const UsageError &e) {
            fail_at(text, params[0].column, e.what());
        }
        spec.value = NamedSpec{"maxmixed", {params[0].text}};
        return spec;
    }
    if (name == "random") {
        expect_params(1, 3);
        RandomSpec r;
        try {
            r.dims = parse_dims(params[0].text);
        } catch (const UsageError &e) {
            fail_at(text, params[0].column, e.what());
        }
        std::size_t total = 1;
        for (auto d : r.dims) {
            total *= d;
        }
        if (params.size() > 1) {
            r.rank = count_param(text, params[1], 1);
            if (r.rank > total) {
                fail_at(text, params[1].column, "rank exceeds the dimension " + std::to_string(total));
            }
        }
        if (params.size() > 2) {
            std::uint64_t seed = 0;
            if (!parse_number(params[2].text, seed)) {
                fail_at(text, params[2].column, "expected an unsigned seed, got '" + params[2].text + "'");
            }
            r.seed = seed;
        }
        spec.value = r;
        return spec;
    }
    if (std::filesystem::is_regular_file(text)) {
        std::ifstream in(text);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string content = buf.str();
        json doc;
        try {
            doc = json::parse(content);
        } catch (const json::parse_error &e) {
            // Turn the byte offset into line:column.
            std::size_t line = 1, col = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < content.size(); ++i) {
                if (content[i] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            throw UsageError(text + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
        }
        auto out = parse_state_json(doc, text + "#");
        out.source = text;
        return out;
    }
    fail_at(text, 1, "unknown state '" + name + "' and no such file");
}

}  // namespace

std::vector<std::string> split_list(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) {
        out.push_back(trim(item));
    }
    if (!text.empty() && text.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::vector<std::size_t> parse_dims(const std::string &text) {
    std::vector<std::size_t> dims;
    for (const auto &piece : split_list(text, 'x')) {
        std::size_t d = 0;
        if (!parse_number(piece, d) || d < 1) {
            throw UsageError("bad dimension list '" + text + "' (expected e.g. 2x3)");
        }
        dims.push_back(d);
    }
    if (dims.empty()) {
        throw UsageError("empty dimension list");
    }
    return dims;
}

StateSpec parse_state_spec(const std::string &raw) {
    const auto text = trim(raw);
    if (text.empty()) {
        throw UsageError("state spec is empty");
    }
    return parse_inline(text);
}

StateSpec parse_state_json(const json &doc, const std::string &where) {
    StateSpec spec;
    spec.source = where;
    if (!doc.is_object()) {
        json_fail(where, "expected an object");
    }
    const auto &kind_j = require(doc, "kind", where);
    if (!kind_j.is_string()) {
        json_fail(pointer_child(where, "kind"), "expected a string");
    }
    const auto kind = kind_j.get<std::string>();
    if (kind == "named") {
        const auto &s = require(doc, "spec", where);
        if (!s.is_string()) {
            json_fail(pointer_child(where, "spec"), "expected a string");
        }
        return parse_state_spec(s.get<std::string>());
    }
    if (kind == "explicit") {
        const auto at_layout = pointer_child(where, "layout");
        const auto layout = json_layout(require(doc, "layout", where), at_layout);
        const auto at = pointer_child(where, "entries");
        const auto &rows = require(doc, "entries", where);
        const auto n = layout.total_dim();
        if (!rows.is_array() || rows.size() != n) {
            json_fail(at, "expected " + std::to_string(n) + " rows");
        }
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto at_row = pointer_child(at, i);
            if (!rows[i].is_array() || rows[i].size() != n) {
                json_fail(at_row, "expected " + std::to_string(n) + " entries");
            }
            for (std::size_t k = 0; k < n; ++k) {
                m(i, k) = json_complex(rows[i][k], pointer_child(at_row, k));
            }
        }
        spec.value = ExplicitSpec{layout, m};
        return spec;
    }
    if (kind == "pure") {
        const auto layout = json_layout(require(doc, "layout", where), pointer_child(where, "layout"));
        const auto at = pointer_child(where, "amplitudes");
        const auto &amps = require(doc, "amplitudes", where);
        const auto n = layout.total_dim();
        if (!amps.is_array() || amps.size() != n) {
            json_fail(at, "expected " + std::to_string(n) + " amplitudes");
        }
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v(i) = json_complex(amps[i], pointer_child(at, i));
        }
        spec.value = PureSpec{layout, v};
        return spec;
    }
    if (kind == "separable") {
        SeparableStateSpec s;
        const auto at_w = pointer_child(where, "weights");
        const auto &w = require(doc, "weights", where);
        if (!w.is_array()) {
            json_fail(at_w, "expected a list of weights");
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            s.weights.push_back(json_real(w[i], pointer_child(at_w, i)));
        }
        const auto at_f = pointer_child(where, "factors");
        const auto &f = require(doc, "factors", where);
        if (!f.is_array() || f.size() != s.weights.size()) {
            json_fail(at_f, "expected one [A, B] factor pair per weight");
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto at = pointer_child(at_f, i);
            if (!f[i].is_array() || f[i].size() != 2) {
                json_fail(at, "expected a pair [A, B]");
            }
            s.factors_a.push_back(json_factor(f[i][0], pointer_child(at, std::size_t{0})));
            s.factors_b.push_back(json_factor(f[i][1], pointer_child(at, 1)));
        }
        spec.value = std::move(s);
        return spec;
    }
    if (kind == "random") {
        RandomSpec r;
        const auto at = pointer_child(where, "dims");
        const auto &dims = require(doc, "dims", where);
        if (!dims.is_array() || dims.empty()) {
            json_fail(at, "expected a non-empty list of dimensions");
        }
        for (std::size_t i = 0; i < dims.size(); ++i) {
            r.dims.push_back(json_count(dims[i], pointer_child(at, i)));
        }
        if (doc.contains("rank")) {
            r.rank = json_count(doc["rank"], pointer_child(where, "rank"));
        }
        if (doc.contains("seed")) {
            r.seed = json_count(doc["seed"], pointer_child(where, "seed"));
        }
        spec.value = r;
        return spec;
    }
    json_fail(pointer_child(where, "kind"), "unknown kind '" + kind + "' (explicit, pure, separable, random, named)");
}

DensityOperator build_state(const StateSpec &spec) {
    try {
        return std::visit(
            [&](const auto &s) -> DensityOperator {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, NamedSpec>) {
                    const auto &p = s.params;
                    if (s.name == "qubit") {
                        return qubit_state(p[0]).density();
                    }
                    if (s.name == "bell") {
                        BellState b = BellState::PhiPlus;
                        if (p[0] == "phi-") {
                            b = BellState::PhiMinus;
                        } else if (p[0] == "psi+") {
                            b = BellState::PsiPlus;
                        } else if (p[0] == "psi-") {
                            b = BellState::PsiMinus;
                        }
                        return bell_state(b).density();
                    }
                    if (s.name == "ghz") {
                        return ghz_state(std::stoul(p[0])).density();
                    }
                    if (s.name == "classical") {
                        return classically_correlated(std::stoul(p[0]));
                    }
                    if (s.name == "werner") {
                        return werner_state(std::stod(p[0]));
                    }
                    return maximally_mixed(layout_for_dims(parse_dims(p[0])));
                } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
                    return DensityOperator(s.layout, s.entries);
                } else if constexpr (std::is_same_v<T, PureSpec>) {
                    return PureState(s.layout, s.amplitudes).density();
                } else if constexpr (std::is_same_v<T, SeparableStateSpec>) {
                    SeparableSpec sep;
                    sep.weights = s.weights;
                    for (std::size_t i = 0; i < s.factors_a.size(); ++i) {
                        sep.factors.emplace_back(relabel(build_state(s.factors_a[i]), "A"),
                                                 relabel(build_state(s.factors_b[i]), "B"));
                    }
                    return separable_mixture(sep);
                } else {
                    const auto layout = layout_for_dims(s.dims);
                    return random_density(layout, s.rank == 0 ? layout.total_dim() : s.rank, s.seed);
                }
            },
            spec.value);
    } catch (const Error &e) {
        throw UsageError("state '" + spec.source + "': " + e.what());
    }
}

LabelSet parse_label_list(const std::string &raw, const SubsystemLayout &layout) {
    const auto text = trim(raw);
    LabelSet out;
    if (text.empty()) {
        return out;
    }
    if (text.find(',') != std::string::npos) {
        for (const auto &l : split_list(text, ',')) {
            if (!layout.contains(l)) {
                throw UsageError("unknown label '" + l + "' (layout " + layout.to_string() + ")");
            }
            out.push_back(l);
        }
        return out;
    }
    if (layout.contains(text)) {
        return {text};
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        const std::string l(1, text[i]);
        if (!layout.contains(l)) {
            throw UsageError("unknown label '" + l + "' at column " + std::to_string(i + 1) + " of '" + text +
                             "' (layout " + layout.to_string() + ")");
        }
        out.push_back(l);
    }
    return out;
}

std::vector<LabelSet> parse_split(const std::string &text, const SubsystemLayout &layout) {
    std::vector<LabelSet> parts;
    for (const auto &piece : split_list(text, '/')) {
        LabelSet part;
        try {
            part = parse_label_list(piece, layout);
        } catch (const UsageError &e) {
            throw UsageError("split '" + text + "', part " + std::to_string(parts.size() + 1) + ": " + e.what());
        }
        if (part.empty()) {
            throw UsageError("empty part in split '" + text + "'");
        }
        parts.push_back(std::move(part));
    }
    try {
        validate_parts(layout, parts, false);
    } catch (const Error &e) {
        throw UsageError("split '" + text + "': " + e.what());
    }
    return parts;
}

Observable parse_observable(const std::string &raw, std::size_t dim) {
    const auto text = trim(raw);
    if (text == "computational" || text == "comp") {
        return Observable("computational", Matrix::Identity(dim, dim));
    }
    auto need_qubit = [&] {
        if (dim != 2) {
            throw UsageError("observable '" + text + "' is defined for qubits only");
        }
    };
    if (text == "z" || text == "x" || text == "y") {
        need_qubit();
        return Observable::pauli(text[0]);
    }
    const auto colon = text.find(':');
    const auto head = text.substr(0, colon);
    const auto args = colon == std::string::npos ? std::vector<std::string>{} : split_list(text.substr(colon + 1), ',');
    constexpr double deg = std::numbers::pi / 180.0;
    if (head == "angle" && args.size() == 1) {
        need_qubit();
        double a = 0;
        if (!parse_number(args[0], a)) {
            throw UsageError("observable '" + text + "': bad angle");
        }
        return Observable::qubit_axis(a * deg, 0.0, text);
    }
    if (head == "axis" && args.size() == 2) {
        need_qubit();
        double t = 0, p = 0;
        if (!parse_number(args[0], t) || !parse_number(args[1], p)) {
            throw UsageError("observable '" + text + "': bad angles");
        }
        return Observable::qubit_axis(t * deg, p * deg, text);
    }
    throw UsageError("unknown observable '" + text + "' (z, x, y, computational, angle:DEG, axis:THETA,PHI)");
}

std::string state_grammar_help() {
    return R"(State specifications:
  bell:phi+ | bell:phi- | bell:psi+ | bell:psi-   two-qubit Bell state on A,B
  ghz:N                                            N-qubit GHZ state on A,B,C,...
  werner:X                                         X singlet + (1-X) I/4, X in [0,1]
  classical:N                                      (|0..0><0..0| + |1..1><1..1|)/2
  maxmixed:2x3                                     maximally mixed state
  random:2x3[,RANK[,SEED]]                         seeded random density operator
  zero one plus minus plus-i minus-i               single-qubit state on Q
  PATH                                             JSON state file (kind: explicit,
                                                   pure, separable, random, named)
)";
}

}  // namespace qentropy::cli
