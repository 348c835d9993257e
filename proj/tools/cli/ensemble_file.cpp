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

#include "cli/ensemble_file.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cli/structured.hpp"
#include "qentropy/error.hpp"
#include "qentropy/states.hpp"
#include "qentropy/tolerances.hpp"

namespace qentropy::cli {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string &line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class Reader {
   public:
    Reader(std::string name, std::size_t line) : name_(std::move(name)), line_(line) {
    }

    [[noreturn]] void fail(std::size_t column, const std::string &what) const {
        throw UsageError(name_ + ":" + std::to_string(line_) + ":" + std::to_string(column) + ": " + what);
    }

    double real(const Token &t) const {
        double v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size() || !std::isfinite(v)) {
            fail(t.column, "expected a number, got '" + t.text + "'");
        }
        return v;
    }

    // Decimal or p/q.
    double probability(const Token &t) const {
        const auto slash = t.text.find('/');
        double v = 0;
        if (slash == std::string::npos) {
            v = real(t);
        } else {
            const double num = real({t.text.substr(0, slash), t.column});
            const double den = real({t.text.substr(slash + 1), t.column + slash + 1});
            if (den == 0.0) {
                fail(t.column + slash + 1, "zero denominator");
            }
            v = num / den;
        }
        if (v < 0.0 || v > 1.0) {
            fail(t.column, "prior must lie in [0, 1]");
        }
        return v;
    }

    std::size_t count(const Token &t) const {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || p != t.text.data() + t.text.size() || v == 0) {
            fail(t.column, "expected a positive integer, got '" + t.text + "'");
        }
        return v;
    }

   private:
    std::string name_;
    std::size_t line_;
};

DensityOperator named_signal(const Reader &r, const Token &t, std::size_t dim) {
    const SubsystemLayout layout({{"Q", dim}});
    if (t.text.rfind("basis:", 0) == 0) {
        const std::string digits = t.text.substr(6);
        std::size_t index = 0;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty()) {
            r.fail(t.column + 6, "expected a basis index");
        }
        if (index >= dim) {
            r.fail(t.column + 6, "basis index out of range for dim " + std::to_string(dim));
        }
        return basis_state(layout, index).density();
    }
    if (t.text == "mixed") {
        return maximally_mixed(layout);
    }
    if (dim != 2) {
        r.fail(t.column, "named qubit state '" + t.text + "' needs dim 2");
    }
    try {
        return qubit_state(t.text).density();
    } catch (const Error &) {
        r.fail(t.column, "unknown state name '" + t.text + "'");
    }
}

}  // namespace

PreparationEnsemble EnsembleFile::ensemble() const {
    return PreparationEnsemble(ClassicalDistribution(priors), signals);
}

EnsembleFile parse_ensemble(const std::string &text, const std::string &name) {
    EnsembleFile out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const Reader r(name, line_no);
        const auto &kw = tokens[0];
        if (!header) {
            if (kw.text != "qentropy-ensemble" || tokens.size() != 2 || tokens[1].text != "1") {
                r.fail(kw.column, "expected header 'qentropy-ensemble 1'");
            }
            header = true;
            continue;
        }
        if (kw.text == "dim") {
            if (out.dim != 0) {
                r.fail(kw.column, "dim given twice");
            }
            if (tokens.size() != 2) {
                r.fail(kw.column, "expected 'dim <d>'");
            }
            out.dim = r.count(tokens[1]);
            continue;
        }
        if (kw.text != "signal") {
            r.fail(kw.column, "unknown keyword '" + kw.text + "' (dim, signal)");
        }
        if (out.dim == 0) {
            r.fail(kw.column, "'dim' must precede the first signal");
        }
        if (tokens.size() < 3) {
            r.fail(kw.column, "expected 'signal <prior> state|ket|matrix ...'");
        }
        const double prior = r.probability(tokens[1]);
        const auto &form = tokens[2];
        const auto d = out.dim;
        std::string desc;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            desc += (i > 2 ? " " : "") + tokens[i].text;
        }
        if (form.text == "state") {
            if (tokens.size() != 4) {
                r.fail(form.column, "expected exactly one state name");
            }
            out.signals.push_back(named_signal(r, tokens[3], d));
        } else if (form.text == "ket" || form.text == "matrix") {
            const std::size_t n = form.text == "ket" ? d : d * d;
            if (tokens.size() != 3 + 2 * n) {
                const auto col = tokens.size() > 3 ? tokens.back().column : form.column;
                r.fail(col, "expected " + std::to_string(2 * n) + " numbers (re im pairs), got " +
                                std::to_string(tokens.size() - 3));
            }
            std::vector<Complex> values;
            for (std::size_t i = 0; i < n; ++i) {
                values.emplace_back(r.real(tokens[3 + 2 * i]), r.real(tokens[4 + 2 * i]));
            }
            const SubsystemLayout layout({{"Q", d}});
            if (form.text == "ket") {
                Vector v = Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(d));
                const double norm = v.norm();
                if (norm == 0.0) {
                    r.fail(tokens[3].column, "zero ket");
                }
                out.signals.push_back(DensityOperator::from_pure(layout, v / norm));
            } else {
                Matrix m(d, d);
                for (std::size_t i = 0; i < d; ++i) {
                    for (std::size_t k = 0; k < d; ++k) {
                        m(i, k) = values[i * d + k];
                    }
                }
                try {
                    out.signals.emplace_back(layout, m);
                } catch (const Error &e) {
                    r.fail(tokens[3].column, std::string("not a density matrix: ") + e.what());
                }
            }
        } else {
            r.fail(form.column, "unknown signal form '" + form.text + "' (state, ket, matrix)");
        }
        out.priors.push_back(prior);
        out.descriptions.push_back(desc);
    }
    if (!header) {
        throw UsageError(name + ": empty ensemble file");
    }
    if (out.signals.empty()) {
        throw UsageError(name + ": no signals");
    }
    double total = 0.0;
    for (double p : out.priors) {
        total += p;
    }
    if (std::abs(total - 1.0) > tol::kTrace) {
        throw UsageError(name + ": priors sum to " + std::to_string(total) + ", expected 1");
    }
    return out;
}

EnsembleFile read_ensemble_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open ensemble file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_ensemble(buf.str(), path);
}

}  // namespace qentropy::cli
