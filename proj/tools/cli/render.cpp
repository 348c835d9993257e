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

#include "cli/render.hpp"

#include <algorithm>
#include <sstream>

namespace qentropy::cli {

namespace {

std::string center(const std::string &s, std::size_t width) {
    if (s.size() >= width) {
        return s;
    }
    const std::size_t left = (width - s.size()) / 2;
    return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
}

struct Cell {
    std::string title;
    std::string value;
};

std::size_t cell_width(const std::vector<Cell> &cells) {
    std::size_t w = 12;
    for (const auto &c : cells) {
        w = std::max({w, c.title.size() + 2, c.value.size() + 2});
    }
    return w;
}

std::string rule(std::size_t cells, std::size_t width, std::size_t indent_cells = 0) {
    std::string s(indent_cells * (width + 1), ' ');
    for (std::size_t i = 0; i < cells; ++i) {
        s += "+" + std::string(width, '-');
    }
    return s + "+\n";
}

std::string row(const std::vector<Cell> &cells, std::size_t width, bool values, std::size_t indent_cells = 0) {
    std::string s(indent_cells * (width + 1), ' ');
    for (const auto &c : cells) {
        s += "|" + center(values ? c.value : c.title, width);
    }
    return s + "|\n";
}

// "<---- A ---->" spanning `cells` cells.
std::string span(const std::string &name, std::size_t cells, std::size_t width, std::size_t indent_cells = 0) {
    const std::size_t total = cells * (width + 1) - 1;
    const std::string label = " " + name + " ";
    const std::size_t dashes = total > label.size() + 2 ? total - label.size() - 2 : 0;
    const std::string body = "<" + std::string(dashes / 2, '-') + label + std::string(dashes - dashes / 2, '-') + ">";
    return std::string(indent_cells * (width + 1) + 1, ' ') + body + "\n";
}

}  // namespace

std::string bits(double value) {
    return fixed6(value) + " b";
}

std::string part_name(const LabelSet &part) {
    std::string s;
    bool multi = false;
    for (const auto &l : part) {
        multi = multi || l.size() > 1;
    }
    for (std::size_t i = 0; i < part.size(); ++i) {
        s += (multi && i > 0 ? "," : "") + part[i];
    }
    return s;
}

std::string render_bipartite(const BipartiteDiagram &d, const std::string &a, const std::string &b) {
    const std::vector<Cell> cells = {
        {"S(" + a + "|" + b + ")", bits(d.s_a_given_b)},
        {"S(" + a + ":" + b + ")", bits(d.s_mutual)},
        {"S(" + b + "|" + a + ")", bits(d.s_b_given_a)},
    };
    const auto w = cell_width(cells);
    std::ostringstream os;
    os << span(a, 2, w);
    os << rule(3, w) << row(cells, w, false) << row(cells, w, true) << rule(3, w);
    os << span(b, 2, w, 1);
    os << "S(" << a << ") = " << bits(d.s_a) << "   S(" << b << ") = " << bits(d.s_b) << "   S(" << a
       << (a.size() > 1 || b.size() > 1 ? "," : "") << b << ") = " << bits(d.s_ab) << "\n";
    return os.str();
}

std::string render_ternary(const TernaryDiagram &d, const std::string &a, const std::string &b,
                           const std::string &c) {
    const std::string sep = (a.size() > 1 || b.size() > 1 || c.size() > 1) ? "," : "";
    const std::vector<Cell> top = {
        {"S(" + a + "|" + b + sep + c + ")", bits(d.s_a_given_bc)},
        {"S(" + a + ":" + b + "|" + c + ")", bits(d.s_ab_given_c)},
        {"S(" + b + "|" + a + sep + c + ")", bits(d.s_b_given_ac)},
    };
    const std::vector<Cell> middle = {
        {"S(" + a + ":" + c + "|" + b + ")", bits(d.s_ac_given_b)},
        {"S(" + a + ":" + b + ":" + c + ")", bits(d.s_ternary)},
        {"S(" + b + ":" + c + "|" + a + ")", bits(d.s_bc_given_a)},
    };
    const std::vector<Cell> bottom = {
        {"S(" + c + "|" + a + sep + b + ")", bits(d.s_c_given_ab)},
    };
    std::vector<Cell> all = top;
    all.insert(all.end(), middle.begin(), middle.end());
    all.push_back(bottom[0]);
    const auto w = cell_width(all);
    std::ostringstream os;
    os << span(a, 2, w) << span(b, 2, w, 1);
    os << rule(3, w) << row(top, w, false) << row(top, w, true);
    os << rule(3, w) << row(middle, w, false) << row(middle, w, true);
    os << rule(3, w) << row(bottom, w, false, 1) << row(bottom, w, true, 1) << rule(1, w, 1);
    os << std::string(w + 1, ' ') << center(c, w + 2) << "\n";
    os << a << ": rows 1-2, columns 1-2   " << b << ": rows 1-2, columns 2-3   " << c << ": row 2 and row 3\n";
    os << "S(" << a << ") = " << bits(d.s_a) << "   S(" << b << ") = " << bits(d.s_b) << "   S(" << c
       << ") = " << bits(d.s_c) << "\n";
    os << "S(" << a << sep << b << ") = " << bits(d.s_ab) << "   S(" << a << sep << c << ") = " << bits(d.s_ac)
       << "   S(" << b << sep << c << ") = " << bits(d.s_bc) << "\n";
    os << "S(" << a << sep << b << sep << c << ") = " << bits(d.s_abc) << "\n";
    return os.str();
}

Json to_json(const BipartiteDiagram &d) {
    Json j;
    j["S(A)"] = d.s_a;
    j["S(B)"] = d.s_b;
    j["S(AB)"] = d.s_ab;
    j["S(A|B)"] = d.s_a_given_b;
    j["S(A:B)"] = d.s_mutual;
    j["S(B|A)"] = d.s_b_given_a;
    return j;
}

Json to_json(const TernaryDiagram &d) {
    Json j;
    j["S(A)"] = d.s_a;
    j["S(B)"] = d.s_b;
    j["S(C)"] = d.s_c;
    j["S(AB)"] = d.s_ab;
    j["S(AC)"] = d.s_ac;
    j["S(BC)"] = d.s_bc;
    j["S(ABC)"] = d.s_abc;
    j["S(A|BC)"] = d.s_a_given_bc;
    j["S(B|AC)"] = d.s_b_given_ac;
    j["S(C|AB)"] = d.s_c_given_ab;
    j["S(A:B|C)"] = d.s_ab_given_c;
    j["S(A:C|B)"] = d.s_ac_given_b;
    j["S(B:C|A)"] = d.s_bc_given_a;
    j["S(A:B:C)"] = d.s_ternary;
    return j;
}

Json to_json(const SeparabilityReport &r) {
    Json j;
    j["max_conditional_eigenvalue_a_given_b"] = r.max_conditional_eigenvalue_ab;
    j["max_conditional_eigenvalue_b_given_a"] = r.max_conditional_eigenvalue_ba;
    j["S(A|B)"] = r.s_a_given_b;
    j["S(B|A)"] = r.s_b_given_a;
    j["ppt_min_eigenvalue"] = r.ppt_min_eigenvalue;
    j["spectrum_disagreement"] = r.spectrum_disagreement;
    return j;
}

Json to_json(const std::vector<double> &values) {
    Json j = Json::array();
    for (double v : values) {
        j.push_back(v);
    }
    return j;
}

}  // namespace qentropy::cli
