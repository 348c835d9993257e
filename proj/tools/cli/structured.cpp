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

#include "cli/structured.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

namespace qentropy::cli {

namespace {

constexpr const char *kToolVersion = "0.1.0";

void write(const Json &j, std::string &out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += inner;
                out += Json(it.key()).dump();
                out += ": ";
                write(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json &e) { return e.is_primitive(); });
            out += flat ? "[" : "[\n";
            bool first = true;
            for (const auto &e : j) {
                if (!first) {
                    out += flat ? ", " : ",\n";
                }
                first = false;
                if (!flat) {
                    out += inner;
                }
                write(e, out, indent + 1);
            }
            out += flat ? "]" : "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

Json to_document(const RunResult &result, bool include_timing) {
    Json doc;
    Json meta;
    meta["tool"] = "qentropy";
    meta["version"] = kToolVersion;
    meta["command"] = result.command;
    meta["input_digest"] = input_digest(result.inputs);
    meta["exit_code"] = result.exit_code;
    if (include_timing) {
        meta["wall_time_s"] = result.wall_time_s;
    }
    doc["meta"] = std::move(meta);
    doc["inputs"] = result.inputs;
    doc["results"] = result.results;
    doc["verdicts"] = result.verdicts;
    return doc;
}

std::string dump_structured(const Json &doc) {
    std::string out;
    write(doc, out, 0);
    out += '\n';
    return out;
}

Json parse_structured(const std::string &text) {
    return Json::parse(text);
}

std::string input_digest(const Json &inputs) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : dump_structured(inputs)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s = buf;
    if (s == "-0.000000") {
        s = "0.000000";
    }
    return s;
}

}  // namespace qentropy::cli
