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

#include "qentropy/layout.hpp"

#include <algorithm>
#include <sstream>

#include "qentropy/error.hpp"

namespace qentropy {

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const auto &p = parts_[i];
        if (p.label.empty()) {
            throw Error(ErrorCode::InvalidArgument, "subsystem label must be non-empty");
        }
        if (p.dim == 0) {
            throw Error(ErrorCode::InvalidArgument, "subsystem '" + p.label + "' has dimension 0");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (parts_[j].label == p.label) {
                throw Error(ErrorCode::DuplicateLabel, "label '" + p.label + "' appears twice");
            }
        }
        total_dim_ *= p.dim;
    }
}

SubsystemLayout SubsystemLayout::qubits(const LabelSet &labels) {
    std::vector<Subsystem> parts;
    parts.reserve(labels.size());
    for (const auto &l : labels) {
        parts.push_back({l, 2});
    }
    return SubsystemLayout(std::move(parts));
}

bool SubsystemLayout::contains(const std::string &label) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Subsystem &p) { return p.label == label; });
}

std::size_t SubsystemLayout::index_of(const std::string &label) const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].label == label) {
            return i;
        }
    }
    throw Error(ErrorCode::UnknownLabel, "no subsystem '" + label + "' in layout " + to_string());
}

std::size_t SubsystemLayout::dim_of(const std::string &label) const {
    return parts_[index_of(label)].dim;
}

LabelSet SubsystemLayout::labels() const {
    LabelSet out;
    out.reserve(parts_.size());
    for (const auto &p : parts_) {
        out.push_back(p.label);
    }
    return out;
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout &other) const {
    for (const auto &p : other.parts_) {
        if (contains(p.label)) {
            throw Error(ErrorCode::DuplicateLabel, "label '" + p.label + "' present in both layouts");
        }
    }
    auto parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return SubsystemLayout(std::move(parts));
}

SubsystemLayout SubsystemLayout::select(const LabelSet &keep) const {
    for (const auto &l : keep) {
        index_of(l);
    }
    std::vector<Subsystem> parts;
    for (const auto &p : parts_) {
        if (std::find(keep.begin(), keep.end(), p.label) != keep.end()) {
            parts.push_back(p);
        }
    }
    return SubsystemLayout(std::move(parts));
}

LabelSet SubsystemLayout::complement(const LabelSet &labels) const {
    for (const auto &l : labels) {
        index_of(l);
    }
    LabelSet out;
    for (const auto &p : parts_) {
        if (std::find(labels.begin(), labels.end(), p.label) == labels.end()) {
            out.push_back(p.label);
        }
    }
    return out;
}

std::vector<std::size_t> SubsystemLayout::digits(std::size_t index) const {
    std::vector<std::size_t> out(parts_.size());
    for (std::size_t k = parts_.size(); k-- > 0;) {
        out[k] = index % parts_[k].dim;
        index /= parts_[k].dim;
    }
    return out;
}

std::size_t SubsystemLayout::compose(std::span<const std::size_t> digits) const {
    std::size_t index = 0;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        index = index * parts_[k].dim + digits[k];
    }
    return index;
}

std::string SubsystemLayout::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            os << ',';
        }
        os << parts_[i].label << ':' << parts_[i].dim;
    }
    return os.str();
}

LabelSet default_labels(std::size_t n) {
    LabelSet out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < 26) {
            out.emplace_back(1, static_cast<char>('A' + i));
        } else {
            out.push_back("P" + std::to_string(i));
        }
    }
    return out;
}

LabelSet join_labels(const std::vector<LabelSet> &sets) {
    LabelSet out;
    for (const auto &s : sets) {
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

}  // namespace qentropy
