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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qentropy {

struct Subsystem {
    std::string label;
    std::size_t dim = 0;

    bool operator==(const Subsystem &) const = default;
};

using LabelSet = std::vector<std::string>;

/// Ordered tensor-factor structure of a Hilbert space. The leftmost part is
/// the most significant digit of the joint basis index, so two qubits A,B
/// enumerate as {00, 01, 10, 11}.
class SubsystemLayout {
   public:
    SubsystemLayout() = default;
    explicit SubsystemLayout(std::vector<Subsystem> parts);

    /// Qubit layout with the given labels.
    static SubsystemLayout qubits(const LabelSet &labels);

    const std::vector<Subsystem> &parts() const {
        return parts_;
    }
    std::size_t size() const {
        return parts_.size();
    }
    std::size_t total_dim() const {
        return total_dim_;
    }

    bool contains(const std::string &label) const;
    /// Position of `label` among the parts; throws UnknownLabel.
    std::size_t index_of(const std::string &label) const;
    std::size_t dim_of(const std::string &label) const;
    LabelSet labels() const;

    /// This layout followed by `other`; throws DuplicateLabel on overlap.
    SubsystemLayout concat(const SubsystemLayout &other) const;
    /// Parts named in `keep`, in this layout's order. Throws UnknownLabel.
    SubsystemLayout select(const LabelSet &keep) const;
    /// Labels of this layout not in `labels`, in layout order.
    LabelSet complement(const LabelSet &labels) const;

    /// Mixed-radix digits of a joint index, most significant first.
    std::vector<std::size_t> digits(std::size_t index) const;
    std::size_t compose(std::span<const std::size_t> digits) const;

    /// "A:2,B:2"
    std::string to_string() const;

    bool operator==(const SubsystemLayout &other) const {
        return parts_ == other.parts_;
    }

   private:
    std::vector<Subsystem> parts_;
    std::size_t total_dim_ = 1;
};

/// Default labels A, B, C, ... for n parties.
LabelSet default_labels(std::size_t n);

/// Concatenation of label sets in argument order.
LabelSet join_labels(const std::vector<LabelSet> &sets);

}  // namespace qentropy
