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

#include "qentropy/error.hpp"

namespace qentropy {

const char *to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateLabel:
            return "DuplicateLabel";
        case ErrorCode::UnknownLabel:
            return "UnknownLabel";
        case ErrorCode::InvalidPartition:
            return "InvalidPartition";
        case ErrorCode::OverlappingParts:
            return "OverlappingParts";
        case ErrorCode::LayoutMismatch:
            return "LayoutMismatch";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::NotDensity:
            return "NotDensity";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::DomainError:
            return "DomainError";
        case ErrorCode::RangeError:
            return "RangeError";
        case ErrorCode::BadArity:
            return "BadArity";
        case ErrorCode::RankError:
            return "RankError";
        case ErrorCode::InvalidModel:
            return "InvalidModel";
        case ErrorCode::NoAncilla:
            return "NoAncilla";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
}

}  // namespace qentropy
