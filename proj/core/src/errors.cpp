// Copyright 2026 The qbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbell/errors.hpp"

namespace qbell {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kSingularBlock: return "SingularBlock";
    case ErrorCode::kNotPsd: return "NotPsd";
    case ErrorCode::kNotUnitDiagonal: return "NotUnitDiagonal";
    case ErrorCode::kNotChordal: return "NotChordal";
    case ErrorCode::kNotPartialPsd: return "NotPartialPsd";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSignallingDetected: return "SignallingDetected";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kVariableNotFound: return "VariableNotFound";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnbounded: return "Unbounded";
    case ErrorCode::kEmptyInterval: return "EmptyInterval";
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace qbell
