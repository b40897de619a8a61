// Copyright 2026 The ihgmm Authors. All rights reserved.
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

#include "ihgmm/error.hpp"

namespace ihgmm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kDegenerateCenters: return "DegenerateCenters";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingValue: return "MissingValue";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kLabelCardinalityMismatch: return "LabelCardinalityMismatch";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInfeasible:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kParseError:
    case ErrorCode::kMissingValue:
    case ErrorCode::kEmptyDataset:
    case ErrorCode::kLabelCardinalityMismatch:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t row, std::size_t column,
                       const std::string& message)
    : Error(code, message + " (row " + std::to_string(row) + ", column " +
                      std::to_string(column) + ")"),
      row_(row),
      column_(column) {}

}  // namespace ihgmm
