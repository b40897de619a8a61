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

#ifndef IHGMM_ERROR_HPP_
#define IHGMM_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ihgmm {

enum class ErrorCode {
  kInvalidArgument,
  kRankDeficient,
  kNotSymmetric,
  kConvergenceFailure,
  kInfeasible,
  kDegenerateCenters,
  kLengthMismatch,
  kEmptyInput,
  kParseError,
  kMissingValue,
  kEmptyDataset,
  kLabelCardinalityMismatch,
  kIo,
};

std::string_view to_string(ErrorCode code);

// True for errors caused by bad user input (config, files, arguments) as
// opposed to numerical or I/O failures at run time.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the CSV loader. Row and column are 1-based positions in the file
// (row 1 is the header).
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t row, std::size_t column,
             const std::string& message);

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace ihgmm

#endif  // IHGMM_ERROR_HPP_
