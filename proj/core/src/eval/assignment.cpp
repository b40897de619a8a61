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

#include "ihgmm/eval/assignment.hpp"

#include <cmath>
#include <limits>

#include "ihgmm/error.hpp"

namespace ihgmm {

Assignment linear_assignment(const Matrix& cost) {
  const Index k = cost.rows();
  if (k < 1 || cost.cols() != k) {
    throw Error(ErrorCode::kInvalidArgument, "assignment needs a non-empty square matrix");
  }
  if (!cost.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "assignment costs must be finite");
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const auto size = static_cast<std::size_t>(k);

  // 1-based arrays; column 0 is a virtual column holding the row being
  // inserted.
  std::vector<double> row_pot(size + 1, 0.0), col_pot(size + 1, 0.0);
  std::vector<std::size_t> col_match(size + 1, 0), way(size + 1, 0);
  for (std::size_t row = 1; row <= size; ++row) {
    col_match[0] = row;
    std::size_t col0 = 0;
    std::vector<double> min_slack(size + 1, kInf);
    std::vector<bool> used(size + 1, false);
    do {
      used[col0] = true;
      const std::size_t row0 = col_match[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= size; ++col) {
        if (used[col]) continue;
        const double reduced = cost(static_cast<Index>(row0 - 1), static_cast<Index>(col - 1)) -
                               row_pot[row0] - col_pot[col];
        if (reduced < min_slack[col]) {
          min_slack[col] = reduced;
          way[col] = col0;
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= size; ++col) {
        if (used[col]) {
          row_pot[col_match[col]] += delta;
          col_pot[col] -= delta;
        } else {
          min_slack[col] -= delta;
        }
      }
      col0 = col1;
    } while (col_match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      col_match[col0] = col_match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  Assignment out;
  out.row_to_col.assign(size, -1);
  for (std::size_t col = 1; col <= size; ++col) {
    out.row_to_col[col_match[col] - 1] = static_cast<int>(col - 1);
  }
  for (std::size_t row = 0; row < size; ++row) {
    out.cost += cost(static_cast<Index>(row), out.row_to_col[row]);
  }
  return out;
}

}  // namespace ihgmm
