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

#ifndef IHGMM_EVAL_ASSIGNMENT_HPP_
#define IHGMM_EVAL_ASSIGNMENT_HPP_

#include <vector>

#include "ihgmm/numeric/linalg.hpp"

namespace ihgmm {

struct Assignment {
  std::vector<int> row_to_col;  // a permutation of [0, K)
  double cost = 0.0;
};

// Minimum-cost perfect matching on a square cost matrix (Hungarian method
// with row/column potentials, O(K^3)). Among co-optimal matchings any one may
// be returned.
Assignment linear_assignment(const Matrix& cost);

}  // namespace ihgmm

#endif  // IHGMM_EVAL_ASSIGNMENT_HPP_
