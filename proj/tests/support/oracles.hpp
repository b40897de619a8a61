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

#ifndef IHGMM_TESTS_SUPPORT_ORACLES_HPP_
#define IHGMM_TESTS_SUPPORT_ORACLES_HPP_

// Slow, independent reference implementations used to check the library.

#include <span>
#include <vector>

#include "ihgmm/numeric/linalg.hpp"
#include "ihgmm/numeric/rng.hpp"

namespace ihgmm::testing {

// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Values are sorted descending; vectors(:, j) pairs with values(j).
struct JacobiEigen {
  Vector values;
  Matrix vectors;
};
JacobiEigen jacobi_eigen(const Matrix& a, int max_sweeps = 100);

// Singular values of a (descending), from the Jacobi decomposition of a^T a
// or a a^T, whichever is smaller.
Vector jacobi_singular_values(const Matrix& a);

// Minimum of sum_i cost(i, perm[i]) over every permutation.
double brute_force_assignment(const Matrix& cost);

// Minimum mismatches over all relabelings of z_hat.
long brute_force_loss(std::span<const int> z_hat, std::span<const int> z, int K);

// Smallest within-cluster sum of squares over every partition of the rows
// of `points` into at most K groups (exhaustive; tiny inputs only).
double brute_force_min_ss(const Matrix& points, int K, std::vector<int>* best = nullptr);

// True when a and b induce the same partition.
bool same_partition(std::span<const int> a, std::span<const int> b);

Matrix random_symmetric(Index n, Rng& rng);
Matrix random_gaussian(Index rows, Index cols, Rng& rng);

}  // namespace ihgmm::testing

#endif  // IHGMM_TESTS_SUPPORT_ORACLES_HPP_
