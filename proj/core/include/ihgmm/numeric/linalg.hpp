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

#ifndef IHGMM_NUMERIC_LINALG_HPP_
#define IHGMM_NUMERIC_LINALG_HPP_

#include <Eigen/Dense>

namespace ihgmm {

// All matrices are dense, column-major Eigen matrices. Observations are
// stored as columns of a p x n data matrix.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

struct EigenPairs {
  Vector values;   // descending in the selection order (see EigenSelection)
  Matrix vectors;  // n x k, orthonormal columns
};

struct SvdFactors {
  Matrix left;      // p x k
  Vector singulars; // k, nonincreasing, nonnegative
  Matrix right;     // n x k
};

enum class EigenSelection {
  kAlgebraic,  // k largest eigenvalues by signed value
  kMagnitude,  // k largest by absolute value
};

struct EigenOptions {
  EigenSelection selection = EigenSelection::kAlgebraic;
  // Matrices up to this order use a full dense decomposition; larger ones
  // use thick-restart block Lanczos with full reorthogonalization.
  Index dense_threshold = 512;
  // Residual contract: ||A u - l u|| <= tolerance * max(1, ||A||_F).
  double tolerance = 1e-8;
  // Hard cap on block expansions in the Lanczos path before giving up with
  // ConvergenceFailure.
  int max_block_steps = 4000;
};

// Orthonormal basis of the column span of `m` (p x K, p >= K) via Householder
// QR. Each column's largest-magnitude entry is made positive. Throws
// RankDeficient when a pivot falls below 1e-12 times its column norm.
Matrix qr_orthonormal_columns(const Matrix& m);

// Top-k eigenpairs of a symmetric matrix. Eigenvector signs are fixed so the
// largest-magnitude entry is positive (ties: lowest index).
EigenPairs sym_top_k_eigs(const Matrix& a, Index k,
                          const EigenOptions& options = {});

// Relative cutoff below which a singular value from thin_svd counts as zero.
// Singular values are square roots of Gram eigenvalues, so their absolute
// error is about sqrt(eps) sigma_1.
inline constexpr double kRankTolerance = 1e-6;

// Top-k singular triplets, computed from the eigendecomposition of the
// smaller of A A^T and A^T A. Singular vectors paired with a zero singular
// value are completed to an orthonormal set.
SvdFactors thin_svd(const Matrix& a, Index k);

// A^T A (lower triangle computed once, mirrored, so the result is exactly
// symmetric).
Matrix gram(const Matrix& a);

// Flip column signs so each column's largest-magnitude entry is positive.
void canonicalize_signs(Matrix& columns);

double max_asymmetry(const Matrix& a);

}  // namespace ihgmm

#endif  // IHGMM_NUMERIC_LINALG_HPP_
