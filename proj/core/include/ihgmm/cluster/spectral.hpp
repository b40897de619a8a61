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

#ifndef IHGMM_CLUSTER_SPECTRAL_HPP_
#define IHGMM_CLUSTER_SPECTRAL_HPP_

#include <string_view>
#include <vector>

#include "ihgmm/cluster/kmeans.hpp"
#include "ihgmm/model/ih_gmm.hpp"
#include "ihgmm/numeric/linalg.hpp"

namespace ihgmm {

enum class Method { kIhSC, kPSC, kKMeansRaw, kIdealOracle };

std::string_view to_string(Method method);
// Accepts "ihsc", "psc", "kmeans" and "oracle" (case-insensitive).
Method method_from_string(std::string_view name);

struct LabelEstimate {
  std::vector<int> z_hat;  // 0-based labels
  Method method = Method::kIhSC;
  double kmeans_objective = 0.0;
};

// X^T X with the diagonal set to zero. Exactly symmetric.
Matrix hollow_gram(const Matrix& x);

struct RowNormalized {
  Matrix rows;
  // Rows with norm below the cutoff; left unnormalized (zero).
  std::vector<Index> degenerate_rows;
};

RowNormalized row_normalize(const Matrix& u, double cutoff = 1e-12);

struct HollowedSpectral {
  Matrix gram;        // n x n, zero diagonal (empty if not retained)
  EigenPairs eigen;   // top-K pairs of gram
  Matrix normalized;  // rows of eigen.vectors scaled to unit norm
  std::vector<Index> degenerate_rows;
};

struct IhscOptions {
  EigenSelection selection = EigenSelection::kAlgebraic;
  // Keep the n x n Gram matrix in the result.
  bool retain_gram = true;
};

struct IhscResult {
  LabelEstimate estimate;
  HollowedSpectral spectral;
};

// Hollow the Gram matrix, take its top-K eigenvectors, row-normalize, and run
// k-means on the rows.
IhscResult ihsc(const Matrix& x, int K, const KMeansConfig& cfg,
                const IhscOptions& options = {});

// k-means on the rows of U diag(Sigma), where X = V Sigma U^T is the rank-K
// SVD: each observation's coordinates in the top-K left singular subspace.
LabelEstimate psc(const Matrix& x, int K, const KMeansConfig& cfg);

// k-means on the observations (columns of X) directly.
LabelEstimate kmeans_raw(const Matrix& x, int K, const KMeansConfig& cfg);

// Right singular vectors of the noiseless signal P, row-normalized, then
// k-means. Recovers the truth exactly on every valid instance.
LabelEstimate ideal_oracle(const GroundTruth& truth, const KMeansConfig& cfg);

// Dispatch for the data-driven methods (not kIdealOracle).
LabelEstimate run_method(Method method, const Matrix& x, int K, const KMeansConfig& cfg);

}  // namespace ihgmm

#endif  // IHGMM_CLUSTER_SPECTRAL_HPP_
