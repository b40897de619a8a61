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

#ifndef IHGMM_CLUSTER_KMEANS_HPP_
#define IHGMM_CLUSTER_KMEANS_HPP_

#include <vector>

#include "ihgmm/numeric/linalg.hpp"
#include "ihgmm/numeric/rng.hpp"

namespace ihgmm {

struct KMeansConfig {
  int restarts = 20;
  int max_iters = 300;
  double tol = 1e-9;  // stop when the relative SS decrease falls to this level
  Rng rng{0};
};

void validate_kmeans_config(const KMeansConfig& cfg);

struct KMeansResult {
  std::vector<int> labels;  // 0-based, one per point
  Matrix centroids;         // d x K
  double objective = 0.0;   // within-cluster sum of squares
  int iterations = 0;
  // Objective after every assignment step of the winning restart.
  std::vector<double> objective_trace;
};

// Lloyd's algorithm on the rows of `points` (n x d) from k-means++ seeds,
// best of cfg.restarts runs by objective. Restart r draws from
// cfg.rng.split(r). An empty cluster is reseeded at the point farthest from
// its current centroid.
KMeansResult kmeans(const Matrix& points, int K, const KMeansConfig& cfg);

}  // namespace ihgmm

#endif  // IHGMM_CLUSTER_KMEANS_HPP_
