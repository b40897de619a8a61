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

#include "ihgmm/cluster/kmeans.hpp"

#include <cassert>
#include <limits>

#include "ihgmm/error.hpp"

namespace ihgmm {
namespace {

// Points with dimension at least this use the GEMM form of the distance.
constexpr Index kGemmDistanceDim = 48;

struct Assignment {
  std::vector<int> labels;
  Vector distances;  // squared distance to the assigned centroid
  double objective = 0.0;
};

// `pts` is d x n (points as columns).
Assignment assign(const Matrix& pts, const Vector& point_norms, const Matrix& centroids) {
  const Index n = pts.cols();
  const Index K = centroids.cols();
  Assignment out{std::vector<int>(static_cast<std::size_t>(n), 0), Vector(n), 0.0};
  if (pts.rows() >= kGemmDistanceDim) {
    const Matrix cross = centroids.transpose() * pts;  // K x n
    const Vector centroid_norms = centroids.colwise().squaredNorm().transpose();
    for (Index i = 0; i < n; ++i) {
      int best = 0;
      double best_dist = std::numeric_limits<double>::infinity();
      for (Index c = 0; c < K; ++c) {
        const double dist = point_norms(i) - 2.0 * cross(c, i) + centroid_norms(c);
        if (dist < best_dist) {
          best_dist = dist;
          best = static_cast<int>(c);
        }
      }
      out.labels[static_cast<std::size_t>(i)] = best;
    }
    // Exact distances for the chosen centroids keep the objective accurate.
    for (Index i = 0; i < n; ++i)
      out.distances(i) = (pts.col(i) - centroids.col(out.labels[static_cast<std::size_t>(i)])).squaredNorm();
  } else {
    for (Index i = 0; i < n; ++i) {
      int best = 0;
      double best_dist = std::numeric_limits<double>::infinity();
      for (Index c = 0; c < K; ++c) {
        const double dist = (pts.col(i) - centroids.col(c)).squaredNorm();
        if (dist < best_dist) {
          best_dist = dist;
          best = static_cast<int>(c);
        }
      }
      out.labels[static_cast<std::size_t>(i)] = best;
      out.distances(i) = best_dist;
    }
  }
  out.objective = out.distances.sum();
  return out;
}

Matrix seed_plus_plus(const Matrix& pts, int K, Rng& rng) {
  const Index n = pts.cols();
  Matrix centroids(pts.rows(), K);
  centroids.col(0) = pts.col(static_cast<Index>(rng.below(static_cast<std::uint64_t>(n))));
  Vector nearest(n);
  for (Index i = 0; i < n; ++i) nearest(i) = (pts.col(i) - centroids.col(0)).squaredNorm();
  for (int c = 1; c < K; ++c) {
    const double total = nearest.sum();
    Index chosen = n - 1;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double running = 0.0;
      for (Index i = 0; i < n; ++i) {
        running += nearest(i);
        if (running > target && nearest(i) > 0.0) {
          chosen = i;
          break;
        }
      }
    } else {
      chosen = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    }
    centroids.col(c) = pts.col(chosen);
    for (Index i = 0; i < n; ++i)
      nearest(i) = std::min(nearest(i), (pts.col(i) - centroids.col(c)).squaredNorm());
  }
  return centroids;
}

// Recomputes centroids as cluster means. Empty clusters take the point
// farthest from its centroid; that point moves to the new cluster.
void update_centroids(const Matrix& pts, Assignment& current, Matrix& centroids) {
  const Index K = centroids.cols();
  std::vector<Index> counts(static_cast<std::size_t>(K), 0);
  centroids.setZero();
  for (Index i = 0; i < pts.cols(); ++i) {
    const int c = current.labels[static_cast<std::size_t>(i)];
    centroids.col(c) += pts.col(i);
    ++counts[static_cast<std::size_t>(c)];
  }
  for (Index c = 0; c < K; ++c) {
    if (counts[static_cast<std::size_t>(c)] > 0)
      centroids.col(c) /= static_cast<double>(counts[static_cast<std::size_t>(c)]);
  }
  for (Index c = 0; c < K; ++c) {
    if (counts[static_cast<std::size_t>(c)] > 0) continue;
    Index far = 0;
    double far_dist = -1.0;
    for (Index i = 0; i < pts.cols(); ++i) {
      // Never strip the last member from a cluster.
      if (counts[static_cast<std::size_t>(current.labels[static_cast<std::size_t>(i)])] <= 1) continue;
      if (current.distances(i) > far_dist) {
        far_dist = current.distances(i);
        far = i;
      }
    }
    if (far_dist < 0.0) continue;  // fewer distinct members than clusters
    --counts[static_cast<std::size_t>(current.labels[static_cast<std::size_t>(far)])];
    current.labels[static_cast<std::size_t>(far)] = static_cast<int>(c);
    current.distances(far) = 0.0;
    counts[static_cast<std::size_t>(c)] = 1;
    centroids.col(c) = pts.col(far);
  }
}

KMeansResult lloyd(const Matrix& pts, const Vector& norms, int K, int max_iters, double tol,
                   Rng& rng) {
  KMeansResult run;
  run.centroids = seed_plus_plus(pts, K, rng);
  Assignment current = assign(pts, norms, run.centroids);
  run.objective_trace.push_back(current.objective);
  for (int iter = 1; iter <= max_iters; ++iter) {
    update_centroids(pts, current, run.centroids);
    Assignment next = assign(pts, norms, run.centroids);
    run.iterations = iter;
    const double previous = current.objective;
    assert(next.objective <= previous * (1.0 + 1e-10) + 1e-300);
    const bool unchanged = next.labels == current.labels;
    current = std::move(next);
    run.objective_trace.push_back(current.objective);
    if (unchanged || previous - current.objective <= tol * previous) break;
  }
  run.labels = std::move(current.labels);
  run.objective = current.objective;
  return run;
}

}  // namespace

void validate_kmeans_config(const KMeansConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.tol >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "k-means needs restarts >= 1, max_iters >= 1, tol >= 0");
  }
}

KMeansResult kmeans(const Matrix& points, int K, const KMeansConfig& cfg) {
  validate_kmeans_config(cfg);
  const Index n = points.rows();
  if (K < 1 || n < K) {
    throw Error(ErrorCode::kInvalidArgument, "k-means needs 1 <= K <= n");
  }
  if (!points.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "k-means input has non-finite entries");
  }
  const Matrix pts = points.transpose();
  const Vector norms = pts.colwise().squaredNorm().transpose();
  KMeansResult best;
  best.objective = std::numeric_limits<double>::infinity();
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng = cfg.rng.split(static_cast<std::uint64_t>(r));
    KMeansResult run = lloyd(pts, norms, K, cfg.max_iters, cfg.tol, rng);
    if (run.objective < best.objective) best = std::move(run);
  }
  return best;
}

}  // namespace ihgmm
