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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace ihgmm::testing {

JacobiEigen jacobi_eigen(const Matrix& input, int max_sweeps) {
  const Index n = input.rows();
  Matrix a = input;
  Matrix v = Matrix::Identity(n, n);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Index p = 0; p < n; ++p)
      for (Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= 1e-30 * std::max(1.0, a.squaredNorm())) break;
    for (Index p = 0; p < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return a(x, x) > a(y, y); });
  JacobiEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    out.values(j) = a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]);
    out.vectors.col(j) = v.col(order[static_cast<std::size_t>(j)]);
  }
  return out;
}

Vector jacobi_singular_values(const Matrix& a) {
  const Matrix g = a.rows() < a.cols() ? Matrix(a * a.transpose()) : Matrix(a.transpose() * a);
  Vector values = jacobi_eigen(g).values;
  for (Index j = 0; j < values.size(); ++j) values(j) = std::sqrt(std::max(0.0, values(j)));
  return values;
}

double brute_force_assignment(const Matrix& cost) {
  std::vector<int> perm(static_cast<std::size_t>(cost.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) total += cost(static_cast<Index>(i), perm[i]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

long brute_force_loss(std::span<const int> z_hat, std::span<const int> z, int K) {
  std::vector<int> perm(static_cast<std::size_t>(K));
  std::iota(perm.begin(), perm.end(), 0);
  long best = std::numeric_limits<long>::max();
  do {
    long miss = 0;
    for (std::size_t i = 0; i < z.size(); ++i) miss += perm[static_cast<std::size_t>(z_hat[i])] != z[i];
    best = std::min(best, miss);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

double partition_ss(const Matrix& points, const std::vector<int>& labels, int K) {
  double ss = 0.0;
  for (int k = 0; k < K; ++k) {
    Vector mean = Vector::Zero(points.cols());
    int count = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == k) {
        mean += points.row(static_cast<Index>(i)).transpose();
        ++count;
      }
    if (count == 0) continue;
    mean /= count;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == k) ss += (points.row(static_cast<Index>(i)).transpose() - mean).squaredNorm();
  }
  return ss;
}

}  // namespace

double brute_force_min_ss(const Matrix& points, int K, std::vector<int>* best) {
  const auto n = static_cast<std::size_t>(points.rows());
  std::vector<int> labels(n, 0);
  double best_ss = std::numeric_limits<double>::infinity();
  // Odometer over K^n labelings.
  while (true) {
    const double ss = partition_ss(points, labels, K);
    if (ss < best_ss) {
      best_ss = ss;
      if (best) *best = labels;
    }
    std::size_t i = 0;
    while (i < n && labels[i] == K - 1) labels[i++] = 0;
    if (i == n) break;
    ++labels[i];
  }
  return best_ss;
}

bool same_partition(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> ab;
  std::map<int, int> ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto it1 = ab.emplace(a[i], b[i]).first;
    const auto it2 = ba.emplace(b[i], a[i]).first;
    if (it1->second != b[i] || it2->second != a[i]) return false;
  }
  return true;
}

Matrix random_symmetric(Index n, Rng& rng) {
  Matrix m = random_gaussian(n, n, rng);
  return (m + m.transpose()) / 2.0;
}

Matrix random_gaussian(Index rows, Index cols, Rng& rng) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.normal();
  return m;
}

}  // namespace ihgmm::testing
