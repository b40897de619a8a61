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

#include "ihgmm/model/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ihgmm/error.hpp"

namespace ihgmm {

Diagnostics compute_diagnostics(const GroundTruth& truth) {
  const Matrix& theta = truth.centers.theta;
  const Matrix& signal = truth.signal;
  const int K = truth.labels.K;
  const Index p = signal.rows();
  const Index n = signal.cols();
  if (K < 2) throw Error(ErrorCode::kInvalidArgument, "diagnostics need K >= 2");
  validate_labels(truth.labels);

  Diagnostics diag;
  diag.delta = std::numeric_limits<double>::infinity();
  for (Index k = 0; k < K; ++k)
    for (Index l = k + 1; l < K; ++l)
      diag.delta = std::min(diag.delta, (theta.col(k) - theta.col(l)).norm());
  if (!(diag.delta > 0.0)) {
    throw Error(ErrorCode::kDegenerateCenters, "two cluster centers coincide");
  }

  diag.cluster_sizes = truth.labels.cluster_sizes();
  const auto [min_it, max_it] =
      std::minmax_element(diag.cluster_sizes.begin(), diag.cluster_sizes.end());
  const auto n_min = static_cast<double>(*min_it);
  const auto n_max = static_cast<double>(*max_it);
  diag.beta = n_min / (static_cast<double>(n) / K);
  diag.tau = n_max / n_min;

  const SvdFactors theta_svd = thin_svd(theta, K);
  if (!(theta_svd.singulars(K - 1) > kRankTolerance * theta_svd.singulars(0))) {
    throw Error(ErrorCode::kDegenerateCenters, "center matrix has rank < K");
  }
  diag.kappa = theta_svd.singulars(0) / theta_svd.singulars(K - 1);

  const SvdFactors p_svd = thin_svd(signal, K);
  diag.sigma_1_p = p_svd.singulars(0);
  diag.sigma_k_p = p_svd.singulars(K - 1);
  diag.kappa_p = diag.sigma_1_p / diag.sigma_k_p;
  for (Index j = 0; j + 1 < K; ++j) {
    if (p_svd.singulars(j) - p_svd.singulars(j + 1) < 1e-8 * diag.sigma_1_p)
      diag.degenerate_singular_values = true;
  }

  const double frob2 = signal.squaredNorm();
  diag.mu0 = static_cast<double>(p) * static_cast<double>(n) *
             signal.cwiseAbs2().maxCoeff() / frob2;
  // P = V Sigma U^T: U (right, n x K) carries observations, V (left) features.
  diag.mu1 = static_cast<double>(n) / K * p_svd.right.rowwise().squaredNorm().maxCoeff();
  diag.mu2 = static_cast<double>(p) / K * p_svd.left.rowwise().squaredNorm().maxCoeff();
  diag.mu = std::max({diag.mu0, diag.mu1, diag.mu2});
  diag.d = std::max(n, p);

  diag.omega_min = truth.scales.min();
  diag.omega_max = truth.scales.max();
  diag.eta = truth.noise_spec.eta();

  diag.sigma_k_p_lower_bound = diag.omega_min * diag.delta / (2.0 * diag.kappa) *
                               std::sqrt(diag.beta * static_cast<double>(n) / K);
  diag.kappa_p_upper_bound =
      diag.kappa * diag.omega_max / diag.omega_min * std::sqrt(diag.tau);
  diag.mu1_upper_bound =
      diag.omega_max * diag.omega_max / (diag.omega_min * diag.omega_min * diag.beta);
  if (diag.d > 1) {
    diag.separation_ratio = diag.delta / separation_delta(1.0, K, static_cast<double>(p),
                                                          static_cast<double>(n));
  }
  return diag;
}

}  // namespace ihgmm
