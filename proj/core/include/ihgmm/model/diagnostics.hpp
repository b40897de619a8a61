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

#ifndef IHGMM_MODEL_DIAGNOSTICS_HPP_
#define IHGMM_MODEL_DIAGNOSTICS_HPP_

#include <vector>

#include "ihgmm/model/ih_gmm.hpp"

namespace ihgmm {

// Theory-side quantities of an Ih-GMM instance. Everything is computed from
// the ground truth; nothing is estimated from data.
struct Diagnostics {
  double delta = 0.0;  // min pairwise center distance
  double beta = 0.0;   // n_min / (n / K)
  double tau = 0.0;    // n_max / n_min
  double kappa = 0.0;  // sigma_1(Theta) / sigma_K(Theta)
  double mu0 = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double mu = 0.0;
  double sigma_k_p = 0.0;  // K-th singular value of P
  double sigma_1_p = 0.0;
  double kappa_p = 0.0;  // sigma_1(P) / sigma_K(P)
  Index d = 0;           // max(n, p)
  std::vector<Index> cluster_sizes;
  double omega_min = 0.0;
  double omega_max = 0.0;
  double eta = 0.0;

  // Right-hand sides of the structural bounds on P.
  double sigma_k_p_lower_bound = 0.0;  // omega_min Delta / (2 kappa) sqrt(beta n / K)
  double kappa_p_upper_bound = 0.0;    // kappa (omega_max / omega_min) sqrt(tau)
  double mu1_upper_bound = 0.0;        // omega_max^2 / (omega_min^2 beta)

  // Delta divided by sqrt(K ln d) max(1, (p/n)^(1/4)); the balanced-case
  // separation requirement holds when this ratio is large.
  double separation_ratio = 0.0;

  // True when two of the top-K singular values of P are within 1e-8 sigma_1;
  // mu1 and mu2 then depend on the basis picked inside the invariant subspace.
  bool degenerate_singular_values = false;
};

Diagnostics compute_diagnostics(const GroundTruth& truth);

}  // namespace ihgmm

#endif  // IHGMM_MODEL_DIAGNOSTICS_HPP_
