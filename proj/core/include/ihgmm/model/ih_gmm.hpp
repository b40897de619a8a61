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

#ifndef IHGMM_MODEL_IH_GMM_HPP_
#define IHGMM_MODEL_IH_GMM_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ihgmm/numeric/linalg.hpp"
#include "ihgmm/numeric/rng.hpp"

namespace ihgmm {

// Cluster assignment of n observations. Labels are 0-based: z[i] in [0, K).
struct Labels {
  std::vector<int> z;
  int K = 0;

  Index size() const { return static_cast<Index>(z.size()); }
  std::vector<Index> cluster_sizes() const;
  // n x K 0/1 membership matrix.
  Matrix membership() const;
};

// Throws InvalidArgument unless every label is in [0, K) and no cluster is
// empty.
void validate_labels(const Labels& labels);

struct Centers {
  Matrix theta;  // p x K, column k is the center of cluster k
};

struct Scales {
  Vector omega;  // one positive scale per observation

  double min() const { return omega.minCoeff(); }
  double max() const { return omega.maxCoeff(); }
};

enum class NoiseScenario {
  kGaussian,    // "GHe": column i ~ N(0, sigma_i^2 I_p)
  kRademacher,  // "SHe": entry (j, i) = sigma_i * r_ji, r_ji = +-1
  kNone,
};

std::string_view to_string(NoiseScenario scenario);
NoiseScenario noise_scenario_from_string(std::string_view name);

struct NoiseSpec {
  NoiseScenario scenario = NoiseScenario::kGaussian;
  double sigma_low = 0.5;
  double sigma_high = 1.5;

  // Upper bound on every entry's sub-Gaussian norm.
  double eta() const { return scenario == NoiseScenario::kNone ? 0.0 : sigma_high; }

  bool operator==(const NoiseSpec&) const = default;
};

void validate_noise_spec(const NoiseSpec& spec);

struct NoiseDraw {
  Matrix noise;   // p x n
  Vector sigmas;  // per-observation sigma_i (zeros for kNone)
};

struct GroundTruth {
  Labels labels;
  Centers centers;
  Scales scales;
  Matrix signal;  // P = Theta Z^T Omega, p x n
  NoiseSpec noise_spec;
  Vector noise_sigmas;
};

// P with column i equal to omega_i * theta_{z_i}.
Matrix signal_matrix(const Centers& centers, const Labels& labels, const Scales& scales);

struct Dataset {
  Matrix x;  // p x n observations
  GroundTruth truth;
};

struct ModelParams {
  Index n = 0;
  Index p = 0;
  int K = 0;
  double delta = 0.0;
  double R = 1.0;
  double beta = 1.0;
  NoiseSpec noise;
};

// theta_k = (delta / sqrt 2) Q_{:,k}, Q from the QR of a p x K standard
// Gaussian draw; all pairwise distances equal delta.
Centers make_centers(Index p, int K, double delta, Rng& rng);

// Cluster 0 gets max(1, floor(beta n / K)) observations, the rest are split
// as evenly as possible (extra points to the lowest-index clusters), then
// positions are shuffled.
Labels make_labels(Index n, int K, double beta, Rng& rng);

// n i.i.d. Uniform(1, R) scales.
Scales make_scales(Index n, double R, Rng& rng);

// sigma_i ~ Uniform(sigma_low, sigma_high) drawn once per column, then the
// column's p entries.
NoiseDraw sample_noise(Index p, Index n, const NoiseSpec& spec, Rng& rng);

// X = P + E. Each component draws from its own child stream of `rng`.
Dataset generate_dataset(const ModelParams& params, const Rng& rng);

// C sqrt(K ln d) max(1, (p/n)^(1/4)), d = max(n, p).
double separation_delta(double C, int K, double p, double n);

}  // namespace ihgmm

#endif  // IHGMM_MODEL_IH_GMM_HPP_
