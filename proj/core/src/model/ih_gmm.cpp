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

#include "ihgmm/model/ih_gmm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ihgmm/error.hpp"

namespace ihgmm {

std::vector<Index> Labels::cluster_sizes() const {
  std::vector<Index> sizes(static_cast<std::size_t>(K), 0);
  for (int label : z) ++sizes[static_cast<std::size_t>(label)];
  return sizes;
}

Matrix Labels::membership() const {
  Matrix m = Matrix::Zero(size(), K);
  for (Index i = 0; i < size(); ++i) m(i, z[static_cast<std::size_t>(i)]) = 1.0;
  return m;
}

void validate_labels(const Labels& labels) {
  if (labels.K < 1) throw Error(ErrorCode::kInvalidArgument, "K must be >= 1");
  for (int label : labels.z) {
    if (label < 0 || label >= labels.K) {
      throw Error(ErrorCode::kInvalidArgument,
                  "label " + std::to_string(label) + " outside [0, K)");
    }
  }
  for (Index size : labels.cluster_sizes()) {
    if (size == 0) throw Error(ErrorCode::kInvalidArgument, "empty cluster");
  }
}

std::string_view to_string(NoiseScenario scenario) {
  switch (scenario) {
    case NoiseScenario::kGaussian: return "GHe";
    case NoiseScenario::kRademacher: return "SHe";
    case NoiseScenario::kNone: return "None";
  }
  return "None";
}

NoiseScenario noise_scenario_from_string(std::string_view name) {
  if (name == "GHe" || name == "ghe") return NoiseScenario::kGaussian;
  if (name == "SHe" || name == "she") return NoiseScenario::kRademacher;
  if (name == "None" || name == "none") return NoiseScenario::kNone;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown noise scenario '" + std::string(name) + "'");
}

void validate_noise_spec(const NoiseSpec& spec) {
  if (!(spec.sigma_low >= 0.0) || !(spec.sigma_high >= spec.sigma_low) ||
      !std::isfinite(spec.sigma_high)) {
    throw Error(ErrorCode::kInvalidArgument,
                "noise spec needs 0 <= sigma_low <= sigma_high");
  }
}

Matrix signal_matrix(const Centers& centers, const Labels& labels, const Scales& scales) {
  Matrix p(centers.theta.rows(), labels.size());
  for (Index i = 0; i < labels.size(); ++i) {
    p.col(i) = scales.omega(i) * centers.theta.col(labels.z[static_cast<std::size_t>(i)]);
  }
  return p;
}

Centers make_centers(Index p, int K, double delta, Rng& rng) {
  if (K < 2 || p < K) throw Error(ErrorCode::kInvalidArgument, "make_centers needs p >= K >= 2");
  if (!(delta > 0.0)) throw Error(ErrorCode::kInvalidArgument, "delta must be positive");
  constexpr int kAttempts = 4;  // first draw plus three retries
  for (int attempt = 0;; ++attempt) {
    Matrix draw(p, K);
    for (Index k = 0; k < K; ++k)
      for (Index j = 0; j < p; ++j) draw(j, k) = rng.normal();
    try {
      return Centers{(delta / std::sqrt(2.0)) * qr_orthonormal_columns(draw)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kRankDeficient || attempt + 1 >= kAttempts) throw;
    }
  }
}

Labels make_labels(Index n, int K, double beta, Rng& rng) {
  if (K < 1) throw Error(ErrorCode::kInvalidArgument, "K must be >= 1");
  if (n < K) {
    throw Error(ErrorCode::kInfeasible, "n = " + std::to_string(n) +
                                            " is smaller than K = " + std::to_string(K));
  }
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "beta must lie in (0, 1]");
  }
  // The 1e-9 guards against products such as 0.3 * 200 / 3 landing just
  // below an integer.
  const auto floor_size = static_cast<Index>(
      std::floor(beta * static_cast<double>(n) / static_cast<double>(K) + 1e-9));
  const Index smallest = std::max<Index>(1, floor_size);
  std::vector<Index> sizes(static_cast<std::size_t>(K), 0);
  sizes[0] = smallest;
  if (K > 1) {
    const Index rest = n - smallest;
    const Index others = K - 1;
    if (rest < others) {
      throw Error(ErrorCode::kInfeasible, "not enough observations for nonempty clusters");
    }
    for (Index k = 1; k < K; ++k) {
      sizes[static_cast<std::size_t>(k)] = rest / others + ((k - 1) < rest % others ? 1 : 0);
    }
  } else {
    sizes[0] = n;
  }

  Labels labels{{}, K};
  labels.z.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < K; ++k)
    labels.z.insert(labels.z.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(k)]), k);
  // Fisher-Yates with the generator's unbiased bounded draw.
  for (std::size_t i = labels.z.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(labels.z[i - 1], labels.z[j]);
  }
  return labels;
}

Scales make_scales(Index n, double R, Rng& rng) {
  if (!(R >= 1.0) || !std::isfinite(R)) {
    throw Error(ErrorCode::kInvalidArgument, "R must be >= 1");
  }
  Scales scales{Vector(n)};
  for (Index i = 0; i < n; ++i) scales.omega(i) = R == 1.0 ? 1.0 : rng.uniform(1.0, R);
  return scales;
}

NoiseDraw sample_noise(Index p, Index n, const NoiseSpec& spec, Rng& rng) {
  validate_noise_spec(spec);
  NoiseDraw draw{Matrix::Zero(p, n), Vector::Zero(n)};
  if (spec.scenario == NoiseScenario::kNone) return draw;
  for (Index i = 0; i < n; ++i) {
    const double sigma = rng.uniform(spec.sigma_low, spec.sigma_high);
    draw.sigmas(i) = sigma;
    if (spec.scenario == NoiseScenario::kGaussian) {
      for (Index j = 0; j < p; ++j) draw.noise(j, i) = sigma * rng.normal();
    } else {
      for (Index j = 0; j < p; ++j) draw.noise(j, i) = sigma * rng.rademacher();
    }
  }
  return draw;
}

Dataset generate_dataset(const ModelParams& params, const Rng& rng) {
  if (params.p < 1 || params.n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n and p must be positive");
  }
  Rng center_rng = rng.split(1);
  Rng label_rng = rng.split(2);
  Rng scale_rng = rng.split(3);
  Rng noise_rng = rng.split(4);

  Dataset data;
  GroundTruth& truth = data.truth;
  truth.centers = make_centers(params.p, params.K, params.delta, center_rng);
  truth.labels = make_labels(params.n, params.K, params.beta, label_rng);
  truth.scales = make_scales(params.n, params.R, scale_rng);
  truth.signal = signal_matrix(truth.centers, truth.labels, truth.scales);
  truth.noise_spec = params.noise;
  NoiseDraw noise = sample_noise(params.p, params.n, params.noise, noise_rng);
  truth.noise_sigmas = std::move(noise.sigmas);
  data.x = truth.signal + noise.noise;
  return data;
}

double separation_delta(double C, int K, double p, double n) {
  const double d = std::max(n, p);
  if (!(C > 0.0) || K < 1 || !(d > 1.0) || !(p > 0.0) || !(n > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "separation_delta needs C > 0 and d > 1");
  }
  return C * std::sqrt(static_cast<double>(K) * std::log(d)) *
         std::max(1.0, std::pow(p / n, 0.25));
}

}  // namespace ihgmm
