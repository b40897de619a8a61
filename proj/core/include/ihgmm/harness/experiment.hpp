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

#ifndef IHGMM_HARNESS_EXPERIMENT_HPP_
#define IHGMM_HARNESS_EXPERIMENT_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ihgmm/cluster/spectral.hpp"
#include "ihgmm/eval/metrics.hpp"
#include "ihgmm/model/ih_gmm.hpp"

namespace ihgmm {

inline constexpr double kDefaultSeparationC = 3.0;

// One grid point. Delta is either given explicitly or derived from the
// separation constant C; setting both is an error.
struct CellSpec {
  Index n = 0;
  Index p = 0;
  int K = 0;
  double R = 1.0;
  double beta = 1.0;
  NoiseSpec noise;
  std::optional<double> C;
  std::optional<double> delta;

  double resolved_delta() const;
  ModelParams params() const;

  bool operator==(const CellSpec&) const = default;
};

void validate_cell(const CellSpec& cell);

struct ExperimentConfig {
  std::string name;
  std::vector<CellSpec> grid;
  int replicates = 50;
  std::uint64_t base_seed = 20240501;
  std::vector<Method> methods{Method::kIhSC, Method::kPSC, Method::kKMeansRaw};
  int kmeans_restarts = 20;
  int kmeans_max_iters = 300;
  double kmeans_tol = 1e-9;
  bool diagnostics = true;

  bool operator==(const ExperimentConfig&) const = default;
};

void validate_config(const ExperimentConfig& cfg);

struct ReplicateOutcome {
  int replicate = 0;
  bool failed = false;
  std::string error;
  Index loss = 0;
  double rate = 0.0;
  bool exact = false;

  bool operator==(const ReplicateOutcome&) const = default;
};

struct MethodCellResult {
  Method method = Method::kIhSC;
  // Over replicates that completed; failed ones are only counted.
  EvalSummary summary;
  Index failures = 0;
  std::vector<ReplicateOutcome> replicates;

  bool operator==(const MethodCellResult&) const = default;
};

struct DiagnosticsSummary {
  Index count = 0;
  double delta = 0.0;
  double beta = 0.0;
  double tau = 0.0;
  double kappa = 0.0;
  double mu = 0.0;

  bool operator==(const DiagnosticsSummary&) const = default;
};

struct CellReport {
  Index index = 0;
  CellSpec spec;
  double delta = 0.0;
  Index data_failures = 0;
  std::optional<DiagnosticsSummary> diagnostics;
  std::vector<MethodCellResult> methods;

  bool operator==(const CellReport&) const = default;
};

// Wall-clock seconds, kept apart from the deterministic report content.
struct CellTiming {
  double wall_seconds = 0.0;
  std::vector<double> method_seconds;  // summed over replicates
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<CellReport> cells;
  std::vector<CellTiming> timing;

  // Timing is excluded.
  bool operator==(const ExperimentReport& other) const {
    return config == other.config && cells == other.cells;
  }
};

struct RunOptions {
  int threads = 0;  // 0 uses the hardware concurrency
  // Called after every finished replicate with (done, total).
  std::function<void(Index, Index)> progress;
};

// Replicate r of cell c draws its data from
//   rng_stream(base_seed, r).split(c).split(0)
// and method m from .split(c).split(1 + m), so results do not depend on the
// thread schedule or on which other methods are selected.
ExperimentReport run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});

Rng replicate_data_rng(std::uint64_t base_seed, Index cell, int replicate);
Rng replicate_method_rng(std::uint64_t base_seed, Index cell, int replicate, Method method);

}  // namespace ihgmm

#endif  // IHGMM_HARNESS_EXPERIMENT_HPP_
