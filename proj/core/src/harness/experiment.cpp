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

#include "ihgmm/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "ihgmm/error.hpp"
#include "ihgmm/model/diagnostics.hpp"

namespace ihgmm {
namespace {

using Clock = std::chrono::steady_clock;

struct MethodSlot {
  bool failed = false;
  std::string error;
  EvalResult eval;
  double seconds = 0.0;
};

struct ReplicateSlot {
  bool data_failed = false;
  std::string data_error;
  std::optional<Diagnostics> diagnostics;
  std::vector<MethodSlot> methods;
};

std::string describe(const std::exception& e) { return e.what(); }

KMeansConfig kmeans_config(const ExperimentConfig& cfg, Rng rng) {
  KMeansConfig km;
  km.restarts = cfg.kmeans_restarts;
  km.max_iters = cfg.kmeans_max_iters;
  km.tol = cfg.kmeans_tol;
  km.rng = rng;
  return km;
}

void run_replicate(const ExperimentConfig& cfg, Index cell, int replicate, ReplicateSlot& slot) {
  const CellSpec& spec = cfg.grid[static_cast<std::size_t>(cell)];
  slot.methods.resize(cfg.methods.size());
  Dataset data;
  try {
    data = generate_dataset(spec.params(), replicate_data_rng(cfg.base_seed, cell, replicate));
  } catch (const std::exception& e) {
    slot.data_failed = true;
    slot.data_error = describe(e);
    for (auto& m : slot.methods) {
      m.failed = true;
      m.error = slot.data_error;
    }
    return;
  }
  if (cfg.diagnostics) {
    try {
      slot.diagnostics = compute_diagnostics(data.truth);
    } catch (const Error&) {
      slot.diagnostics.reset();
    }
  }
  for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
    const Method method = cfg.methods[m];
    const KMeansConfig km =
        kmeans_config(cfg, replicate_method_rng(cfg.base_seed, cell, replicate, method));
    MethodSlot& out = slot.methods[m];
    const auto start = Clock::now();
    try {
      const LabelEstimate estimate = method == Method::kIdealOracle
                                         ? ideal_oracle(data.truth, km)
                                         : run_method(method, data.x, spec.K, km);
      out.eval = misclassification(estimate.z_hat, data.truth.labels);
    } catch (const std::exception& e) {
      out.failed = true;
      out.error = describe(e);
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  }
}

DiagnosticsSummary summarize_diagnostics(const std::vector<ReplicateSlot>& slots) {
  DiagnosticsSummary s;
  for (const auto& slot : slots) {
    if (!slot.diagnostics) continue;
    const Diagnostics& d = *slot.diagnostics;
    ++s.count;
    s.delta += d.delta;
    s.beta += d.beta;
    s.tau += d.tau;
    s.kappa += d.kappa;
    s.mu += d.mu;
  }
  if (s.count > 0) {
    const auto c = static_cast<double>(s.count);
    s.delta /= c;
    s.beta /= c;
    s.tau /= c;
    s.kappa /= c;
    s.mu /= c;
  }
  return s;
}

}  // namespace

double CellSpec::resolved_delta() const {
  if (delta) return *delta;
  return separation_delta(C.value_or(kDefaultSeparationC), K, static_cast<double>(p),
                          static_cast<double>(n));
}

ModelParams CellSpec::params() const {
  ModelParams params;
  params.n = n;
  params.p = p;
  params.K = K;
  params.delta = resolved_delta();
  params.R = R;
  params.beta = beta;
  params.noise = noise;
  return params;
}

void validate_cell(const CellSpec& cell) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidArgument, msg); };
  if (cell.K < 2) fail("K must be at least 2");
  if (cell.n < cell.K) throw Error(ErrorCode::kInfeasible, "n must be at least K");
  if (cell.p < cell.K) fail("p must be at least K");
  if (!(cell.R >= 1.0) || !std::isfinite(cell.R)) fail("R must be a finite value >= 1");
  if (!(cell.beta > 0.0 && cell.beta <= 1.0)) fail("beta must lie in (0, 1]");
  if (cell.C && cell.delta) fail("a cell may set C or delta, not both");
  if (cell.C && !(*cell.C > 0.0 && std::isfinite(*cell.C))) fail("C must be positive");
  if (cell.delta && !(*cell.delta > 0.0 && std::isfinite(*cell.delta))) fail("delta must be positive");
  validate_noise_spec(cell.noise);
}

void validate_config(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidArgument, msg); };
  if (cfg.grid.empty()) fail("experiment grid is empty");
  if (cfg.replicates < 1) fail("replicates must be at least 1");
  if (cfg.methods.empty()) fail("no methods selected");
  for (std::size_t i = 0; i < cfg.methods.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (cfg.methods[i] == cfg.methods[j]) {
        fail("method " + std::string(to_string(cfg.methods[i])) + " listed twice");
      }
  KMeansConfig km;
  km.restarts = cfg.kmeans_restarts;
  km.max_iters = cfg.kmeans_max_iters;
  km.tol = cfg.kmeans_tol;
  validate_kmeans_config(km);
  for (std::size_t c = 0; c < cfg.grid.size(); ++c) {
    try {
      validate_cell(cfg.grid[c]);
    } catch (const Error& e) {
      throw Error(e.code(), "cell " + std::to_string(c) + ": " + e.what());
    }
  }
}

Rng replicate_data_rng(std::uint64_t base_seed, Index cell, int replicate) {
  return rng_stream(base_seed, static_cast<std::uint64_t>(replicate))
      .split(static_cast<std::uint64_t>(cell))
      .split(0);
}

Rng replicate_method_rng(std::uint64_t base_seed, Index cell, int replicate, Method method) {
  return rng_stream(base_seed, static_cast<std::uint64_t>(replicate))
      .split(static_cast<std::uint64_t>(cell))
      .split(1 + static_cast<std::uint64_t>(method));
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
  validate_config(cfg);
  const auto cells = static_cast<Index>(cfg.grid.size());
  const int reps = cfg.replicates;
  const Index total = cells * reps;

  std::vector<std::vector<ReplicateSlot>> slots(static_cast<std::size_t>(cells));
  for (auto& s : slots) s.resize(static_cast<std::size_t>(reps));
  std::vector<double> cell_wall(static_cast<std::size_t>(cells), 0.0);

  std::atomic<Index> next{0};
  std::atomic<Index> done{0};
  std::mutex progress_mutex;
  std::mutex wall_mutex;
  auto worker = [&] {
    for (Index task = next++; task < total; task = next++) {
      const Index cell = task / reps;
      const int r = static_cast<int>(task % reps);
      const auto start = Clock::now();
      run_replicate(cfg, cell, r, slots[static_cast<std::size_t>(cell)][static_cast<std::size_t>(r)]);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      {
        std::lock_guard lock(wall_mutex);
        cell_wall[static_cast<std::size_t>(cell)] += secs;
      }
      const Index finished = ++done;
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(finished, total);
      }
    }
  };

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::clamp<Index>(threads, 1, total));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  ExperimentReport report;
  report.config = cfg;
  for (Index c = 0; c < cells; ++c) {
    const auto& cell_slots = slots[static_cast<std::size_t>(c)];
    CellReport cell;
    cell.index = c;
    cell.spec = cfg.grid[static_cast<std::size_t>(c)];
    cell.delta = cell.spec.resolved_delta();
    CellTiming timing;
    timing.wall_seconds = cell_wall[static_cast<std::size_t>(c)];
    timing.method_seconds.assign(cfg.methods.size(), 0.0);
    for (const auto& slot : cell_slots)
      if (slot.data_failed) ++cell.data_failures;
    if (cfg.diagnostics) cell.diagnostics = summarize_diagnostics(cell_slots);

    for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
      MethodCellResult result;
      result.method = cfg.methods[m];
      std::vector<EvalResult> evals;
      for (int r = 0; r < reps; ++r) {
        const MethodSlot& ms = cell_slots[static_cast<std::size_t>(r)].methods[m];
        timing.method_seconds[m] += ms.seconds;
        ReplicateOutcome outcome;
        outcome.replicate = r;
        if (ms.failed) {
          outcome.failed = true;
          outcome.error = ms.error;
          ++result.failures;
        } else {
          outcome.loss = ms.eval.loss;
          outcome.rate = ms.eval.rate;
          outcome.exact = ms.eval.exact;
          evals.push_back(ms.eval);
        }
        result.replicates.push_back(std::move(outcome));
      }
      if (!evals.empty()) result.summary = aggregate(evals);
      cell.methods.push_back(std::move(result));
    }
    report.cells.push_back(std::move(cell));
    report.timing.push_back(std::move(timing));
  }
  return report;
}

}  // namespace ihgmm
