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

#include "ihgmm/harness/builtin_configs.hpp"

#include <algorithm>

#include "ihgmm/error.hpp"

namespace ihgmm {
namespace {

constexpr std::uint64_t kBuiltinSeed = 20240501;

CellSpec cell(Index n, Index p, int K, double R, double beta, NoiseScenario noise) {
  CellSpec c;
  c.n = n;
  c.p = p;
  c.K = K;
  c.R = R;
  c.beta = beta;
  c.noise.scenario = noise;
  return c;
}

ExperimentConfig base(std::string name, bool full) {
  ExperimentConfig cfg;
  cfg.name = std::move(name);
  cfg.replicates = full ? kFullReplicates : kDeskReplicates;
  cfg.base_seed = kBuiltinSeed;
  return cfg;
}

// Both noise scenarios for every value of the swept parameter.
template <typename Make>
void sweep_both_noises(ExperimentConfig& cfg, std::initializer_list<Index> values, Make make) {
  for (NoiseScenario noise : {NoiseScenario::kGaussian, NoiseScenario::kRademacher})
    for (Index v : values) cfg.grid.push_back(make(v, noise));
}

}  // namespace

std::vector<std::string> builtin_config_names() {
  return {"exp1-nggp", "exp1-neqp", "exp1-pggn", "exp2-nggp", "exp2-neqp",
          "exp2-pggn", "exp3",      "exp4"};
}

bool is_builtin_config(std::string_view name) {
  const auto names = builtin_config_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ExperimentConfig builtin_config(std::string_view name, bool full) {
  ExperimentConfig cfg = base(std::string(name), full);
  if (name == "exp1-nggp") {
    sweep_both_noises(cfg, {500, 1000, 1500, 2000, 2500},
                      [](Index n, NoiseScenario s) { return cell(n, 200, 4, 20, 1, s); });
  } else if (name == "exp1-neqp") {
    sweep_both_noises(cfg, {100, 200, 300, 400, 500},
                      [](Index n, NoiseScenario s) { return cell(n, n, 4, 20, 1, s); });
  } else if (name == "exp1-pggn") {
    sweep_both_noises(cfg, {1000, 2000, 3000, 4000, 5000},
                      [](Index p, NoiseScenario s) { return cell(200, p, 4, 20, 1, s); });
  } else if (name == "exp2-nggp" || name == "exp2-neqp" || name == "exp2-pggn") {
    const Index n = name == "exp2-nggp" ? 5000 : 1000;
    const Index p = name == "exp2-pggn" ? 5000 : 1000;
    for (int K = 2; K <= 8; ++K) cfg.grid.push_back(cell(n, p, K, 20, 1, NoiseScenario::kGaussian));
  } else if (name == "exp3") {
    const double delta = separation_delta(kDefaultSeparationC, 3, 1000, 500);
    for (int R = 5; R <= 100; R += 5) {
      CellSpec c = cell(500, 1000, 3, R, 1, NoiseScenario::kGaussian);
      c.delta = delta;
      cfg.grid.push_back(c);
    }
  } else if (name == "exp4") {
    const double delta = separation_delta(kDefaultSeparationC, 3, 1000, 200);
    for (int b = 1; b <= 10; ++b) {
      CellSpec c = cell(200, 1000, 3, 20, b / 10.0, NoiseScenario::kGaussian);
      c.delta = delta;
      cfg.grid.push_back(c);
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown experiment '" + std::string(name) + "'");
  }
  return cfg;
}

}  // namespace ihgmm
