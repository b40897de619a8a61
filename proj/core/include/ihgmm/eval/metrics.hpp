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

#ifndef IHGMM_EVAL_METRICS_HPP_
#define IHGMM_EVAL_METRICS_HPP_

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "ihgmm/model/ih_gmm.hpp"

namespace ihgmm {

struct EvalResult {
  Index loss = 0;     // misclassified points under the best relabeling
  double rate = 0.0;  // loss / n
  bool exact = false;
  // permutation[a] is the true label matched to estimated label a.
  std::vector<int> permutation;
  // confusion[a][b] counts points with estimated label a and true label b.
  std::vector<std::vector<Index>> confusion;

  bool operator==(const EvalResult&) const = default;
};

// Permutation-optimal misclassification count. Both label vectors use values
// in [0, K); the estimate may leave some labels unused.
EvalResult misclassification(std::span<const int> z_hat, std::span<const int> z, int K);
EvalResult misclassification(std::span<const int> z_hat, const Labels& truth);

struct EvalSummary {
  Index count = 0;
  Index exact_count = 0;
  double mean_rate = 0.0;
  double rate_se = 0.0;  // sample standard deviation / sqrt(count); 0 for one result
  double exact_proportion = 0.0;

  bool operator==(const EvalSummary&) const = default;
};

EvalSummary aggregate(std::span<const EvalResult> results);

void to_json(nlohmann::json& j, const EvalResult& result);
void from_json(const nlohmann::json& j, EvalResult& result);
void to_json(nlohmann::json& j, const EvalSummary& summary);
void from_json(const nlohmann::json& j, EvalSummary& summary);

}  // namespace ihgmm

#endif  // IHGMM_EVAL_METRICS_HPP_
