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

#include "ihgmm/eval/metrics.hpp"

#include <cmath>

#include "ihgmm/error.hpp"
#include "ihgmm/eval/assignment.hpp"

namespace ihgmm {

EvalResult misclassification(std::span<const int> z_hat, std::span<const int> z, int K) {
  if (z_hat.size() != z.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "estimate has " + std::to_string(z_hat.size()) + " labels, truth has " +
                    std::to_string(z.size()));
  }
  if (K < 1) throw Error(ErrorCode::kInvalidArgument, "K must be >= 1");
  const auto size = static_cast<std::size_t>(K);
  EvalResult result;
  result.confusion.assign(size, std::vector<Index>(size, 0));
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z_hat[i] < 0 || z_hat[i] >= K || z[i] < 0 || z[i] >= K) {
      throw Error(ErrorCode::kInvalidArgument, "label outside [0, K)");
    }
    ++result.confusion[static_cast<std::size_t>(z_hat[i])][static_cast<std::size_t>(z[i])];
  }
  // Maximizing matched counts == minimizing their negation.
  Matrix cost(K, K);
  for (Index a = 0; a < K; ++a)
    for (Index b = 0; b < K; ++b)
      cost(a, b) = -static_cast<double>(
          result.confusion[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  const Assignment best = linear_assignment(cost);
  Index matched = 0;
  for (std::size_t a = 0; a < size; ++a)
    matched += result.confusion[a][static_cast<std::size_t>(best.row_to_col[a])];

  const auto n = static_cast<Index>(z.size());
  result.permutation = best.row_to_col;
  result.loss = n - matched;
  result.rate = n == 0 ? 0.0 : static_cast<double>(result.loss) / static_cast<double>(n);
  result.exact = result.loss == 0;
  return result;
}

EvalResult misclassification(std::span<const int> z_hat, const Labels& truth) {
  return misclassification(z_hat, truth.z, truth.K);
}

EvalSummary aggregate(std::span<const EvalResult> results) {
  if (results.empty()) throw Error(ErrorCode::kEmptyInput, "nothing to aggregate");
  EvalSummary summary;
  summary.count = static_cast<Index>(results.size());
  double sum = 0.0;
  for (const auto& r : results) {
    sum += r.rate;
    if (r.exact) ++summary.exact_count;
  }
  const auto count = static_cast<double>(summary.count);
  summary.mean_rate = sum / count;
  summary.exact_proportion = static_cast<double>(summary.exact_count) / count;
  if (summary.count > 1) {
    double ss = 0.0;
    for (const auto& r : results) ss += (r.rate - summary.mean_rate) * (r.rate - summary.mean_rate);
    summary.rate_se = std::sqrt(ss / (count - 1.0)) / std::sqrt(count);
  }
  return summary;
}

void to_json(nlohmann::json& j, const EvalResult& result) {
  j = nlohmann::json{{"loss", result.loss},
                     {"rate", result.rate},
                     {"exact", result.exact},
                     {"permutation", result.permutation},
                     {"confusion", result.confusion}};
}

void from_json(const nlohmann::json& j, EvalResult& result) {
  j.at("loss").get_to(result.loss);
  j.at("rate").get_to(result.rate);
  j.at("exact").get_to(result.exact);
  j.at("permutation").get_to(result.permutation);
  j.at("confusion").get_to(result.confusion);
}

void to_json(nlohmann::json& j, const EvalSummary& summary) {
  j = nlohmann::json{{"count", summary.count},
                     {"exact_count", summary.exact_count},
                     {"mean_rate", summary.mean_rate},
                     {"rate_se", summary.rate_se},
                     {"exact_proportion", summary.exact_proportion}};
}

void from_json(const nlohmann::json& j, EvalSummary& summary) {
  j.at("count").get_to(summary.count);
  j.at("exact_count").get_to(summary.exact_count);
  j.at("mean_rate").get_to(summary.mean_rate);
  j.at("rate_se").get_to(summary.rate_se);
  j.at("exact_proportion").get_to(summary.exact_proportion);
}

}  // namespace ihgmm
