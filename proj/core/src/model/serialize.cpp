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

#include "ihgmm/model/serialize.hpp"

#include <vector>

#include "ihgmm/error.hpp"

namespace ihgmm {
namespace {

std::vector<double> to_vector(const Vector& v) { return {v.data(), v.data() + v.size()}; }

Vector from_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Index>(v.size()));
}

}  // namespace

void to_json(nlohmann::json& j, const NoiseSpec& spec) {
  j = nlohmann::json{{"scenario", std::string(to_string(spec.scenario))},
                     {"sigma_low", spec.sigma_low},
                     {"sigma_high", spec.sigma_high},
                     {"eta", spec.eta()}};
}

void from_json(const nlohmann::json& j, NoiseSpec& spec) {
  spec.scenario = noise_scenario_from_string(j.at("scenario").get<std::string>());
  spec.sigma_low = j.value("sigma_low", 0.5);
  spec.sigma_high = j.value("sigma_high", 1.5);
  validate_noise_spec(spec);
}

void to_json(nlohmann::json& j, const GroundTruth& truth) {
  nlohmann::json theta = nlohmann::json::array();
  for (Index k = 0; k < truth.centers.theta.cols(); ++k)
    theta.push_back(to_vector(truth.centers.theta.col(k)));
  j = nlohmann::json{{"schema", "ihgmm.ground_truth/1"},
                     {"n", truth.labels.size()},
                     {"p", truth.centers.theta.rows()},
                     {"K", truth.labels.K},
                     {"labels", truth.labels.z},
                     {"omega", to_vector(truth.scales.omega)},
                     {"theta", std::move(theta)},
                     {"noise", truth.noise_spec},
                     {"noise_sigmas", to_vector(truth.noise_sigmas)}};
}

void from_json(const nlohmann::json& j, GroundTruth& truth) {
  try {
    truth.labels.K = j.at("K").get<int>();
    truth.labels.z = j.at("labels").get<std::vector<int>>();
    validate_labels(truth.labels);
    truth.scales.omega = from_vector(j.at("omega").get<std::vector<double>>());
    const auto columns = j.at("theta").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(columns.size()) != truth.labels.K || columns.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "theta must have K columns");
    }
    const auto p = static_cast<Index>(columns.front().size());
    truth.centers.theta.resize(p, truth.labels.K);
    for (Index k = 0; k < truth.labels.K; ++k) {
      if (static_cast<Index>(columns[static_cast<std::size_t>(k)].size()) != p) {
        throw Error(ErrorCode::kInvalidArgument, "theta columns differ in length");
      }
      truth.centers.theta.col(k) = from_vector(columns[static_cast<std::size_t>(k)]);
    }
    if (truth.scales.omega.size() != truth.labels.size()) {
      throw Error(ErrorCode::kLengthMismatch, "omega and labels differ in length");
    }
    if (truth.scales.omega.size() > 0 && !(truth.scales.omega.minCoeff() > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "scales must be positive");
    }
    truth.noise_spec = j.contains("noise") ? j.at("noise").get<NoiseSpec>() : NoiseSpec{};
    truth.noise_sigmas = j.contains("noise_sigmas")
                             ? from_vector(j.at("noise_sigmas").get<std::vector<double>>())
                             : Vector::Zero(truth.labels.size());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("ground truth JSON: ") + e.what());
  }
  truth.signal = signal_matrix(truth.centers, truth.labels, truth.scales);
}

void to_json(nlohmann::json& j, const Diagnostics& diag) {
  j = nlohmann::json{{"delta", diag.delta},
                     {"beta", diag.beta},
                     {"tau", diag.tau},
                     {"kappa", diag.kappa},
                     {"mu0", diag.mu0},
                     {"mu1", diag.mu1},
                     {"mu2", diag.mu2},
                     {"mu", diag.mu},
                     {"sigma_k_p", diag.sigma_k_p},
                     {"sigma_1_p", diag.sigma_1_p},
                     {"kappa_p", diag.kappa_p},
                     {"d", diag.d},
                     {"cluster_sizes", diag.cluster_sizes},
                     {"omega_min", diag.omega_min},
                     {"omega_max", diag.omega_max},
                     {"eta", diag.eta},
                     {"sigma_k_p_lower_bound", diag.sigma_k_p_lower_bound},
                     {"kappa_p_upper_bound", diag.kappa_p_upper_bound},
                     {"mu1_upper_bound", diag.mu1_upper_bound},
                     {"separation_ratio", diag.separation_ratio},
                     {"degenerate_singular_values", diag.degenerate_singular_values}};
}

}  // namespace ihgmm
