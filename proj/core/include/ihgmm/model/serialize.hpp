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

#ifndef IHGMM_MODEL_SERIALIZE_HPP_
#define IHGMM_MODEL_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "ihgmm/model/diagnostics.hpp"
#include "ihgmm/model/ih_gmm.hpp"

// JSON forms of the model types. The ground-truth document stores labels,
// scales, centers and noise settings; the signal matrix is rebuilt on load.
// Schema: docs/schemas.md.
namespace ihgmm {

void to_json(nlohmann::json& j, const NoiseSpec& spec);
void from_json(const nlohmann::json& j, NoiseSpec& spec);

void to_json(nlohmann::json& j, const GroundTruth& truth);
void from_json(const nlohmann::json& j, GroundTruth& truth);

void to_json(nlohmann::json& j, const Diagnostics& diag);

}  // namespace ihgmm

#endif  // IHGMM_MODEL_SERIALIZE_HPP_
