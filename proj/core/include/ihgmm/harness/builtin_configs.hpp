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

#ifndef IHGMM_HARNESS_BUILTIN_CONFIGS_HPP_
#define IHGMM_HARNESS_BUILTIN_CONFIGS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ihgmm/harness/experiment.hpp"

namespace ihgmm {

inline constexpr int kDeskReplicates = 50;
inline constexpr int kFullReplicates = 200;

std::vector<std::string> builtin_config_names();

bool is_builtin_config(std::string_view name);

// The simulation grids. `full` selects 200 replicates per cell instead of 50.
ExperimentConfig builtin_config(std::string_view name, bool full = false);

}  // namespace ihgmm

#endif  // IHGMM_HARNESS_BUILTIN_CONFIGS_HPP_
