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

#ifndef IHGMM_HARNESS_REPORT_IO_HPP_
#define IHGMM_HARNESS_REPORT_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ihgmm/harness/dataset.hpp"
#include "ihgmm/harness/experiment.hpp"

// Serialized forms of experiment configs, reports and benchmark tables.
// Schemas: docs/schemas.md.
namespace ihgmm {

void to_json(nlohmann::json& j, const CellSpec& cell);
void from_json(const nlohmann::json& j, CellSpec& cell);
void to_json(nlohmann::json& j, const ExperimentConfig& cfg);
void from_json(const nlohmann::json& j, ExperimentConfig& cfg);
void to_json(nlohmann::json& j, const ReplicateOutcome& outcome);
void from_json(const nlohmann::json& j, ReplicateOutcome& outcome);
void to_json(nlohmann::json& j, const MethodCellResult& result);
void from_json(const nlohmann::json& j, MethodCellResult& result);
void to_json(nlohmann::json& j, const DiagnosticsSummary& summary);
void from_json(const nlohmann::json& j, DiagnosticsSummary& summary);
void to_json(nlohmann::json& j, const CellReport& cell);
void from_json(const nlohmann::json& j, CellReport& cell);

// Parses and validates an experiment config. Unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

nlohmann::json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);

// Shortest decimal text that reads back to the same double.
std::string format_double(double value);
std::string csv_field(std::string_view text);

// One row per (cell, method).
std::string results_csv(const ExperimentReport& report);
// One row per (cell, method, replicate).
std::string replicates_csv(const ExperimentReport& report);
std::string timing_csv(const ExperimentReport& report);

struct OutputFormats {
  bool csv = true;
  bool json = true;
};

// Writes results.csv, replicates.csv and timing.csv and/or report.json into
// `dir` (created if needed). Returns the written paths.
std::vector<std::filesystem::path> emit_outputs(const ExperimentReport& report,
                                                const std::filesystem::path& dir,
                                                const OutputFormats& formats = {});

std::string benchmark_csv(const BenchmarkResult& result);
nlohmann::json benchmark_to_json(const BenchmarkResult& result);

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ihgmm

#endif  // IHGMM_HARNESS_REPORT_IO_HPP_
