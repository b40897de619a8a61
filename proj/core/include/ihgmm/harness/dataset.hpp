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

#ifndef IHGMM_HARNESS_DATASET_HPP_
#define IHGMM_HARNESS_DATASET_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ihgmm/cluster/spectral.hpp"
#include "ihgmm/eval/metrics.hpp"
#include "ihgmm/model/ih_gmm.hpp"

namespace ihgmm {

enum class Scaling {
  kNone,
  kZScore,  // per-feature zero mean, unit variance
  kMinMax,  // per-feature affine map onto [-1, 1]
};

std::string_view to_string(Scaling scaling);
Scaling scaling_from_string(std::string_view name);

struct DatasetSpec {
  std::filesystem::path path;
  // Header name of the label column, or its 0-based position.
  std::string label_column;
  // Empty means every column except the label.
  std::vector<std::string> feature_columns;
  Scaling scaling = Scaling::kZScore;
  int expected_K = 0;  // 0 skips the cardinality check
};

struct LoadedData {
  Matrix x;  // p x n
  Labels labels;
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;  // class_names[k] is the raw value of label k
};

// Reads a comma-separated file with a header row (RFC 4180 quoting). Labels
// are numbered by first appearance. Empty, "NA", "NaN" and "?" cells are
// rejected as missing values.
LoadedData load_csv(const DatasetSpec& spec);

struct Preprocessed {
  Matrix x;
  std::vector<Index> kept_features;
  std::vector<std::string> warnings;
};

// Applies `scaling` feature-wise. Constant features cannot be rescaled and
// are dropped with a warning.
Preprocessed preprocess(const Matrix& x, Scaling scaling,
                        std::span<const std::string> feature_names = {});

struct BenchmarkRow {
  Method method = Method::kIhSC;
  EvalResult eval;
  double seconds = 0.0;

  // "errors/n", e.g. "7/150".
  std::string fraction() const;
};

struct BenchmarkResult {
  std::string dataset;
  Index n = 0;
  Index p = 0;  // after preprocessing
  int K = 0;
  std::vector<BenchmarkRow> rows;
  std::vector<std::string> warnings;
};

BenchmarkResult run_benchmark(const DatasetSpec& spec, std::span<const Method> methods,
                              const KMeansConfig& cfg);

}  // namespace ihgmm

#endif  // IHGMM_HARNESS_DATASET_HPP_
