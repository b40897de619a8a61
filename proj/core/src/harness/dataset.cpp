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

#include "ihgmm/harness/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ihgmm/error.hpp"

namespace ihgmm {
namespace {

using Record = std::vector<std::string>;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Splits CSV text into records. Quoted fields may contain commas, doubled
// quotes and newlines.
std::vector<Record> parse_records(const std::string& text) {
  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_quoted = false;
  auto end_field = [&] {
    current.push_back(field_quoted ? field : trim(field));
    field.clear();
    field_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.size() == 1 && current.front().empty();
    if (!blank) records.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && trim(field).empty()) {
      field.clear();
      in_quotes = true;
      field_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_record();
    } else if (!(c == '\r' && i + 1 < text.size() && text[i + 1] == '\n')) {
      field.push_back(c);
    }
  }
  if (in_quotes) throw ParseError(ErrorCode::kParseError, records.size() + 1, current.size() + 1, "unterminated quote");
  if (!field.empty() || !current.empty()) end_record();
  return records;
}

bool is_missing(const std::string& cell) {
  return cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan" || cell == "?";
}

std::size_t resolve_column(const Record& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it != header.end()) return static_cast<std::size_t>(it - header.begin());
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), index);
  if (ec == std::errc() && ptr == name.data() + name.size() && index < header.size()) {
    return index;
  }
  throw Error(ErrorCode::kInvalidArgument, "no column named '" + name + "'");
}

}  // namespace

std::string_view to_string(Scaling scaling) {
  switch (scaling) {
    case Scaling::kNone: return "none";
    case Scaling::kZScore: return "zscore";
    case Scaling::kMinMax: return "minmax";
  }
  return "none";
}

Scaling scaling_from_string(std::string_view name) {
  if (name == "none" || name == "raw") return Scaling::kNone;
  if (name == "zscore" || name == "standardize") return Scaling::kZScore;
  if (name == "minmax") return Scaling::kMinMax;
  throw Error(ErrorCode::kInvalidArgument, "unknown scaling '" + std::string(name) + "'");
}

LoadedData load_csv(const DatasetSpec& spec) {
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + spec.path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);

  const std::vector<Record> records = parse_records(text);
  if (records.empty()) throw Error(ErrorCode::kEmptyDataset, spec.path.string() + " has no header");
  const Record& header = records.front();
  if (records.size() == 1) {
    throw Error(ErrorCode::kEmptyDataset, spec.path.string() + " has no data rows");
  }

  const std::size_t label_col = resolve_column(header, spec.label_column);
  std::vector<std::size_t> feature_cols;
  if (spec.feature_columns.empty()) {
    for (std::size_t c = 0; c < header.size(); ++c)
      if (c != label_col) feature_cols.push_back(c);
  } else {
    for (const auto& name : spec.feature_columns) feature_cols.push_back(resolve_column(header, name));
  }
  if (feature_cols.empty()) throw Error(ErrorCode::kEmptyDataset, "no feature columns");

  const auto n = static_cast<Index>(records.size() - 1);
  const auto p = static_cast<Index>(feature_cols.size());
  LoadedData data;
  data.x.resize(p, n);
  data.labels.z.reserve(static_cast<std::size_t>(n));
  for (std::size_t c : feature_cols) data.feature_names.push_back(header[c]);

  std::map<std::string, int> label_ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const Record& rec = records[r];
    const std::size_t row = r + 1;
    if (rec.size() != header.size()) {
      throw ParseError(ErrorCode::kParseError, row, std::min(rec.size(), header.size()) + 1,
                       "expected " + std::to_string(header.size()) + " fields, found " +
                           std::to_string(rec.size()));
    }
    const std::string& label = rec[label_col];
    if (is_missing(label)) throw ParseError(ErrorCode::kMissingValue, row, label_col + 1, "missing label");
    auto [it, inserted] = label_ids.emplace(label, static_cast<int>(label_ids.size()));
    if (inserted) data.class_names.push_back(label);
    data.labels.z.push_back(it->second);

    for (Index f = 0; f < p; ++f) {
      const std::size_t col = feature_cols[static_cast<std::size_t>(f)];
      const std::string& cell = rec[col];
      if (is_missing(cell)) throw ParseError(ErrorCode::kMissingValue, row, col + 1, "missing value");
      double value = 0.0;
      const char* begin = cell.data();
      if (*begin == '+') ++begin;
      const auto [ptr, ec] = std::from_chars(begin, cell.data() + cell.size(), value);
      if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
        throw ParseError(ErrorCode::kParseError, row, col + 1, "not a number: '" + cell + "'");
      }
      data.x(f, static_cast<Index>(r - 1)) = value;
    }
  }
  data.labels.K = static_cast<int>(label_ids.size());
  if (spec.expected_K > 0 && data.labels.K != spec.expected_K) {
    throw Error(ErrorCode::kLabelCardinalityMismatch,
                "found " + std::to_string(data.labels.K) + " classes, expected " +
                    std::to_string(spec.expected_K));
  }
  return data;
}

Preprocessed preprocess(const Matrix& x, Scaling scaling, std::span<const std::string> feature_names) {
  Preprocessed out;
  if (scaling == Scaling::kNone) {
    out.x = x;
    for (Index f = 0; f < x.rows(); ++f) out.kept_features.push_back(f);
    return out;
  }
  const auto n = static_cast<double>(x.cols());
  std::vector<Vector> rows;
  for (Index f = 0; f < x.rows(); ++f) {
    Vector row = x.row(f).transpose();
    const double lo = row.minCoeff();
    const double hi = row.maxCoeff();
    if (!(hi > lo)) {
      const std::string name = static_cast<std::size_t>(f) < feature_names.size()
                                   ? feature_names[static_cast<std::size_t>(f)]
                                   : "#" + std::to_string(f);
      out.warnings.push_back("dropped constant feature " + name);
      continue;
    }
    if (scaling == Scaling::kZScore) {
      const double mean = row.mean();
      row.array() -= mean;
      const double sd = std::sqrt(row.squaredNorm() / n);
      if (!(sd > 0.0)) continue;
      row /= sd;
    } else {
      row = ((row.array() - lo) * (2.0 / (hi - lo)) - 1.0).matrix();
    }
    rows.push_back(std::move(row));
    out.kept_features.push_back(f);
  }
  if (rows.empty()) throw Error(ErrorCode::kEmptyDataset, "every feature is constant");
  out.x.resize(static_cast<Index>(rows.size()), x.cols());
  for (std::size_t f = 0; f < rows.size(); ++f) out.x.row(static_cast<Index>(f)) = rows[f].transpose();
  return out;
}

std::string BenchmarkRow::fraction() const {
  Index n = 0;
  for (const auto& row : eval.confusion)
    for (Index count : row) n += count;
  return std::to_string(eval.loss) + "/" + std::to_string(n);
}

BenchmarkResult run_benchmark(const DatasetSpec& spec, std::span<const Method> methods,
                              const KMeansConfig& cfg) {
  if (methods.empty()) throw Error(ErrorCode::kInvalidArgument, "no methods selected");
  const LoadedData data = load_csv(spec);
  Preprocessed prepared = preprocess(data.x, spec.scaling, data.feature_names);

  BenchmarkResult result;
  result.dataset = spec.path.stem().string();
  result.n = prepared.x.cols();
  result.p = prepared.x.rows();
  result.K = data.labels.K;
  result.warnings = std::move(prepared.warnings);
  for (std::size_t m = 0; m < methods.size(); ++m) {
    KMeansConfig method_cfg = cfg;
    // Every method sees the same k-means randomness here, so their counts
    // differ only through the embedding.
    const auto start = std::chrono::steady_clock::now();
    const LabelEstimate estimate = run_method(methods[m], prepared.x, data.labels.K, method_cfg);
    const auto stop = std::chrono::steady_clock::now();
    BenchmarkRow row;
    row.method = methods[m];
    row.eval = misclassification(estimate.z_hat, data.labels);
    row.seconds = std::chrono::duration<double>(stop - start).count();
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace ihgmm
