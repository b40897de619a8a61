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

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ihgmm/error.hpp"
#include "ihgmm/harness/builtin_configs.hpp"
#include "ihgmm/harness/dataset.hpp"
#include "ihgmm/harness/experiment.hpp"
#include "ihgmm/harness/report_io.hpp"

namespace ihgmm {
namespace {

namespace fs = std::filesystem;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ihgmm::Error thrown";
  return ErrorCode::kIo;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ihgmm_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

DatasetSpec spec_for(const fs::path& p, std::string label = "label") {
  DatasetSpec spec;
  spec.path = p;
  spec.label_column = std::move(label);
  return spec;
}

// ---- CSV loading ----------------------------------------------------------

TEST(LoadCsv, ToyFile) {
  TempDir dir;
  const auto p = dir.file("toy.csv", "x,y,label\n1,2,a\n3,4,b\n5,6,a\n");
  const LoadedData d = load_csv(spec_for(p));
  EXPECT_EQ(d.x.rows(), 2);
  EXPECT_EQ(d.x.cols(), 3);
  EXPECT_EQ(d.labels.z, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(d.labels.K, 2);
  EXPECT_EQ(d.class_names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.feature_names, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(d.x(1, 2), 6.0);
}

TEST(LoadCsv, QuotingCrlfAndColumnSelection) {
  TempDir dir;
  const auto p = dir.file("q.csv",
                          "\xEF\xBB\xBF\"class, name\",f1,\"f \"\"2\"\"\",f3\r\n"
                          "\"x,1\",1.5,-2e1,+3\r\n"
                          "y, 2 ,0,4\r\n\r\n");
  DatasetSpec spec = spec_for(p, "0");
  spec.feature_columns = {"f3", "f1"};
  const LoadedData d = load_csv(spec);
  EXPECT_EQ(d.class_names, (std::vector<std::string>{"x,1", "y"}));
  EXPECT_EQ(d.x.rows(), 2);
  EXPECT_EQ(d.x(0, 0), 3.0);
  EXPECT_EQ(d.x(1, 1), 2.0);
  spec.feature_columns.clear();
  EXPECT_EQ(load_csv(spec).feature_names[1], "f \"2\"");
  EXPECT_EQ(load_csv(spec).x(1, 0), -20.0);
}

TEST(LoadCsv, HeaderOnlyIsEmpty) {
  TempDir dir;
  EXPECT_EQ(code_of([&] { load_csv(spec_for(dir.file("h.csv", "a,label\n"))); }),
            ErrorCode::kEmptyDataset);
  EXPECT_EQ(code_of([&] { load_csv(spec_for(dir.file("e.csv", ""))); }), ErrorCode::kEmptyDataset);
}

TEST(LoadCsv, BlankCellReportsCoordinates) {
  TempDir dir;
  const auto p = dir.file("m.csv", "a,b,label\n1,2,x\n3,,y\n");
  try {
    load_csv(spec_for(p));
    FAIL() << "expected MissingValue";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingValue);
    EXPECT_EQ(e.row(), 3u);
    EXPECT_EQ(e.column(), 2u);
  }
  for (const char* token : {"NA", "NaN", "?"}) {
    const auto q = dir.file("t.csv", std::string("a,label\n") + token + ",x\n");
    EXPECT_EQ(code_of([&] { load_csv(spec_for(q)); }), ErrorCode::kMissingValue) << token;
  }
}

TEST(LoadCsv, MalformedInput) {
  TempDir dir;
  try {
    load_csv(spec_for(dir.file("n.csv", "a,b,label\n1,2,x\n1,zz,y\n")));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_EQ(e.row(), 3u);
    EXPECT_EQ(e.column(), 2u);
  }
  EXPECT_EQ(code_of([&] { load_csv(spec_for(dir.file("w.csv", "a,label\n1,x,9\n"))); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { load_csv(spec_for(dir.file("u.csv", "a,label\n\"1,x\n"))); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([&] { load_csv(spec_for(dir.file("c.csv", "a,label\n1,x\n"), "nope")); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { load_csv(spec_for(dir.path() / "missing.csv")); }), ErrorCode::kIo);
}

TEST(LoadCsv, LabelCardinality) {
  TempDir dir;
  DatasetSpec spec = spec_for(dir.file("k.csv", "a,label\n1,x\n2,y\n3,x\n"));
  spec.expected_K = 3;
  EXPECT_EQ(code_of([&] { load_csv(spec); }), ErrorCode::kLabelCardinalityMismatch);
  spec.expected_K = 2;
  EXPECT_EQ(load_csv(spec).labels.K, 2);
}

// ---- Preprocessing and benchmarks ------------------------------------------

TEST(Preprocess, ZScoreAndMinMax) {
  Matrix x(2, 4);
  x << 1, 2, 3, 4, 10, 10, 20, 40;
  const Preprocessed z = preprocess(x, Scaling::kZScore);
  for (Index f = 0; f < 2; ++f) {
    EXPECT_NEAR(z.x.row(f).mean(), 0.0, 1e-15);
    EXPECT_NEAR(z.x.row(f).squaredNorm() / 4.0, 1.0, 1e-12);
  }
  const Preprocessed m = preprocess(x, Scaling::kMinMax);
  EXPECT_EQ(m.x.row(0).minCoeff(), -1.0);
  EXPECT_EQ(m.x.row(0).maxCoeff(), 1.0);
  EXPECT_NEAR(m.x(1, 2), -1.0 + 2.0 * 10.0 / 30.0, 1e-15);
  EXPECT_EQ(preprocess(x, Scaling::kNone).x, x);
}

TEST(Preprocess, ConstantFeatureDropped) {
  Matrix x(3, 4);
  x << 1, 2, 3, 4, 5, 5, 5, 5, 0, 1, 0, 1;
  const std::vector<std::string> names{"a", "flat", "c"};
  const Preprocessed z = preprocess(x, Scaling::kZScore, names);
  EXPECT_EQ(z.x.rows(), 2);
  EXPECT_EQ(z.kept_features, (std::vector<Index>{0, 2}));
  ASSERT_EQ(z.warnings.size(), 1u);
  EXPECT_NE(z.warnings[0].find("flat"), std::string::npos);
  EXPECT_EQ(code_of([] { preprocess(Matrix::Ones(2, 3), Scaling::kMinMax); }),
            ErrorCode::kEmptyDataset);
}

TEST(Scaling, Names) {
  for (Scaling s : {Scaling::kNone, Scaling::kZScore, Scaling::kMinMax})
    EXPECT_EQ(scaling_from_string(to_string(s)), s);
  EXPECT_EQ(code_of([] { scaling_from_string("log"); }), ErrorCode::kInvalidArgument);
}

TEST(RunBenchmark, ConstantFeatureToyCompletesWithWarning) {
  TempDir dir;
  std::string csv = "a,const,b,label\n";
  for (int i = 0; i < 12; ++i) {
    const bool second = i % 2 == 1;
    csv += std::to_string(second ? 10 + i * 0.01 : i * 0.01) + ",7," +
           std::to_string(second ? -5 : 5) + "," + (second ? "q" : "p") + "\n";
  }
  DatasetSpec spec = spec_for(dir.file("b.csv", csv));
  spec.expected_K = 2;
  const std::vector<Method> methods{Method::kIhSC, Method::kPSC, Method::kKMeansRaw};
  KMeansConfig cfg;
  cfg.rng = Rng(5);
  const BenchmarkResult r = run_benchmark(spec, methods, cfg);
  EXPECT_EQ(r.dataset, "b");
  EXPECT_EQ(r.n, 12);
  EXPECT_EQ(r.p, 2);
  ASSERT_EQ(r.warnings.size(), 1u);
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.eval.loss, 0) << to_string(row.method);
    EXPECT_EQ(row.fraction(), "0/12");
  }
  const std::string table = benchmark_csv(r);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 4);
  EXPECT_EQ(benchmark_to_json(r).at("rows").size(), 3u);
  EXPECT_EQ(code_of([&] { run_benchmark(spec, {}, cfg); }), ErrorCode::kInvalidArgument);
}

// ---- Experiments ----------------------------------------------------------

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.name = "small";
  cfg.replicates = 4;
  cfg.base_seed = 99;
  CellSpec a;
  a.n = 60;
  a.p = 40;
  a.K = 3;
  a.R = 10;
  CellSpec b = a;
  b.noise.scenario = NoiseScenario::kRademacher;
  b.beta = 0.5;
  b.delta = 9.0;
  cfg.grid = {a, b};
  cfg.kmeans_restarts = 5;
  return cfg;
}

TEST(Experiment, ConfigValidation) {
  ExperimentConfig cfg = small_config();
  cfg.methods.clear();
  EXPECT_EQ(code_of([&] { run_experiment(cfg); }), ErrorCode::kInvalidArgument);
  cfg = small_config();
  cfg.replicates = 0;
  EXPECT_EQ(code_of([&] { validate_config(cfg); }), ErrorCode::kInvalidArgument);
  cfg = small_config();
  cfg.grid[0].C = 2.0;
  cfg.grid[0].delta = 5.0;
  EXPECT_EQ(code_of([&] { validate_config(cfg); }), ErrorCode::kInvalidArgument);
  cfg = small_config();
  cfg.grid[1].n = 2;
  EXPECT_EQ(code_of([&] { validate_config(cfg); }), ErrorCode::kInfeasible);
  cfg = small_config();
  cfg.grid[1].beta = 0.0;
  EXPECT_EQ(code_of([&] { validate_config(cfg); }), ErrorCode::kInvalidArgument);
  cfg = small_config();
  cfg.methods = {Method::kPSC, Method::kPSC};
  EXPECT_EQ(code_of([&] { validate_config(cfg); }), ErrorCode::kInvalidArgument);
  cfg = small_config();
  cfg.grid.clear();
  EXPECT_EQ(code_of([&] { validate_config(cfg); }), ErrorCode::kInvalidArgument);
}

TEST(Experiment, CellDeltaResolution) {
  CellSpec c;
  c.n = 500;
  c.p = 1000;
  c.K = 3;
  EXPECT_NEAR(c.resolved_delta(), 16.2408, 5e-4);
  c.C = 1.0;
  EXPECT_NEAR(c.resolved_delta(), 16.2408 / 3.0, 5e-4);
  c.C.reset();
  c.delta = 4.0;
  EXPECT_EQ(c.params().delta, 4.0);
}

TEST(Experiment, ReportShapeAndReplicateLogConsistency) {
  const ExperimentConfig cfg = small_config();
  const ExperimentReport report = run_experiment(cfg, {1, {}});
  ASSERT_EQ(report.cells.size(), 2u);
  ASSERT_EQ(report.timing.size(), 2u);
  for (const CellReport& cell : report.cells) {
    ASSERT_EQ(cell.methods.size(), 3u);
    ASSERT_TRUE(cell.diagnostics.has_value());
    EXPECT_EQ(cell.diagnostics->count, cfg.replicates);
    for (const MethodCellResult& m : cell.methods) {
      ASSERT_EQ(m.replicates.size(), static_cast<std::size_t>(cfg.replicates));
      Index exact = 0;
      double rate = 0.0;
      for (const auto& r : m.replicates) {
        exact += r.exact;
        rate += r.rate;
        EXPECT_EQ(r.exact, r.loss == 0);
      }
      EXPECT_EQ(m.summary.exact_count, exact);
      EXPECT_DOUBLE_EQ(m.summary.exact_proportion, static_cast<double>(exact) / cfg.replicates);
      EXPECT_NEAR(m.summary.mean_rate, rate / cfg.replicates, 1e-15);
      EXPECT_GE(m.summary.exact_proportion, 0.0);
      EXPECT_LE(m.summary.exact_proportion, 1.0);
    }
  }
  EXPECT_NEAR(report.cells[1].delta, 9.0, 0.0);
  EXPECT_NEAR(report.cells[1].diagnostics->beta, 0.5, 0.05);
}

TEST(Experiment, ScheduleIndependentAndMethodStreamsIndependent) {
  ExperimentConfig cfg = small_config();
  const ExperimentReport serial = run_experiment(cfg, {1, {}});
  const ExperimentReport parallel = run_experiment(cfg, {3, {}});
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(report_to_json(serial).dump(), report_to_json(parallel).dump());

  cfg.methods = {Method::kIhSC};
  const ExperimentReport only = run_experiment(cfg, {2, {}});
  for (std::size_t c = 0; c < only.cells.size(); ++c)
    EXPECT_EQ(only.cells[c].methods[0], serial.cells[c].methods[0]);
}

TEST(Experiment, SeedStreamsDiffer) {
  Rng a = replicate_data_rng(1, 0, 0);
  Rng b = replicate_data_rng(1, 1, 0);
  Rng c = replicate_data_rng(1, 0, 1);
  Rng d = replicate_method_rng(1, 0, 0, Method::kIhSC);
  const auto x = a.next_u64();
  EXPECT_NE(x, b.next_u64());
  EXPECT_NE(x, c.next_u64());
  EXPECT_NE(x, d.next_u64());
}

TEST(Experiment, FailuresAreRecordedNotFatal) {
  ExperimentConfig cfg = small_config();
  cfg.grid[0].delta = 1e200;  // the Gram matrix overflows to infinity
  cfg.methods = {Method::kIhSC, Method::kKMeansRaw};
  cfg.diagnostics = false;
  const ExperimentReport report = run_experiment(cfg, {1, {}});
  const MethodCellResult& ihsc = report.cells[0].methods[0];
  EXPECT_EQ(ihsc.failures, cfg.replicates);
  EXPECT_EQ(ihsc.summary.count, 0);
  EXPECT_TRUE(ihsc.replicates[0].failed);
  EXPECT_FALSE(ihsc.replicates[0].error.empty());
  EXPECT_FALSE(report.cells[0].diagnostics.has_value());
  for (const MethodCellResult& m : report.cells[1].methods) {
    EXPECT_EQ(m.failures, 0);
    EXPECT_EQ(m.summary.count, cfg.replicates);
  }
}

TEST(Experiment, ProgressCallbackSeesEveryReplicate) {
  ExperimentConfig cfg = small_config();
  Index calls = 0;
  Index last = 0;
  run_experiment(cfg, {2, [&](Index done, Index total) {
                         ++calls;
                         last = done;
                         EXPECT_EQ(total, 8);
                       }});
  EXPECT_EQ(calls, 8);
  EXPECT_EQ(last, 8);
}

// ---- Built-in grids -------------------------------------------------------

TEST(BuiltinConfigs, Grids) {
  EXPECT_EQ(builtin_config_names().size(), 8u);
  for (const auto& name : builtin_config_names()) {
    const ExperimentConfig cfg = builtin_config(name);
    validate_config(cfg);
    EXPECT_EQ(cfg.replicates, kDeskReplicates) << name;
    EXPECT_EQ(builtin_config(name, true).replicates, kFullReplicates) << name;
  }
  const ExperimentConfig e3 = builtin_config("exp3");
  ASSERT_EQ(e3.grid.size(), 20u);
  EXPECT_EQ(e3.grid.front().R, 5.0);
  EXPECT_EQ(e3.grid.back().R, 100.0);
  for (const auto& c : e3.grid) EXPECT_NEAR(c.resolved_delta(), 16.2408, 5e-4);
  const ExperimentConfig e4 = builtin_config("exp4");
  ASSERT_EQ(e4.grid.size(), 10u);
  EXPECT_DOUBLE_EQ(e4.grid.front().beta, 0.1);
  for (const auto& c : e4.grid) EXPECT_NEAR(c.resolved_delta(), 20.4217, 5e-4);
  const ExperimentConfig e1 = builtin_config("exp1-pggn");
  EXPECT_EQ(e1.grid.size(), 10u);
  EXPECT_EQ(e1.grid[9].noise.scenario, NoiseScenario::kRademacher);
  EXPECT_EQ(e1.grid[9].p, 5000);
  EXPECT_EQ(builtin_config("exp2-nggp").grid.size(), 7u);
  EXPECT_FALSE(is_builtin_config("exp5"));
  EXPECT_EQ(code_of([] { builtin_config("exp5"); }), ErrorCode::kInvalidArgument);
}

// ---- Serialization and outputs -----------------------------------------------

TEST(ReportIo, ConfigJson) {
  const nlohmann::json j = nlohmann::json::parse(R"({
    "name": "demo", "replicates": 3, "base_seed": 5, "methods": ["ihsc", "kmeans"],
    "kmeans": {"restarts": 4},
    "grid": [{"n": 50, "p": 20, "K": 2, "R": 3, "noise": "SHe"},
             {"n": 50, "p": 20, "K": 2, "delta": 4.5,
              "noise": {"scenario": "GHe", "sigma_low": 1, "sigma_high": 2}}]})");
  const ExperimentConfig cfg = config_from_json(j);
  EXPECT_EQ(cfg.methods, (std::vector<Method>{Method::kIhSC, Method::kKMeansRaw}));
  EXPECT_EQ(cfg.kmeans_restarts, 4);
  EXPECT_EQ(cfg.kmeans_max_iters, 300);
  EXPECT_EQ(cfg.grid[0].noise.scenario, NoiseScenario::kRademacher);
  EXPECT_EQ(cfg.grid[1].noise.sigma_high, 2.0);
  EXPECT_EQ(*cfg.grid[1].delta, 4.5);
  const nlohmann::json back = cfg;
  EXPECT_EQ(config_from_json(back), cfg);

  nlohmann::json bad = j;
  bad["replicate"] = 3;
  EXPECT_EQ(code_of([&] { config_from_json(bad); }), ErrorCode::kInvalidArgument);
  bad = j;
  bad["methods"] = nlohmann::json::array();
  EXPECT_EQ(code_of([&] { config_from_json(bad); }), ErrorCode::kInvalidArgument);
  bad = j;
  bad["grid"][0]["n"] = "many";
  EXPECT_EQ(code_of([&] { config_from_json(bad); }), ErrorCode::kInvalidArgument);

  TempDir dir;
  EXPECT_EQ(load_config(dir.file("c.json", j.dump())), cfg);
  EXPECT_EQ(code_of([&] { load_config(dir.file("bad.json", "{")); }), ErrorCode::kParseError);
}

TEST(ReportIo, JsonRoundTripAndByteIdenticalOutputs) {
  const ExperimentConfig cfg = small_config();
  const ExperimentReport report = run_experiment(cfg, {2, {}});
  const nlohmann::json j = report_to_json(report);
  EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), report);

  TempDir dir;
  const auto first = emit_outputs(report, dir.path() / "a");
  const auto second = emit_outputs(run_experiment(cfg, {1, {}}), dir.path() / "b");
  ASSERT_EQ(first.size(), 4u);
  for (const char* name : {"results.csv", "replicates.csv", "report.json"})
    EXPECT_EQ(slurp(dir.path() / "a" / name), slurp(dir.path() / "b" / name)) << name;

  const std::string results = slurp(dir.path() / "a" / "results.csv");
  // Header plus one row per (cell, method).
  EXPECT_EQ(std::count(results.begin(), results.end(), '\n'), 1 + 2 * 3);
  const std::string reps = slurp(dir.path() / "a" / "replicates.csv");
  EXPECT_EQ(std::count(reps.begin(), reps.end(), '\n'), 1 + 2 * 3 * 4);
  EXPECT_EQ(code_of([&] { report_from_json(nlohmann::json{{"schema", "other"}}); }),
            ErrorCode::kInvalidArgument);
}

TEST(ReportIo, CsvHelpers) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  for (double v : {0.1, 1.0 / 3.0, 16.240789, 1e-300, 12345678.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(ReportIo, UnwritableDirectory) {
  TempDir dir;
  const auto blocker = dir.file("blocker", "x");
  const ExperimentReport report;
  EXPECT_EQ(code_of([&] { emit_outputs(report, blocker / "sub"); }), ErrorCode::kIo);
}

}  // namespace
}  // namespace ihgmm
