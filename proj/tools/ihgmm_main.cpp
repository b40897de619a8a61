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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ihgmm/cluster/spectral.hpp"
#include "ihgmm/error.hpp"
#include "ihgmm/harness/builtin_configs.hpp"
#include "ihgmm/harness/dataset.hpp"
#include "ihgmm/harness/experiment.hpp"
#include "ihgmm/harness/report_io.hpp"
#include "ihgmm/model/diagnostics.hpp"
#include "ihgmm/model/serialize.hpp"

namespace {

using namespace ihgmm;
namespace fs = std::filesystem;

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> methods;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) methods.push_back(method_from_string(item));
  }
  if (methods.empty()) throw Error(ErrorCode::kInvalidArgument, "no methods selected");
  return methods;
}

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw Error(ErrorCode::kInvalidArgument, "expected true or false, got '" + text + "'");
}

void print_summary(const ExperimentReport& report) {
  std::printf("%-5s %6s %6s %3s %6s %5s %-4s %-10s %10s %8s %5s\n", "cell", "n", "p", "K", "R",
              "beta", "nois", "method", "mean_rate", "exact", "fail");
  for (const CellReport& cell : report.cells) {
    for (const MethodCellResult& m : cell.methods) {
      const CellSpec& s = cell.spec;
      std::printf("%-5lld %6lld %6lld %3d %6g %5g %-4s %-10s %10.5f %8.3f %5lld\n",
                  static_cast<long long>(cell.index), static_cast<long long>(s.n),
                  static_cast<long long>(s.p), s.K, s.R, s.beta,
                  std::string(to_string(s.noise.scenario)).c_str(),
                  std::string(to_string(m.method)).c_str(), m.summary.mean_rate,
                  m.summary.exact_proportion, static_cast<long long>(m.failures));
    }
  }
}

struct ExperimentArgs {
  std::string target;
  std::optional<int> replicates;
  std::optional<std::uint64_t> seed;
  std::string out = "results";
  std::optional<std::string> methods;
  int threads = 0;
  bool full = false;
  bool no_diagnostics = false;
  bool quiet = false;
};

int run_experiment_command(const ExperimentArgs& args) {
  ExperimentConfig cfg = is_builtin_config(args.target) ? builtin_config(args.target, args.full)
                                                        : load_config(args.target);
  if (args.replicates) cfg.replicates = *args.replicates;
  if (args.seed) cfg.base_seed = *args.seed;
  if (args.methods) cfg.methods = parse_methods(*args.methods);
  if (args.no_diagnostics) cfg.diagnostics = false;
  validate_config(cfg);

  RunOptions options;
  options.threads = args.threads;
  if (!args.quiet) {
    options.progress = [](Index done, Index total) {
      std::fprintf(stderr, "\r%lld/%lld replicates", static_cast<long long>(done),
                   static_cast<long long>(total));
      if (done == total) std::fputc('\n', stderr);
    };
  }
  const ExperimentReport report = run_experiment(cfg, options);
  const auto written = emit_outputs(report, args.out);
  print_summary(report);
  for (const auto& path : written) std::printf("wrote %s\n", path.string().c_str());
  return 0;
}

struct BenchmarkArgs {
  std::string data;
  std::string label_col;
  int k = 0;
  std::string standardize = "true";
  std::optional<std::string> scale;
  std::string methods = "ihsc,psc,kmeans";
  int restarts = 20;
  std::uint64_t seed = 1;
  std::optional<std::string> out;
};

int run_benchmark_command(const BenchmarkArgs& args) {
  DatasetSpec spec;
  spec.path = args.data;
  spec.label_column = args.label_col;
  spec.expected_K = args.k;
  spec.scaling = args.scale ? scaling_from_string(*args.scale)
                            : (parse_bool(args.standardize) ? Scaling::kZScore : Scaling::kNone);
  const std::vector<Method> methods = parse_methods(args.methods);
  KMeansConfig cfg;
  cfg.restarts = args.restarts;
  cfg.rng = Rng(args.seed);
  validate_kmeans_config(cfg);

  const BenchmarkResult result = run_benchmark(spec, methods, cfg);
  for (const auto& w : result.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::printf("%s: n=%lld p=%lld K=%d scaling=%s\n", result.dataset.c_str(),
              static_cast<long long>(result.n), static_cast<long long>(result.p), result.K,
              std::string(to_string(spec.scaling)).c_str());
  for (const BenchmarkRow& row : result.rows) {
    std::printf("  %-10s %12s  rate %.4f  %.2fs\n", std::string(to_string(row.method)).c_str(),
                row.fraction().c_str(), row.eval.rate, row.seconds);
  }
  if (args.out) {
    const fs::path out = *args.out;
    write_text_file(out, out.extension() == ".json" ? benchmark_to_json(result).dump(2) + "\n"
                                                    : benchmark_csv(result));
    std::printf("wrote %s\n", out.string().c_str());
  }
  return 0;
}

struct ModelArgs {
  Index n = 200;
  Index p = 100;
  int K = 3;
  double R = 1.0;
  double beta = 1.0;
  std::optional<double> C;
  std::optional<double> delta;
  std::string noise = "None";
  std::uint64_t seed = 1;
};

Dataset make_instance(const ModelArgs& args) {
  CellSpec cell;
  cell.n = args.n;
  cell.p = args.p;
  cell.K = args.K;
  cell.R = args.R;
  cell.beta = args.beta;
  cell.C = args.C;
  cell.delta = args.delta;
  cell.noise.scenario = noise_scenario_from_string(args.noise);
  validate_cell(cell);
  return generate_dataset(cell.params(), Rng(args.seed));
}

void add_model_options(CLI::App* cmd, ModelArgs& args) {
  cmd->add_option("--n", args.n, "Observations")->capture_default_str();
  cmd->add_option("--p", args.p, "Features")->capture_default_str();
  cmd->add_option("--K", args.K, "Clusters")->capture_default_str();
  cmd->add_option("--R", args.R, "Scale heterogeneity omega_max / omega_min")->capture_default_str();
  cmd->add_option("--beta", args.beta, "Cluster balance in (0, 1]")->capture_default_str();
  auto* c = cmd->add_option("--C", args.C, "Separation constant (default 3)");
  auto* d = cmd->add_option("--delta", args.delta, "Explicit center separation");
  c->excludes(d);
  cmd->add_option("--seed", args.seed, "Generator seed")->capture_default_str();
}

int run_diagnose_command(const std::optional<std::string>& data, const ModelArgs& args) {
  GroundTruth truth;
  if (data) {
    std::ifstream in(*data);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + *data);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kParseError, *data + ": " + e.what());
    }
    truth = j.get<GroundTruth>();
  } else {
    ModelArgs noiseless = args;
    noiseless.noise = "None";
    truth = make_instance(noiseless).truth;
  }
  const nlohmann::json out = compute_diagnostics(truth);
  std::printf("%s\n", out.dump(2).c_str());
  return 0;
}

int run_generate_command(const ModelArgs& args, const std::string& truth_out,
                         const std::optional<std::string>& data_out) {
  const Dataset data = make_instance(args);
  write_text_file(truth_out, nlohmann::json(data.truth).dump() + "\n");
  std::printf("wrote %s\n", truth_out.c_str());
  if (data_out) {
    std::ostringstream csv;
    for (Index f = 0; f < data.x.rows(); ++f) csv << 'x' << f + 1 << ',';
    csv << "label\r\n";
    for (Index i = 0; i < data.x.cols(); ++i) {
      for (Index f = 0; f < data.x.rows(); ++f) csv << format_double(data.x(f, i)) << ',';
      csv << data.truth.labels.z[static_cast<std::size_t>(i)] + 1 << "\r\n";
    }
    write_text_file(*data_out, csv.str());
    std::printf("wrote %s\n", data_out->c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustering under the individual-heterogeneity Gaussian mixture model"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ihgmm 0.1.0");

  auto* experiment = app.add_subcommand("experiment", "Simulation experiments");
  experiment->require_subcommand(1);
  auto* exp_list = experiment->add_subcommand("list", "List the built-in experiment grids");
  auto* exp_run = experiment->add_subcommand("run", "Run a built-in grid or a JSON config");
  ExperimentArgs exp_args;
  exp_run->add_option("target", exp_args.target, "Built-in name or path to config.json")->required();
  exp_run->add_option("--replicates", exp_args.replicates, "Replicates per cell");
  exp_run->add_option("--seed", exp_args.seed, "Base seed");
  exp_run->add_option("--out", exp_args.out, "Output directory")->capture_default_str();
  exp_run->add_option("--methods", exp_args.methods, "Comma list of ihsc, psc, kmeans, oracle");
  exp_run->add_option("--threads", exp_args.threads, "Worker threads (0 = all cores)");
  exp_run->add_flag("--full", exp_args.full, "200 replicates per cell for built-in grids");
  exp_run->add_flag("--no-diagnostics", exp_args.no_diagnostics, "Skip per-replicate diagnostics");
  exp_run->add_flag("-q,--quiet", exp_args.quiet, "No progress output");

  auto* benchmark = app.add_subcommand("benchmark", "Real-data benchmarks");
  benchmark->require_subcommand(1);
  auto* bench_run = benchmark->add_subcommand("run", "Cluster a labelled CSV and count errors");
  BenchmarkArgs bench_args;
  bench_run->add_option("--data", bench_args.data, "CSV file with a header row")->required();
  bench_run->add_option("--label-col", bench_args.label_col, "Label column name or 0-based index")
      ->required();
  bench_run->add_option("--k", bench_args.k, "Expected number of classes (0 = any)");
  auto* standardize = bench_run->add_option("--standardize", bench_args.standardize,
                                            "true or false (z-score features)");
  bench_run->add_option("--scale", bench_args.scale, "none, zscore or minmax")->excludes(standardize);
  bench_run->add_option("--methods", bench_args.methods, "Comma list of methods")
      ->capture_default_str();
  bench_run->add_option("--restarts", bench_args.restarts, "k-means restarts")->capture_default_str();
  bench_run->add_option("--seed", bench_args.seed, "k-means seed")->capture_default_str();
  bench_run->add_option("--out", bench_args.out, "Write the table (.csv or .json)");

  auto* diagnose = app.add_subcommand("diagnose", "Print structural diagnostics");
  std::optional<std::string> diag_data;
  ModelArgs diag_args;
  diagnose->add_option("--data", diag_data, "Ground-truth JSON; without it a noiseless instance is drawn");
  add_model_options(diagnose, diag_args);

  auto* generate = app.add_subcommand("generate", "Draw one synthetic data set");
  ModelArgs gen_args;
  std::string truth_out = "truth.json";
  std::optional<std::string> data_out;
  add_model_options(generate, gen_args);
  generate->add_option("--noise", gen_args.noise, "GHe, SHe or None")->capture_default_str();
  generate->add_option("--truth-out", truth_out, "Ground-truth JSON path")->capture_default_str();
  generate->add_option("--data-out", data_out, "Observations as CSV (one row per observation)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*exp_list) {
      for (const auto& name : builtin_config_names()) {
        const ExperimentConfig cfg = builtin_config(name);
        std::printf("%-10s %3zu cells\n", name.c_str(), cfg.grid.size());
      }
      return 0;
    }
    if (*exp_run) return run_experiment_command(exp_args);
    if (*bench_run) return run_benchmark_command(bench_args);
    if (*diagnose) return run_diagnose_command(diag_data, diag_args);
    if (*generate) return run_generate_command(gen_args, truth_out, data_out);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s (row %zu, column %zu)\n", e.what(), e.row(), e.column());
    return kExitValidation;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return is_validation_error(e.code()) ? kExitValidation : kExitRuntime;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return 0;
}
