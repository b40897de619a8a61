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

#include "ihgmm/harness/report_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "ihgmm/error.hpp"
#include "ihgmm/model/serialize.hpp"

namespace ihgmm {
namespace {

using nlohmann::json;

constexpr std::string_view kReportSchema = "ihgmm.report/1";
constexpr std::string_view kSeedRule =
    "replicate r of cell c: data from Philox(base_seed, r).split(c).split(0), "
    "method m from Philox(base_seed, r).split(c).split(1 + m)";

void check_keys(const json& j, std::initializer_list<std::string_view> allowed,
                std::string_view where) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, std::string(where) + " must be an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (auto key : allowed) known = known || item.key() == key;
    if (!known) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown key '" + item.key() + "' in " + std::string(where));
    }
  }
}

std::string method_name(Method m) { return std::string(to_string(m)); }

}  // namespace

void to_json(json& j, const CellSpec& cell) {
  j = json{{"n", cell.n}, {"p", cell.p}, {"K", cell.K}, {"R", cell.R},
           {"beta", cell.beta}, {"noise", cell.noise}};
  if (cell.C) j["C"] = *cell.C;
  if (cell.delta) j["delta"] = *cell.delta;
}

void from_json(const json& j, CellSpec& cell) {
  check_keys(j, {"n", "p", "K", "R", "beta", "noise", "C", "delta"}, "grid cell");
  cell = CellSpec{};
  cell.n = j.at("n").get<Index>();
  cell.p = j.at("p").get<Index>();
  cell.K = j.at("K").get<int>();
  cell.R = j.value("R", 1.0);
  cell.beta = j.value("beta", 1.0);
  if (j.contains("noise")) {
    const json& noise = j.at("noise");
    if (noise.is_string()) {
      cell.noise.scenario = noise_scenario_from_string(noise.get<std::string>());
    } else {
      check_keys(noise, {"scenario", "sigma_low", "sigma_high", "eta"}, "noise");
      cell.noise = noise.get<NoiseSpec>();
    }
  }
  if (j.contains("C")) cell.C = j.at("C").get<double>();
  if (j.contains("delta")) cell.delta = j.at("delta").get<double>();
}

void to_json(json& j, const ExperimentConfig& cfg) {
  std::vector<std::string> methods;
  for (Method m : cfg.methods) methods.push_back(method_name(m));
  j = json{{"name", cfg.name},
           {"replicates", cfg.replicates},
           {"base_seed", cfg.base_seed},
           {"methods", methods},
           {"kmeans", {{"restarts", cfg.kmeans_restarts},
                       {"max_iters", cfg.kmeans_max_iters},
                       {"tol", cfg.kmeans_tol}}},
           {"diagnostics", cfg.diagnostics},
           {"grid", cfg.grid}};
}

void from_json(const json& j, ExperimentConfig& cfg) {
  check_keys(j, {"name", "replicates", "base_seed", "methods", "kmeans", "diagnostics", "grid"},
             "experiment config");
  cfg = ExperimentConfig{};
  cfg.name = j.value("name", std::string("custom"));
  cfg.replicates = j.value("replicates", cfg.replicates);
  cfg.base_seed = j.value("base_seed", cfg.base_seed);
  if (j.contains("methods")) {
    cfg.methods.clear();
    for (const auto& m : j.at("methods")) cfg.methods.push_back(method_from_string(m.get<std::string>()));
  }
  if (j.contains("kmeans")) {
    const json& km = j.at("kmeans");
    check_keys(km, {"restarts", "max_iters", "tol"}, "kmeans");
    cfg.kmeans_restarts = km.value("restarts", cfg.kmeans_restarts);
    cfg.kmeans_max_iters = km.value("max_iters", cfg.kmeans_max_iters);
    cfg.kmeans_tol = km.value("tol", cfg.kmeans_tol);
  }
  cfg.diagnostics = j.value("diagnostics", cfg.diagnostics);
  cfg.grid = j.at("grid").get<std::vector<CellSpec>>();
}

void to_json(json& j, const ReplicateOutcome& o) {
  j = json{{"replicate", o.replicate}, {"failed", o.failed}, {"loss", o.loss},
           {"rate", o.rate}, {"exact", o.exact}};
  if (o.failed) j["error"] = o.error;
}

void from_json(const json& j, ReplicateOutcome& o) {
  o.replicate = j.at("replicate").get<int>();
  o.failed = j.at("failed").get<bool>();
  o.error = j.value("error", std::string());
  o.loss = j.at("loss").get<Index>();
  o.rate = j.at("rate").get<double>();
  o.exact = j.at("exact").get<bool>();
}

void to_json(json& j, const MethodCellResult& r) {
  j = json{{"method", method_name(r.method)}, {"summary", r.summary},
           {"failures", r.failures}, {"replicates", r.replicates}};
}

void from_json(const json& j, MethodCellResult& r) {
  r.method = method_from_string(j.at("method").get<std::string>());
  r.summary = j.at("summary").get<EvalSummary>();
  r.failures = j.at("failures").get<Index>();
  r.replicates = j.at("replicates").get<std::vector<ReplicateOutcome>>();
}

void to_json(json& j, const DiagnosticsSummary& s) {
  j = json{{"count", s.count}, {"delta", s.delta}, {"beta", s.beta},
           {"tau", s.tau},     {"kappa", s.kappa}, {"mu", s.mu}};
}

void from_json(const json& j, DiagnosticsSummary& s) {
  s.count = j.at("count").get<Index>();
  s.delta = j.at("delta").get<double>();
  s.beta = j.at("beta").get<double>();
  s.tau = j.at("tau").get<double>();
  s.kappa = j.at("kappa").get<double>();
  s.mu = j.at("mu").get<double>();
}

void to_json(json& j, const CellReport& c) {
  j = json{{"index", c.index}, {"spec", c.spec}, {"delta", c.delta},
           {"data_failures", c.data_failures}, {"methods", c.methods}};
  if (c.diagnostics) j["diagnostics"] = *c.diagnostics;
}

void from_json(const json& j, CellReport& c) {
  c.index = j.at("index").get<Index>();
  c.spec = j.at("spec").get<CellSpec>();
  c.delta = j.at("delta").get<double>();
  c.data_failures = j.at("data_failures").get<Index>();
  c.diagnostics.reset();
  if (j.contains("diagnostics")) c.diagnostics = j.at("diagnostics").get<DiagnosticsSummary>();
  c.methods = j.at("methods").get<std::vector<MethodCellResult>>();
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig cfg;
  try {
    cfg = j.get<ExperimentConfig>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("experiment config: ") + e.what());
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

json report_to_json(const ExperimentReport& report) {
  return json{{"schema", kReportSchema},
              {"config", report.config},
              {"seeding", {{"base_seed", report.config.base_seed}, {"rule", kSeedRule}}},
              {"cells", report.cells}};
}

ExperimentReport report_from_json(const json& j) {
  ExperimentReport report;
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw Error(ErrorCode::kInvalidArgument, "unsupported report schema");
    }
    report.config = j.at("config").get<ExperimentConfig>();
    report.cells = j.at("cells").get<std::vector<CellReport>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("report: ") + e.what());
  }
  return report;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return ec == std::errc() ? std::string(buf.data(), ptr) : std::string("nan");
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string results_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "experiment,cell,n,p,K,R,beta,noise,delta,method,replicates,completed,failures,"
         "mean_rate,rate_se,exact_proportion,exact_count,mean_delta,mean_beta,mean_tau,"
         "mean_kappa,mean_mu\r\n";
  for (const CellReport& cell : report.cells) {
    for (const MethodCellResult& m : cell.methods) {
      const CellSpec& s = cell.spec;
      out << csv_field(report.config.name) << ',' << cell.index << ',' << s.n << ',' << s.p << ','
          << s.K << ',' << format_double(s.R) << ',' << format_double(s.beta) << ','
          << to_string(s.noise.scenario) << ',' << format_double(cell.delta) << ','
          << to_string(m.method) << ',' << m.replicates.size() << ',' << m.summary.count << ','
          << m.failures << ',' << format_double(m.summary.mean_rate) << ','
          << format_double(m.summary.rate_se) << ',' << format_double(m.summary.exact_proportion)
          << ',' << m.summary.exact_count;
      if (cell.diagnostics && cell.diagnostics->count > 0) {
        const DiagnosticsSummary& d = *cell.diagnostics;
        out << ',' << format_double(d.delta) << ',' << format_double(d.beta) << ','
            << format_double(d.tau) << ',' << format_double(d.kappa) << ',' << format_double(d.mu);
      } else {
        out << ",,,,,";
      }
      out << "\r\n";
    }
  }
  return out.str();
}

std::string replicates_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "cell,method,replicate,failed,loss,rate,exact,error\r\n";
  for (const CellReport& cell : report.cells)
    for (const MethodCellResult& m : cell.methods)
      for (const ReplicateOutcome& r : m.replicates) {
        out << cell.index << ',' << to_string(m.method) << ',' << r.replicate << ','
            << (r.failed ? 1 : 0) << ',' << r.loss << ',' << format_double(r.rate) << ','
            << (r.exact ? 1 : 0) << ',' << csv_field(r.error) << "\r\n";
      }
  return out.str();
}

std::string timing_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "cell,method,method_seconds,cell_seconds\r\n";
  for (std::size_t c = 0; c < report.timing.size() && c < report.cells.size(); ++c) {
    const CellTiming& t = report.timing[c];
    for (std::size_t m = 0; m < t.method_seconds.size() && m < report.config.methods.size(); ++m) {
      out << c << ',' << to_string(report.config.methods[m]) << ','
          << format_double(t.method_seconds[m]) << ',' << format_double(t.wall_seconds) << "\r\n";
    }
  }
  return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path.string());
}

std::vector<std::filesystem::path> emit_outputs(const ExperimentReport& report,
                                                const std::filesystem::path& dir,
                                                const OutputFormats& formats) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  auto emit = [&](const char* name, const std::string& text) {
    write_text_file(dir / name, text);
    written.push_back(dir / name);
  };
  if (formats.csv) {
    emit("results.csv", results_csv(report));
    emit("replicates.csv", replicates_csv(report));
    emit("timing.csv", timing_csv(report));
  }
  if (formats.json) emit("report.json", report_to_json(report).dump(2) + "\n");
  return written;
}

std::string benchmark_csv(const BenchmarkResult& result) {
  std::ostringstream out;
  out << "dataset,n,p,K,method,errors,rate,fraction,seconds\r\n";
  for (const BenchmarkRow& row : result.rows) {
    out << csv_field(result.dataset) << ',' << result.n << ',' << result.p << ',' << result.K << ','
        << to_string(row.method) << ',' << row.eval.loss << ',' << format_double(row.eval.rate)
        << ',' << row.fraction() << ',' << format_double(row.seconds) << "\r\n";
  }
  return out.str();
}

json benchmark_to_json(const BenchmarkResult& result) {
  json rows = json::array();
  for (const BenchmarkRow& row : result.rows) {
    rows.push_back({{"method", method_name(row.method)},
                    {"errors", row.eval.loss},
                    {"fraction", row.fraction()},
                    {"eval", row.eval},
                    {"seconds", row.seconds}});
  }
  return json{{"dataset", result.dataset}, {"n", result.n},  {"p", result.p},
              {"K", result.K},             {"rows", rows}, {"warnings", result.warnings}};
}

}  // namespace ihgmm
