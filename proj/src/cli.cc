//
// Copyright 2026 The GFDP Authors
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
//

#include "gfdp/cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "gfdp/errors.h"
#include "gfdp/evaluator.h"
#include "gfdp/factorizer.h"
#include "gfdp/io.h"
#include "gfdp/mechanism.h"
#include "gfdp/norms.h"
#include "gfdp/oracle.h"
#include "gfdp/weights.h"
#include "json.hpp"

namespace gfdp {
namespace {

namespace fs = std::filesystem;

// Raised when a verification identity fails; maps to exit code 3.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

struct WeightArgs {
  std::string weight = "counting";
  std::int64_t n = 64;
  std::int64_t window = 1;
  std::int64_t stripe = 1;
  double alpha = 0.9;
  std::string table;

  void Register(CLI::App& app, bool with_n = true) {
    app.add_option("--weight", weight, "counting|sliding|striped|expdecay|polydecay|table")
        ->capture_default_str();
    if (with_n) app.add_option("--n", n, "stream length")->capture_default_str();
    app.add_option("--window", window, "sliding window W")->capture_default_str();
    app.add_option("--stripe", stripe, "stripe b")->capture_default_str();
    app.add_option("--alpha", alpha, "decay parameter")->capture_default_str();
    app.add_option("--table", table, "CSV file of weights, one per line (header 'f')");
  }

  WeightSpec Build(std::int64_t horizon) const {
    switch (ParseFamily(weight)) {
      case Family::kCounting:
        return WeightSpec::Counting(horizon);
      case Family::kSliding:
        return WeightSpec::Sliding(horizon, window);
      case Family::kStriped:
        return WeightSpec::Striped(horizon, stripe);
      case Family::kExpDecay:
        return WeightSpec::ExpDecay(horizon, alpha);
      case Family::kPolyDecay:
        return WeightSpec::PolyDecay(horizon, alpha);
      case Family::kTable:
        Require(!table.empty(), "--weight table needs --table <csv>");
        return WeightSpec::Table(horizon, ReadColumnFile(table, "f"));
    }
    throw ParameterError("unreachable weight family");
  }
  WeightSpec Build() const { return Build(n); }
};

struct PrivacyArgs {
  double epsilon = 1.0;
  double delta = 1e-6;
  double clip = 1.0;
  std::string variant = "thm15";

  void Register(CLI::App& app) {
    app.add_option("--eps", epsilon, "privacy parameter epsilon")->capture_default_str();
    app.add_option("--delta", delta, "privacy parameter delta")->capture_default_str();
    app.add_option("--clip", clip, "clipping bound Delta")->capture_default_str();
    app.add_option("--sigma-variant", variant, "thm15|def28")->capture_default_str();
  }

  PrivacyParams Build() const {
    PrivacyParams params{epsilon, delta, clip, ParseSigmaVariant(variant)};
    params.Validate();
    return params;
  }
};

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& seed, std::ostream& err) {
  if (seed) return *seed;
  const std::uint64_t drawn = EntropySeed();
  err << "seed=" << drawn << '\n';
  return drawn;
}

std::ofstream OpenOutput(const fs::path& path, bool binary = false) {
  std::ofstream file(path, binary ? std::ios::binary : std::ios::out);
  if (!file) throw ParameterError("cannot write " + path.string());
  return file;
}

void WriteJson(const fs::path& path, const nlohmann::json& json) {
  auto file = OpenOutput(path);
  file << json.dump(2) << '\n';
}

void WriteMatrix(const fs::path& dir, const std::string& stem,
                 const Eigen::MatrixXd& matrix, const std::string& format) {
  if (format == "binary") {
    auto file = OpenOutput(dir / (stem + ".gfdp"), true);
    WriteMatrixBinary(file, matrix);
  } else {
    auto file = OpenOutput(dir / (stem + ".csv"));
    WriteMatrixCsv(file, matrix);
  }
}

int CommandFactorize(const WeightArgs& weights, const std::string& mode_name,
                     const std::string& out_dir, const std::string& format,
                     std::int64_t dense_cap, std::ostream& out) {
  Require(format == "csv" || format == "json" || format == "binary",
          "--format must be csv, json or binary");
  const WeightSpec spec = weights.Build();
  const Mode mode = ParseMode(mode_name);
  const Factorization fact = Factorize(spec, mode, FactorizeOptions{dense_cap});

  nlohmann::json meta = {{"spec", spec.Name()},
                         {"n", spec.n},
                         {"horizon", fact.horizon},
                         {"mode", mode_name},
                         {"real_thin", fact.real.thin()},
                         {"pattern_sensitivity", fact.real.Sensitivity()}};
  const bool dense = spec.n <= dense_cap;
  if (dense) {
    const Workload workload = BuildMatrix(spec, dense_cap);
    meta["residual_real"] = oracle::VerifyReconstruction(
        fact.real.MaterializeLeft(), fact.real.MaterializeRight(), workload);
    if (fact.triangular) {
      meta["sensitivity"] = fact.triangular->sensitivity;
      meta["residual_triangular"] = oracle::VerifyReconstruction(
          fact.triangular->left, fact.triangular->right, workload);
    }
  }

  if (!out_dir.empty()) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    WriteJson(dir / "profile.json", ProfileToJson(fact.profile));
    WriteJson(dir / "factorization.json", meta);
    if (format != "json" && dense) {
      WriteMatrix(dir, "workload", BuildMatrix(spec, dense_cap).entries, format);
      if (fact.triangular) {
        WriteMatrix(dir, "left", fact.triangular->left, format);
        WriteMatrix(dir, "right", fact.triangular->right, format);
      } else {
        WriteMatrix(dir, "left", fact.real.MaterializeLeft(), format);
        WriteMatrix(dir, "right", fact.real.MaterializeRight(), format);
      }
    }
  }
  out << meta.dump(2) << '\n';
  return kExitOk;
}

int CommandBounds(const WeightArgs& weights, const std::string& p_text,
                  const std::string& mode_name, const std::string& out_dir,
                  std::ostream& out) {
  const WeightSpec spec = weights.Build();
  const Factorization fact = Factorize(spec, ParseMode(mode_name));
  const nlohmann::json json = ToJson(MakeBoundReport(fact, PNorm::Parse(p_text)));
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    WriteJson(fs::path(out_dir) / "bounds.json", json);
  }
  out << json.dump(2) << '\n';
  return kExitOk;
}

struct SimulateArgs {
  std::string input;
  std::string synthetic = "uniform";
  std::string mode = "triangular";
  std::optional<std::uint64_t> seed;
  std::string out_dir;
};

int CommandSimulate(const WeightArgs& weights, const PrivacyArgs& privacy,
                    const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  const WeightSpec spec = weights.Build();
  const PrivacyParams params = privacy.Build();
  const Mode mode = ParseMode(args.mode);
  const std::uint64_t seed = ResolveSeed(args.seed, err);

  std::vector<double> stream = args.input.empty()
                                   ? SyntheticStream(args.synthetic, spec.n, params.clip, seed)
                                   : ReadColumnFile(args.input, "x");
  Require(static_cast<std::int64_t>(stream.size()) == spec.n,
          "input stream has " + std::to_string(stream.size()) + " values, expected n = " +
              std::to_string(spec.n));

  auto fact = std::make_shared<const Factorization>(Factorize(spec, mode));
  StreamState state = StreamState::Init(fact, mode, params, seed);
  for (double x : stream) state.Step(x);

  std::ostringstream csv;
  csv << "t,true,noised,error\n";
  double max_error = 0.0;
  double squared = 0.0;
  for (std::int64_t t = 0; t < state.n(); ++t) {
    const double truth = state.true_outputs()[static_cast<std::size_t>(t)];
    const double noised = state.outputs()[static_cast<std::size_t>(t)];
    const double error = noised - truth;
    max_error = std::max(max_error, std::abs(error));
    squared += error * error;
    csv << t << ',' << FormatDouble(truth) << ',' << FormatDouble(noised) << ','
        << FormatDouble(error) << '\n';
  }

  const double sigma = Sigma(params);
  const BoundReport bounds = MakeBoundReport(*fact, PNorm::Infinity());
  const nlohmann::json summary = {
      {"spec", spec.Name()},
      {"n", spec.n},
      {"mode", args.mode},
      {"seed", seed},
      {"epsilon", params.epsilon},
      {"delta", params.delta},
      {"clip", params.clip},
      {"sigma_variant", SigmaVariantName(params.variant)},
      {"sigma", sigma},
      {"sensitivity", state.sensitivity()},
      {"noise_std", state.noise_std()},
      {"adaptive_safe", state.adaptive_safe()},
      {"clipped_inputs", state.clipped_count()},
      {"max_abs_error", max_error},
      {"rmse", std::sqrt(squared / static_cast<double>(state.n()))},
      {"linf_bound", TheoreticalBound(bounds.formula_upper, sigma, PNorm::Infinity(), spec.n)}};

  if (args.out_dir.empty()) {
    out << csv.str();
  } else {
    const fs::path dir(args.out_dir);
    fs::create_directories(dir);
    auto file = OpenOutput(dir / "stream.csv");
    file << csv.str();
    WriteJson(dir / "summary.json", summary);
    out << summary.dump(2) << '\n';
  }
  return kExitOk;
}

int CommandVerify(std::int64_t n, std::int64_t cap, std::ostream& out) {
  const std::vector<oracle::VerifyRow> rows = oracle::RunVerifySuite(n, cap);
  bool all = true;
  out << "identity                          max_deviation           tolerance  result\n";
  for (const oracle::VerifyRow& row : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-32s  %-22s  %-9s  %s\n", row.identity.c_str(),
                  FormatDouble(row.deviation).c_str(), FormatDouble(row.tolerance).c_str(),
                  row.pass ? "PASS" : "FAIL");
    out << line;
    all = all && row.pass;
  }
  if (!all) throw VerificationFailure("one or more identities failed");
  return kExitOk;
}

struct CompareArgs {
  std::vector<std::string> weights;
  std::vector<std::int64_t> n_grid = {64, 256};
  std::vector<std::string> p_grid = {"2", "inf"};
  std::string mode = "triangular";
  int trials = 500;
  int threads = 1;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string format = "csv";
  bool plot_data = false;
};

int CommandCompare(const WeightArgs& base, const PrivacyArgs& privacy,
                   const CompareArgs& args, std::ostream& out, std::ostream& err) {
  Require(args.format == "csv" || args.format == "json", "--format must be csv or json");
  Require(!args.n_grid.empty(), "--n grid must not be empty");
  CompareConfig config;
  const std::int64_t first_n = args.n_grid.front();
  std::vector<std::string> families = args.weights;
  if (families.empty()) families = {"counting", "sliding", "striped"};
  for (const std::string& family : families) {
    WeightArgs copy = base;
    copy.weight = family;
    config.specs.push_back(copy.Build(std::max({first_n, base.window, base.stripe})));
  }
  config.n_grid = args.n_grid;
  for (const std::string& p : args.p_grid) config.p_grid.push_back(PNorm::Parse(p));
  config.params = privacy.Build();
  config.mode = ParseMode(args.mode);
  config.evaluator.trials = args.trials;
  config.evaluator.threads = args.threads;
  config.evaluator.seed = ResolveSeed(args.seed, err);

  const std::vector<CompareRow> rows = Compare(config);
  std::ostringstream table;
  if (args.format == "csv") {
    WriteCompareCsv(table, rows);
  } else {
    table << CompareToJson(rows).dump(2) << '\n';
  }
  std::ostringstream plot;
  if (args.plot_data) WritePlotData(plot, rows, Sigma(config.params));

  if (args.out_dir.empty()) {
    out << table.str() << plot.str();
  } else {
    const fs::path dir(args.out_dir);
    fs::create_directories(dir);
    auto file = OpenOutput(dir / (args.format == "csv" ? "compare.csv" : "compare.json"));
    file << table.str();
    WriteJson(dir / "compare_bundle.json", CompareToJson(rows));
    if (args.plot_data) {
      auto plot_file = OpenOutput(dir / "plot_data.csv");
      plot_file << plot.str();
    }
    out << "wrote " << rows.size() << " rows to " << dir.string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group-algebra factorization of weighted prefix-sum workloads"};
  app.require_subcommand(1);

  WeightArgs weights;
  PrivacyArgs privacy;

  std::string mode = "pattern";
  std::string out_dir;
  std::string format = "csv";
  std::int64_t dense_cap = kDefaultDenseCap;
  auto* factorize = app.add_subcommand("factorize", "compute and export factors");
  weights.Register(*factorize);
  factorize->add_option("--mode", mode, "pattern|triangular")->capture_default_str();
  factorize->add_option("--out", out_dir, "output directory");
  factorize->add_option("--format", format, "csv|json|binary")->capture_default_str();
  factorize->add_option("--dense-cap", dense_cap, "largest n materialized densely")
      ->capture_default_str();

  std::string p_text = "inf";
  auto* bounds = app.add_subcommand("bounds", "report upper and lower bounds");
  weights.Register(*bounds);
  bounds->add_option("--p", p_text, "2, 3, ... or inf")->capture_default_str();
  bounds->add_option("--mode", mode, "pattern|triangular")->capture_default_str();
  bounds->add_option("--out", out_dir, "output directory");

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand("simulate", "run the streaming mechanism");
  weights.Register(*simulate);
  privacy.Register(*simulate);
  simulate->add_option("--input", simulate_args.input, "stream CSV, one value per line");
  simulate->add_option("--synthetic", simulate_args.synthetic, "constant|uniform|spike")
      ->capture_default_str();
  simulate->add_option("--mode", simulate_args.mode, "pattern|triangular")
      ->capture_default_str();
  simulate->add_option("--seed", simulate_args.seed, "random seed");
  simulate->add_option("--out", simulate_args.out_dir, "output directory");

  std::int64_t verify_n = 32;
  std::int64_t verify_cap = oracle::kDefaultOracleCap;
  auto* verify = app.add_subcommand("verify", "check every identity with brute force");
  verify->add_option("--n", verify_n, "largest n checked")->capture_default_str();
  verify->add_option("--cap", verify_cap, "oracle size cap")->capture_default_str();

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "bounds and Monte-Carlo errors over a grid");
  weights.Register(*compare, /*with_n=*/false);
  privacy.Register(*compare);
  compare->add_option("--family", compare_args.weights, "families to include (repeatable)");
  compare->add_option("--n", compare_args.n_grid, "comma-separated n grid")
      ->delimiter(',')
      ->capture_default_str();
  compare->add_option("--p", compare_args.p_grid, "comma-separated p grid")
      ->delimiter(',')
      ->capture_default_str();
  compare->add_option("--mode", compare_args.mode, "pattern|triangular")->capture_default_str();
  compare->add_option("--trials", compare_args.trials, "Monte-Carlo trials")
      ->capture_default_str();
  compare->add_option("--threads", compare_args.threads, "worker threads")
      ->capture_default_str();
  compare->add_option("--seed", compare_args.seed, "random seed");
  compare->add_option("--out", compare_args.out_dir, "output directory");
  compare->add_option("--format", compare_args.format, "csv|json")->capture_default_str();
  compare->add_flag("--plot-data", compare_args.plot_data, "emit plot columns");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*factorize) return CommandFactorize(weights, mode, out_dir, format, dense_cap, out);
    if (*bounds) return CommandBounds(weights, p_text, mode, out_dir, out);
    if (*simulate) return CommandSimulate(weights, privacy, simulate_args, out, err);
    if (*verify) return CommandVerify(verify_n, verify_cap, out);
    if (*compare) return CommandCompare(weights, privacy, compare_args, out, err);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace gfdp
