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

#include "gfdp/evaluator.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <thread>

#include "gfdp/errors.h"
#include "gfdp/io.h"
#include "gfdp/rng.h"

namespace gfdp {
namespace {

struct Moments {
  double mean = 0.0;
  double standard_error = 0.0;
};

Moments MeanAndError(std::span<const double> values) {
  const double count = static_cast<double>(values.size());
  Moments m;
  m.mean = PairwiseSum(values) / count;
  if (values.size() < 2) return m;
  std::vector<double> squares(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    squares[i] = (values[i] - m.mean) * (values[i] - m.mean);
  }
  const double variance = PairwiseSum(squares) / (count - 1.0);
  m.standard_error = std::sqrt(variance / count);
  return m;
}

}  // namespace

double PairwiseSum(std::span<const double> values) {
  if (values.size() <= 8) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return PairwiseSum(values.first(half)) + PairwiseSum(values.subspan(half));
}

std::vector<ErrorEstimate> EstimateErrors(const Eigen::MatrixXd& left,
                                          double noise_std,
                                          std::span<const PNorm> ps,
                                          const EvaluatorOptions& options) {
  Require(options.trials >= 1, "trials must be at least 1");
  Require(options.threads >= 1, "threads must be at least 1");
  Require(std::isfinite(noise_std) && noise_std >= 0.0,
          "noise standard deviation must be non-negative");
  const auto trials = static_cast<std::size_t>(options.trials);
  // per_trial[k][i]: ||left z_i||_p^p for finite p, max |left z_i| for inf.
  std::vector<std::vector<double>> per_trial(ps.size(), std::vector<double>(trials));

  auto run_range = [&](std::size_t begin, std::size_t end) {
    Eigen::VectorXd z(left.cols());
    Eigen::VectorXd error(left.rows());
    for (std::size_t i = begin; i < end; ++i) {
      GaussianSampler sampler(DeriveSeed(options.seed, i));
      for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = noise_std * sampler.Next();
      error.noalias() = left * z;
      for (std::size_t k = 0; k < ps.size(); ++k) {
        if (ps[k].is_infinite()) {
          per_trial[k][i] = error.size() == 0 ? 0.0 : error.cwiseAbs().maxCoeff();
        } else {
          per_trial[k][i] = error.cwiseAbs().array().pow(ps[k].value()).sum();
        }
      }
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(options.threads), trials);
  if (workers <= 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (trials + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(trials, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& worker : pool) worker.join();
  }

  std::vector<ErrorEstimate> estimates;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    ErrorEstimate estimate;
    estimate.p = ps[k];
    const Moments moments = MeanAndError(per_trial[k]);
    const double largest = *std::max_element(per_trial[k].begin(), per_trial[k].end());
    if (ps[k].is_infinite()) {
      estimate.value = moments.mean;
      estimate.standard_error = moments.standard_error;
      estimate.max_over_trials = largest;
    } else {
      const double inv = ps[k].inverse();
      estimate.value = std::pow(moments.mean, inv);
      estimate.standard_error =
          moments.mean > 0.0
              ? inv * std::pow(moments.mean, inv - 1.0) * moments.standard_error
              : 0.0;
      estimate.max_over_trials = std::pow(largest, inv);
    }
    if (options.keep_per_trial) estimate.per_trial = std::move(per_trial[k]);
    estimates.push_back(std::move(estimate));
  }
  return estimates;
}

double EmpiricalErr(const Eigen::MatrixXd& left, double noise_std, PNorm p,
                    int trials, std::uint64_t seed, int threads) {
  const PNorm ps[] = {p};
  EvaluatorOptions options;
  options.trials = trials;
  options.seed = seed;
  options.threads = threads;
  return EstimateErrors(left, noise_std, ps, options).front().value;
}

double TheoreticalBound(double gamma, double sigma, PNorm p, std::int64_t n) {
  Require(n >= 1, "n must be at least 1");
  const double log_factor = std::sqrt(std::log(static_cast<double>(n)));
  const double factor = p.is_infinite() ? log_factor : std::min(p.value(), log_factor);
  return sigma * gamma * factor;
}

std::vector<CompareRow> Compare(const CompareConfig& config) {
  Require(!config.p_grid.empty(), "p grid must be non-empty");
  const double sigma = Sigma(config.params);
  std::vector<CompareRow> rows;
  for (const WeightSpec& base : config.specs) {
    for (std::int64_t n : config.n_grid) {
      const WeightSpec spec = base.WithHorizon(n);
      const Factorization fact = Factorize(spec, config.mode);
      const Eigen::MatrixXd left = config.mode == Mode::kTriangular
                                       ? fact.triangular->left
                                       : fact.real.MaterializeLeft();
      const double sensitivity = config.mode == Mode::kTriangular
                                     ? fact.triangular->sensitivity
                                     : fact.real.Sensitivity();
      const std::vector<ErrorEstimate> estimates =
          EstimateErrors(left, sigma * sensitivity, config.p_grid, config.evaluator);
      for (std::size_t k = 0; k < config.p_grid.size(); ++k) {
        CompareRow row;
        row.bounds = MakeBoundReport(fact, config.p_grid[k]);
        ErrorReport& error = row.error;
        error.spec = row.bounds.spec;
        error.n = n;
        error.p = config.p_grid[k];
        error.trials = config.evaluator.trials;
        error.seed = config.evaluator.seed;
        error.empirical_err = estimates[k].value;
        error.standard_error = estimates[k].standard_error;
        error.max_over_trials = estimates[k].max_over_trials;
        error.bound = TheoreticalBound(row.bounds.formula_upper, sigma, error.p, n);
        error.ratio = error.bound > 0.0 ? error.empirical_err / error.bound
                                        : (error.empirical_err > 0.0 ? INFINITY : 0.0);
        error.per_trial = estimates[k].per_trial;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

namespace {

std::string Optional(const std::optional<double>& value) {
  return value ? FormatDouble(*value) : std::string();
}

std::string Lookup(const std::map<std::string, double>& map, const std::string& key) {
  const auto it = map.find(key);
  return it == map.end() ? std::string() : FormatDouble(it->second);
}

}  // namespace

void WriteCompareCsv(std::ostream& out, std::span<const CompareRow> rows) {
  out << "spec,n,p,formula_upper,achieved,closed_form,lower_mathias,"
         "lower_matousek,lower_schatten,lower_sliding_thm61,baseline_prior,"
         "baseline_log_bound,empirical_err,standard_error,bound,ratio\n";
  for (const CompareRow& row : rows) {
    const BoundReport& b = row.bounds;
    const ErrorReport& e = row.error;
    out << b.spec << ',' << b.n << ',' << b.p.ToString() << ','
        << FormatDouble(b.formula_upper) << ',' << FormatDouble(b.achieved) << ','
        << Optional(b.closed_form) << ',' << Lookup(b.lower, "mathias") << ','
        << Lookup(b.lower, "matousek") << ',' << Lookup(b.lower, "schatten") << ','
        << Lookup(b.lower, "sliding_thm61") << ','
        << Lookup(b.baseline, "prior_constructive") << ','
        << Lookup(b.baseline, "log_bound") << ',' << FormatDouble(e.empirical_err)
        << ',' << FormatDouble(e.standard_error) << ',' << FormatDouble(e.bound)
        << ',' << FormatDouble(e.ratio) << '\n';
  }
}

nlohmann::json CompareToJson(std::span<const CompareRow> rows) {
  nlohmann::json array = nlohmann::json::array();
  for (const CompareRow& row : rows) {
    const ErrorReport& e = row.error;
    nlohmann::json error = {{"spec", e.spec},
                            {"n", e.n},
                            {"p", e.p.ToString()},
                            {"trials", e.trials},
                            {"seed", e.seed},
                            {"empirical_err", e.empirical_err},
                            {"standard_error", e.standard_error},
                            {"max_over_trials", e.max_over_trials},
                            {"bound", e.bound},
                            {"ratio", e.ratio}};
    if (!e.per_trial.empty()) error["per_trial"] = e.per_trial;
    array.push_back({{"bounds", ToJson(row.bounds)}, {"error", std::move(error)}});
  }
  return array;
}

void WritePlotData(std::ostream& out, std::span<const CompareRow> rows,
                   double sigma) {
  out << "spec,n,p,bound,empirical,lower\n";
  for (const CompareRow& row : rows) {
    std::string lower;
    if (!row.bounds.lower.empty()) {
      double largest = 0.0;
      for (const auto& [name, value] : row.bounds.lower) largest = std::max(largest, value);
      lower = FormatDouble(sigma * largest);
    }
    out << row.bounds.spec << ',' << row.bounds.n << ',' << row.bounds.p.ToString()
        << ',' << FormatDouble(row.error.bound) << ','
        << FormatDouble(row.error.empirical_err) << ',' << lower << '\n';
  }
}

}  // namespace gfdp
