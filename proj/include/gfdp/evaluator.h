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

#ifndef GFDP_EVALUATOR_H_
#define GFDP_EVALUATOR_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gfdp/mechanism.h"
#include "gfdp/norms.h"
#include "json.hpp"

namespace gfdp {

struct EvaluatorOptions {
  int trials = 500;
  std::uint64_t seed = 0;
  int threads = 1;
  bool keep_per_trial = false;
};

// Monte-Carlo estimate of the l_p error of a released stream. The error of
// the matrix mechanism is left * z whatever the input, so no input appears.
// For finite p the estimate is (mean_i ||left z_i||_p^p)^(1/p); for p = inf it
// is mean_i max_t |(left z_i)_t|.
struct ErrorEstimate {
  PNorm p = PNorm::Infinity();
  double value = 0.0;
  double standard_error = 0.0;   // delta-method standard error of `value`
  double max_over_trials = 0.0;  // largest per-trial ||left z_i||_p
  std::vector<double> per_trial;
};

// One set of trials shared across all exponents in `ps`. Trial i draws its
// noise from DeriveSeed(options.seed, i) and per-trial values are combined by
// pairwise summation, so the result does not depend on options.threads.
std::vector<ErrorEstimate> EstimateErrors(const Eigen::MatrixXd& left,
                                          double noise_std,
                                          std::span<const PNorm> ps,
                                          const EvaluatorOptions& options);

double EmpiricalErr(const Eigen::MatrixXd& left, double noise_std, PNorm p,
                    int trials, std::uint64_t seed, int threads = 1);

// sigma * gamma * min(p, sqrt(ln n)); sqrt(ln n) alone for p = inf.
double TheoreticalBound(double gamma, double sigma, PNorm p, std::int64_t n);

// Sum of `values` by recursive halving.
double PairwiseSum(std::span<const double> values);

struct ErrorReport {
  std::string spec;
  std::int64_t n = 0;
  PNorm p = PNorm::Infinity();
  int trials = 0;
  std::uint64_t seed = 0;
  double empirical_err = 0.0;
  double standard_error = 0.0;
  double max_over_trials = 0.0;
  double bound = 0.0;
  double ratio = 0.0;  // empirical / bound; above 1 is a bound violation
  std::vector<double> per_trial;
};

struct CompareRow {
  BoundReport bounds;
  ErrorReport error;
};

struct CompareConfig {
  std::vector<WeightSpec> specs;  // n is replaced by each grid value
  std::vector<std::int64_t> n_grid;
  std::vector<PNorm> p_grid;
  PrivacyParams params;
  Mode mode = Mode::kTriangular;
  EvaluatorOptions evaluator;
};

std::vector<CompareRow> Compare(const CompareConfig& config);

void WriteCompareCsv(std::ostream& out, std::span<const CompareRow> rows);
nlohmann::json CompareToJson(std::span<const CompareRow> rows);
// Columns spec,n,p,bound,empirical,lower for external plotting. `lower` is
// the largest populated lower bound scaled to the error (sigma * lower), or
// empty when the spec has none.
void WritePlotData(std::ostream& out, std::span<const CompareRow> rows,
                   double sigma);

}  // namespace gfdp

#endif  // GFDP_EVALUATOR_H_
