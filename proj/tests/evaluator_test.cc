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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "gfdp/errors.h"
#include "gfdp/oracle.h"

namespace gfdp {
namespace {

TEST(PairwiseSumTest, ExactOnSmallIntegers) {
  std::vector<double> values(1000);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<double>(i);
  EXPECT_EQ(PairwiseSum(values), 499500.0);
  EXPECT_EQ(PairwiseSum({}), 0.0);
}

TEST(TheoreticalBoundTest, FrozenValues) {
  const double sigma = 7.49363839780877;
  EXPECT_NEAR(TheoreticalBound(2.74634654749568, sigma, PNorm::Infinity(), 256),
              48.4624978071306, 1e-9);
  EXPECT_NEAR(TheoreticalBound(1.0, 1.0, PNorm::Finite(3), 2), 0.832554611157698, 1e-12);
  EXPECT_NEAR(TheoreticalBound(1.0, 1.0, PNorm::Finite(2), 1 << 20), 2.0, 1e-15);
}

TEST(EstimateErrorsTest, IdentityLeftFactorMatchesGaussianMoments) {
  // For left = I and std s, E||z||_2^2 = n s^2.
  const Eigen::MatrixXd left = Eigen::MatrixXd::Identity(50, 50);
  const PNorm ps[] = {PNorm::Finite(2)};
  EvaluatorOptions options;
  options.trials = 2000;
  options.seed = 3;
  const auto estimate = EstimateErrors(left, 2.0, ps, options);
  EXPECT_NEAR(estimate[0].value, std::sqrt(50.0) * 2.0, 4.0 * estimate[0].standard_error);
}

TEST(EstimateErrorsTest, ThreadCountDoesNotChangeResults) {
  const Factorization fact = Factorize(WeightSpec::Counting(40), Mode::kTriangular);
  const PNorm ps[] = {PNorm::Finite(2), PNorm::Finite(3), PNorm::Infinity()};
  EvaluatorOptions serial;
  serial.trials = 101;
  serial.seed = 77;
  EvaluatorOptions parallel = serial;
  parallel.threads = 4;
  const auto a = EstimateErrors(fact.triangular->left, 1.5, ps, serial);
  const auto b = EstimateErrors(fact.triangular->left, 1.5, ps, parallel);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(a[k].value, b[k].value);
    EXPECT_EQ(a[k].standard_error, b[k].standard_error);
    EXPECT_EQ(a[k].max_over_trials, b[k].max_over_trials);
  }
}

TEST(EstimateErrorsTest, DoublingTrialsStaysWithinThreeStandardErrors) {
  const Factorization fact = Factorize(WeightSpec::Sliding(64, 8), Mode::kTriangular);
  const PNorm ps[] = {PNorm::Finite(2), PNorm::Finite(3), PNorm::Infinity()};
  EvaluatorOptions options;
  options.trials = 500;
  options.seed = 11;
  const auto base = EstimateErrors(fact.triangular->left, 1.0, ps, options);
  options.trials = 1000;
  const auto doubled = EstimateErrors(fact.triangular->left, 1.0, ps, options);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_LE(std::abs(base[k].value - doubled[k].value), 3.0 * base[k].standard_error)
        << ps[k].ToString();
    EXPECT_GT(base[k].standard_error, 0.0);
  }
}

TEST(EstimateErrorsTest, KeepsPerTrialValuesOnRequest) {
  const Eigen::MatrixXd left = Eigen::MatrixXd::Identity(4, 4);
  const PNorm ps[] = {PNorm::Infinity()};
  EvaluatorOptions options;
  options.trials = 7;
  options.keep_per_trial = true;
  const auto estimate = EstimateErrors(left, 1.0, ps, options);
  ASSERT_EQ(estimate[0].per_trial.size(), 7u);
  EXPECT_EQ(*std::max_element(estimate[0].per_trial.begin(), estimate[0].per_trial.end()),
            estimate[0].max_over_trials);
  options.trials = 0;
  EXPECT_THROW(EstimateErrors(left, 1.0, ps, options), ParameterError);
}

TEST(CompareTest, FiniteMomentsStayBelowBound) {
  // The bound is checked for p in {2, 3} at n >= 8. At p = inf and at very
  // small n the log factor undercuts the Gaussian maximum.
  CompareConfig config;
  config.specs = oracle::Catalog(8, 2);
  config.n_grid = {8, 32, 128};
  config.p_grid = {PNorm::Finite(2), PNorm::Finite(3)};
  config.evaluator.trials = 300;
  config.evaluator.seed = 21;
  for (const CompareRow& row : Compare(config)) {
    EXPECT_GT(row.error.ratio, 0.0);
    EXPECT_LE(row.error.ratio, 1.0) << row.error.spec << " n=" << row.error.n
                                    << " p=" << row.error.p.ToString();
  }
}

TEST(CompareTest, CsvAndPlotDataShape) {
  CompareConfig config;
  config.specs = {WeightSpec::Counting(4), WeightSpec::Sliding(4, 2)};
  config.n_grid = {16};
  config.p_grid = {PNorm::Infinity()};
  config.evaluator.trials = 10;
  const auto rows = Compare(config);
  ASSERT_EQ(rows.size(), 2u);
  std::ostringstream csv, plot;
  WriteCompareCsv(csv, rows);
  WritePlotData(plot, rows, Sigma(config.params));
  const std::string table = csv.str();
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 3);
  EXPECT_EQ(plot.str().rfind("spec,n,p,bound,empirical,lower\n", 0), 0u);
  const nlohmann::json j = CompareToJson(rows);
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(rows[1].bounds.spec, "sliding(W=2)");
}

}  // namespace
}  // namespace gfdp
