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

#include "gfdp/norms.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "gfdp/io.h"

namespace gfdp {
namespace {

constexpr double kPi = std::numbers::pi;

// sum_{i=1}^{n} csc((2i-1) pi / denominator)
double CscSum(std::int64_t n, double denominator) {
  double sum = 0.0;
  for (std::int64_t i = 1; i <= n; ++i) {
    sum += 1.0 / std::sin(static_cast<double>(2 * i - 1) * kPi / denominator);
  }
  return sum;
}

double PowerOfN(std::int64_t n, PNorm p) {
  return std::pow(static_cast<double>(n), p.inverse());
}

}  // namespace

PNorm PNorm::Finite(double p) {
  Require(std::isfinite(p) && p >= 2.0, "p must be in [2, inf]");
  return PNorm(p, false);
}

PNorm PNorm::Parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return Infinity();
  char* end = nullptr;
  const std::string copy(text);
  const double p = std::strtod(copy.c_str(), &end);
  Require(!copy.empty() && end == copy.c_str() + copy.size(),
          "p must be a number or 'inf', got '" + copy + "'");
  return Finite(p);
}

double PNorm::value() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : p_;
}

std::string PNorm::ToString() const {
  return infinite_ ? "inf" : FormatDouble(p_);
}

double TracePFromRowEnergies(std::span<const double> row_energies, PNorm p) {
  if (row_energies.empty()) return 0.0;
  if (p.is_infinite()) {
    return std::sqrt(*std::max_element(row_energies.begin(), row_energies.end()));
  }
  const double half = p.value() / 2.0;
  double sum = 0.0;
  for (double energy : row_energies) sum += std::pow(energy, half);
  return std::pow(sum, p.inverse());
}

double GammaUpperFormula(std::span<const Complex> m_vals, PNorm p) {
  Require(!m_vals.empty() && m_vals.size() % 2 == 0,
          "spectrum must have even length 2n");
  const auto n = static_cast<std::int64_t>(m_vals.size() / 2);
  double sum = 0.0;
  for (const Complex& value : m_vals) sum += std::abs(value);
  return PowerOfN(n, p) * sum / (2.0 * static_cast<double>(n));
}

double CountingClosedForm(std::int64_t n) {
  Require(n >= 1, "n must be at least 1");
  return 0.5 + CscSum(n, 2.0 * static_cast<double>(n)) / (2.0 * static_cast<double>(n));
}

double CountingLogBound(double n) {
  Require(n > 0.0, "n must be positive");
  return 1.0 + std::log(2.0 * n / kPi) / kPi;
}

double LowerMatousek(double n) {
  Require(n >= 1.0, "n must be at least 1");
  return (std::log((2.0 * n + 1.0) / 3.0) + 2.0) / kPi;
}

double LowerMathias(std::int64_t n) {
  Require(n >= 1, "n must be at least 1");
  const double nd = static_cast<double>(n);
  return (nd + 1.0) / (2.0 * nd * nd) * CscSum(n, 2.0 * nd);
}

double LowerMathiasPrinted(std::int64_t n) {
  Require(n >= 1, "n must be at least 1");
  const double nd = static_cast<double>(n);
  return (nd + 1.0) / (2.0 * nd) * CscSum(n, 2.0 * nd);
}

double CountingSchattenOne(std::int64_t n) {
  Require(n >= 1, "n must be at least 1");
  return 0.5 * CscSum(n, 4.0 * static_cast<double>(n) + 2.0);
}

double LowerSchatten(std::int64_t n, PNorm p) {
  return PowerOfN(n, p) / static_cast<double>(n) * CountingSchattenOne(n);
}

double LowerSchattenAsymptotic(std::int64_t n, PNorm p) {
  Require(n >= 1, "n must be at least 1");
  const double nd = static_cast<double>(n);
  return PowerOfN(n, p) * (2.0 / kPi + std::log((2.0 * nd + 1.0) / 5.0) / kPi +
                           std::log(2.0 * nd + 1.0) / (2.0 * nd * kPi));
}

double SlidingUpper(std::int64_t n, std::int64_t window) {
  Require(n >= 1 && window >= 1 && window <= n, "window must be in [1, n]");
  const std::int64_t order = 2 * n;
  double sum = static_cast<double>(window);
  for (std::int64_t l = 1; l < order; ++l) {
    sum += std::abs((1.0 - UnitRoot(window * l, order)) / (1.0 - UnitRoot(l, order)));
  }
  return sum / static_cast<double>(order);
}

SlidingBounds SlidingBoundsFor(std::int64_t n, std::int64_t window) {
  return {SlidingUpper(n, window),
          std::max(LowerMathias(window), LowerMatousek(static_cast<double>(window)))};
}

double StripedUpper(std::int64_t n, std::int64_t stripe) {
  Require(n >= 1 && stripe >= 1 && stripe <= n, "stripe must be in [1, n]");
  return CountingClosedForm((n + stripe - 1) / stripe);
}

double BaselineSqrtBound(double n) {
  Require(n >= 1.0, "n must be at least 1");
  return 1.0 + (std::numbers::egamma + std::log(n)) / kPi;
}

BoundReport MakeBoundReport(const Factorization& fact, PNorm p) {
  const WeightSpec& spec = fact.spec;
  const std::int64_t n = spec.n;
  const double scale = PowerOfN(n, p);

  BoundReport report;
  report.spec = spec.Name();
  report.n = n;
  report.horizon = fact.horizon;
  report.p = p;
  // Every row of the n-row pattern factor has the same energy, so the bound
  // at horizon N restricts to n^(1/p) times the p = inf value.
  report.formula_upper = scale * GammaUpperFormula(fact.profile.m_vals, PNorm::Infinity());

  if (fact.triangular) {
    report.achieved = TracePFromRowEnergies(
                          {fact.triangular->trace_profile.data(),
                           static_cast<std::size_t>(fact.triangular->trace_profile.size())},
                          p) *
                      fact.triangular->sensitivity;
  } else {
    const double sensitivity = fact.real.Sensitivity();
    report.achieved = scale * sensitivity * sensitivity;
  }

  switch (spec.family) {
    case Family::kCounting:
      report.closed_form = scale * CountingClosedForm(n);
      report.lower["mathias"] = LowerMathias(n);
      report.lower["matousek"] = LowerMatousek(static_cast<double>(n));
      report.lower["schatten"] = LowerSchatten(n, p);
      report.baseline["prior_constructive"] = scale * BaselineSqrtBound(static_cast<double>(n));
      report.baseline["log_bound"] = scale * CountingLogBound(static_cast<double>(n));
      report.baseline["schatten_asymptotic"] = LowerSchattenAsymptotic(n, p);
      break;
    case Family::kSliding: {
      const SlidingBounds bounds = SlidingBoundsFor(n, spec.window);
      report.closed_form = scale * bounds.upper;
      report.lower["sliding_thm61"] = bounds.lower;
      break;
    }
    case Family::kStriped: {
      const std::int64_t blocks = (n + spec.stripe - 1) / spec.stripe;
      report.closed_form = scale * StripedUpper(n, spec.stripe);
      report.lower["mathias"] = LowerMathias(blocks);
      report.lower["matousek"] = LowerMatousek(static_cast<double>(blocks));
      report.baseline["prior_constructive"] =
          scale * BaselineSqrtBound(static_cast<double>(n) / static_cast<double>(spec.stripe));
      break;
    }
    case Family::kExpDecay:
    case Family::kPolyDecay:
    case Family::kTable:
      break;
  }

  if (fact.horizon != n) {
    report.flags.push_back("horizon_rounded_to_" + std::to_string(fact.horizon));
  }
  if (spec.OutsideNonNegativeScope()) report.flags.push_back("outside_nonnegative_scope");
  report.flags.push_back(fact.real.thin() ? "real_factors_thin" : "real_factors_full");
  report.flags.push_back(fact.triangular ? "achieved_from_triangular"
                                         : "achieved_from_pattern");
  return report;
}

nlohmann::json ToJson(const BoundReport& report) {
  nlohmann::json j;
  j["spec"] = report.spec;
  j["n"] = report.n;
  j["horizon"] = report.horizon;
  j["p"] = report.p.ToString();
  j["formula_upper"] = report.formula_upper;
  j["achieved"] = report.achieved;
  j["closed_form"] = report.closed_form ? nlohmann::json(*report.closed_form)
                                        : nlohmann::json(nullptr);
  j["lower"] = report.lower;
  j["baseline"] = report.baseline;
  j["flags"] = report.flags;
  return j;
}

}  // namespace gfdp
