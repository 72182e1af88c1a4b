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

#include "gfdp/weights.h"

#include <algorithm>
#include <cmath>

#include "gfdp/errors.h"
#include "gfdp/io.h"

namespace gfdp {

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kCounting:
      return "counting";
    case Family::kSliding:
      return "sliding";
    case Family::kStriped:
      return "striped";
    case Family::kExpDecay:
      return "expdecay";
    case Family::kPolyDecay:
      return "polydecay";
    case Family::kTable:
      return "table";
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  for (Family family : {Family::kCounting, Family::kSliding, Family::kStriped,
                        Family::kExpDecay, Family::kPolyDecay, Family::kTable}) {
    if (FamilyName(family) == name) return family;
  }
  throw ParameterError("unknown weight family '" + std::string(name) + "'");
}

WeightSpec WeightSpec::Counting(std::int64_t n) {
  WeightSpec spec;
  spec.n = n;
  spec.Validate();
  return spec;
}

WeightSpec WeightSpec::Sliding(std::int64_t n, std::int64_t window) {
  WeightSpec spec;
  spec.family = Family::kSliding;
  spec.n = n;
  spec.window = window;
  spec.Validate();
  return spec;
}

WeightSpec WeightSpec::Striped(std::int64_t n, std::int64_t stripe) {
  WeightSpec spec;
  spec.family = Family::kStriped;
  spec.n = n;
  spec.stripe = stripe;
  spec.Validate();
  return spec;
}

WeightSpec WeightSpec::ExpDecay(std::int64_t n, double alpha) {
  WeightSpec spec;
  spec.family = Family::kExpDecay;
  spec.n = n;
  spec.alpha = alpha;
  spec.Validate();
  return spec;
}

WeightSpec WeightSpec::PolyDecay(std::int64_t n, double alpha) {
  WeightSpec spec;
  spec.family = Family::kPolyDecay;
  spec.n = n;
  spec.alpha = alpha;
  spec.Validate();
  return spec;
}

WeightSpec WeightSpec::Table(std::int64_t n, std::vector<double> values) {
  WeightSpec spec;
  spec.family = Family::kTable;
  spec.n = n;
  spec.table = std::move(values);
  spec.Validate();
  return spec;
}

void WeightSpec::Validate() const {
  Require(n >= 1, "n must be at least 1");
  switch (family) {
    case Family::kCounting:
      break;
    case Family::kSliding:
      Require(window >= 1 && window <= n, "sliding window W must be in [1, n]");
      break;
    case Family::kStriped:
      Require(stripe >= 1 && stripe <= n, "stripe b must be in [1, n]");
      break;
    case Family::kExpDecay:
      Require(std::isfinite(alpha) && alpha > 0.0 && alpha <= 1.0,
              "expdecay alpha must be in (0, 1]");
      break;
    case Family::kPolyDecay:
      Require(std::isfinite(alpha) && alpha > 0.0,
              "polydecay alpha must be positive");
      break;
    case Family::kTable:
      Require(std::all_of(table.begin(), table.end(),
                          [](double v) { return std::isfinite(v); }),
              "weight table values must be finite");
      break;
  }
}

WeightSpec WeightSpec::WithHorizon(std::int64_t horizon) const {
  WeightSpec copy = *this;
  copy.n = horizon;
  copy.window = std::min(window, horizon);
  copy.stripe = std::min(stripe, horizon);
  copy.Validate();
  return copy;
}

std::int64_t WeightSpec::FactorHorizon() const {
  if (family != Family::kStriped) return n;
  return (n + stripe - 1) / stripe * stripe;
}

bool WeightSpec::OutsideNonNegativeScope() const {
  if (family != Family::kTable) return false;
  const auto used = std::min<std::size_t>(table.size(), static_cast<std::size_t>(n));
  return std::any_of(table.begin(), table.begin() + used,
                     [](double v) { return v < 0.0; });
}

std::string WeightSpec::Name() const {
  std::string name(FamilyName(family));
  switch (family) {
    case Family::kSliding:
      return name + "(W=" + std::to_string(window) + ")";
    case Family::kStriped:
      return name + "(b=" + std::to_string(stripe) + ")";
    case Family::kExpDecay:
    case Family::kPolyDecay:
      return name + "(alpha=" + FormatDouble(alpha) + ")";
    case Family::kTable:
      return name + "(len=" + std::to_string(table.size()) + ")";
    case Family::kCounting:
      break;
  }
  return name;
}

std::vector<double> Coefficients(const WeightSpec& spec) {
  return Coefficients(spec, spec.n);
}

std::vector<double> Coefficients(const WeightSpec& spec, std::int64_t length) {
  spec.Validate();
  Require(length >= 1, "coefficient length must be at least 1");
  std::vector<double> f(static_cast<std::size_t>(length), 0.0);
  for (std::int64_t k = 0; k < length; ++k) {
    double& value = f[static_cast<std::size_t>(k)];
    switch (spec.family) {
      case Family::kCounting:
        value = 1.0;
        break;
      case Family::kSliding:
        value = k < spec.window ? 1.0 : 0.0;
        break;
      case Family::kStriped:
        value = k % spec.stripe == 0 ? 1.0 : 0.0;
        break;
      case Family::kExpDecay:
        value = std::pow(spec.alpha, static_cast<double>(k));
        break;
      case Family::kPolyDecay:
        value = std::pow(static_cast<double>(k + 1), -spec.alpha);
        break;
      case Family::kTable:
        value = static_cast<std::size_t>(k) < spec.table.size()
                    ? spec.table[static_cast<std::size_t>(k)]
                    : 0.0;
        break;
    }
  }
  return f;
}

Eigen::MatrixXd LowerToeplitz(std::span<const double> coefficients) {
  const auto n = static_cast<Eigen::Index>(coefficients.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = coefficients[i - j];
  }
  return m;
}

Workload BuildMatrix(const WeightSpec& spec, std::int64_t dense_cap) {
  spec.Validate();
  if (spec.n > dense_cap) {
    throw CapacityError("n = " + std::to_string(spec.n) +
                        " exceeds the dense cap of " + std::to_string(dense_cap) +
                        "; use pattern mode");
  }
  const std::vector<double> f = Coefficients(spec);
  return Workload{spec.n, LowerToeplitz(f)};
}

}  // namespace gfdp
