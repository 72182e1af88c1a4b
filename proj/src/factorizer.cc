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

#include "gfdp/factorizer.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gfdp/errors.h"

namespace gfdp {

PatternFactorization::PatternFactorization(std::int64_t rows, ComplexVector b_vals)
    : rows_(rows), b_vals_(std::move(b_vals)) {
  Require(rows >= 1, "pattern factorization needs at least one row");
  Require(b_vals_.size() >= 2 * static_cast<std::size_t>(rows) &&
              b_vals_.size() % 2 == 0,
          "group order must be even and at least 2 * rows");
}

const Complex& PatternFactorization::Group(std::int64_t offset) const {
  const std::int64_t order = this->order();
  std::int64_t r = offset % order;
  if (r < 0) r += order;
  return b_vals_[static_cast<std::size_t>(r)];
}

Complex PatternFactorization::Left(std::int64_t i, std::int64_t j) const {
  return Group(j - i);
}

Complex PatternFactorization::Right(std::int64_t j, std::int64_t k) const {
  return Group(k - j);
}

double PatternFactorization::GroupEnergy() const {
  double energy = 0.0;
  for (const Complex& b : b_vals_) energy += std::norm(b);
  return energy;
}

Eigen::MatrixXcd PatternFactorization::MaterializeLeft() const {
  Eigen::MatrixXcd left(rows_, order());
  for (Eigen::Index i = 0; i < left.rows(); ++i) {
    for (Eigen::Index j = 0; j < left.cols(); ++j) left(i, j) = Left(i, j);
  }
  return left;
}

Eigen::MatrixXcd PatternFactorization::MaterializeRight() const {
  Eigen::MatrixXcd right(order(), rows_);
  for (Eigen::Index j = 0; j < right.rows(); ++j) {
    for (Eigen::Index k = 0; k < right.cols(); ++k) right(j, k) = Right(j, k);
  }
  return right;
}

RealFactorization::RealFactorization(PatternFactorization pattern)
    : pattern_(std::move(pattern)) {
  thin_ = std::all_of(pattern_.b_vals().begin(), pattern_.b_vals().end(),
                      [](const Complex& b) {
                        return std::abs(b.imag()) < kThinTolerance;
                      });
}

std::int64_t RealFactorization::width() const {
  return thin_ ? pattern_.order() : 2 * pattern_.order();
}

double RealFactorization::Left(std::int64_t i, std::int64_t j) const {
  const std::int64_t order = pattern_.order();
  return j < order ? pattern_.Left(i, j).real() : pattern_.Left(i, j - order).imag();
}

double RealFactorization::Right(std::int64_t j, std::int64_t k) const {
  const std::int64_t order = pattern_.order();
  return j < order ? pattern_.Right(j, k).real()
                   : -pattern_.Right(j - order, k).imag();
}

double RealFactorization::LeftRowDot(std::int64_t i, std::span<const double> z) const {
  Require(static_cast<std::int64_t>(z.size()) == width(),
          "noise vector length must equal the factor width");
  const std::int64_t order = pattern_.order();
  const ComplexVector& b = pattern_.b_vals();
  double sum = 0.0;
  // Row i visits b[(j - i) mod order] for j = 0..order-1.
  std::int64_t offset = ((-i) % order + order) % order;
  for (std::int64_t j = 0; j < order; ++j) {
    const Complex& value = b[static_cast<std::size_t>(offset)];
    sum += value.real() * z[static_cast<std::size_t>(j)];
    if (!thin_) sum += value.imag() * z[static_cast<std::size_t>(order + j)];
    if (++offset == order) offset = 0;
  }
  return sum;
}

double RealFactorization::Sensitivity() const {
  double energy = 0.0;
  for (const Complex& b : pattern_.b_vals()) {
    energy += b.real() * b.real();
    if (!thin_) energy += b.imag() * b.imag();
  }
  return std::sqrt(energy);
}

Eigen::MatrixXd RealFactorization::MaterializeLeft() const {
  Eigen::MatrixXd left(rows(), width());
  for (Eigen::Index i = 0; i < left.rows(); ++i) {
    for (Eigen::Index j = 0; j < left.cols(); ++j) left(i, j) = Left(i, j);
  }
  return left;
}

Eigen::MatrixXd RealFactorization::MaterializeRight() const {
  Eigen::MatrixXd right(width(), rows());
  for (Eigen::Index j = 0; j < right.rows(); ++j) {
    for (Eigen::Index k = 0; k < right.cols(); ++k) right(j, k) = Right(j, k);
  }
  return right;
}

Mode ParseMode(std::string_view name) {
  if (name == "pattern") return Mode::kPattern;
  if (name == "triangular") return Mode::kTriangular;
  throw ParameterError("unknown mode '" + std::string(name) + "'");
}

PatternFactorization BuildPattern(const RootsProfile& profile, std::int64_t rows) {
  Require(static_cast<std::int64_t>(profile.b_vals.size()) == 2 * profile.n,
          "profile must hold 2n values of b_f");
  Require(rows >= 1 && rows <= profile.n, "rows must be in [1, n]");
  return PatternFactorization(rows, profile.b_vals);
}

RealFactorization Realify(const PatternFactorization& pattern) {
  return RealFactorization(pattern);
}

TriangularFactorization Triangularize(const RealFactorization& real,
                                      std::int64_t dense_cap) {
  const std::int64_t n = real.rows();
  if (n > dense_cap) {
    throw CapacityError("triangular factorization of n = " + std::to_string(n) +
                        " exceeds the dense cap of " + std::to_string(dense_cap));
  }
  const Eigen::MatrixXd left_wide = real.MaterializeLeft();
  const Eigen::MatrixXd right_tall = real.MaterializeRight();
  if (!left_wide.allFinite() || !right_tall.allFinite()) {
    throw NumericError("non-finite entries in the real factors");
  }

  // left_wide^T is width x n with width >= 2n, so the thin Q has n columns.
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(left_wide.transpose());
  Eigen::MatrixXd upper =
      qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  Eigen::MatrixXd projected = right_tall;
  projected.applyOnTheLeft(qr.householderQ().adjoint());
  Eigen::MatrixXd right = projected.topRows(n);

  // Flipping the sign of row k of T and column k of Q leaves Q T unchanged.
  for (Eigen::Index k = 0; k < n; ++k) {
    if (upper(k, k) < 0.0) {
      upper.row(k) *= -1.0;
      right.row(k) *= -1.0;
    }
  }

  TriangularFactorization result;
  result.left = upper.transpose();
  result.right = std::move(right);
  result.sensitivity = result.right.colwise().norm().maxCoeff();
  result.trace_profile = result.left.rowwise().squaredNorm();
  if (!result.left.allFinite() || !result.right.allFinite()) {
    throw NumericError("decomposition produced non-finite values");
  }
  return result;
}

Factorization Factorize(const WeightSpec& spec, Mode mode,
                        const FactorizeOptions& options) {
  spec.Validate();
  const std::int64_t horizon = spec.FactorHorizon();
  if (mode == Mode::kTriangular && spec.n > options.dense_cap) {
    throw CapacityError("triangular mode needs n <= " +
                        std::to_string(options.dense_cap) + ", got n = " +
                        std::to_string(spec.n) + "; use pattern mode");
  }
  const std::vector<double> padded = Coefficients(spec, horizon);
  RootsProfile profile = ComputeProfile(padded);
  PatternFactorization pattern = BuildPattern(profile, spec.n);
  RealFactorization real = Realify(pattern);
  std::optional<TriangularFactorization> triangular;
  if (mode == Mode::kTriangular) triangular = Triangularize(real, options.dense_cap);
  return Factorization{spec,
                       horizon,
                       Coefficients(spec),
                       std::move(profile),
                       std::move(pattern),
                       std::move(real),
                       std::move(triangular)};
}

}  // namespace gfdp
