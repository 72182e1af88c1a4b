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

#ifndef GFDP_FACTORIZER_H_
#define GFDP_FACTORIZER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gfdp/polyeval.h"
#include "gfdp/weights.h"

namespace gfdp {

// Complex factors read off the cyclic group of order 2N generated by omega:
//   left(i, j)  = b_vals[(j - i) mod 2N],  0 <= i < rows, 0 <= j < 2N
//   right(j, k) = b_vals[(k - j) mod 2N],  0 <= j < 2N,   0 <= k < rows
// The product left * right is the rows x rows principal block of M_f. Only
// b_vals is stored; entries are generated on demand.
class PatternFactorization {
 public:
  PatternFactorization(std::int64_t rows, ComplexVector b_vals);

  std::int64_t rows() const { return rows_; }
  std::int64_t order() const { return static_cast<std::int64_t>(b_vals_.size()); }
  const ComplexVector& b_vals() const { return b_vals_; }

  Complex Left(std::int64_t i, std::int64_t j) const;
  Complex Right(std::int64_t j, std::int64_t k) const;

  // Squared 2-norm shared by every row of left and every column of right.
  double GroupEnergy() const;

  Eigen::MatrixXcd MaterializeLeft() const;
  Eigen::MatrixXcd MaterializeRight() const;

 private:
  const Complex& Group(std::int64_t offset) const;

  std::int64_t rows_;
  ComplexVector b_vals_;
};

// Real factors [Re L | Im L] and [Re R ; -Im R]. When every b value is real
// to within kThinTolerance the imaginary blocks are dropped (thin variant).
class RealFactorization {
 public:
  static constexpr double kThinTolerance = 1e-12;

  explicit RealFactorization(PatternFactorization pattern);

  std::int64_t rows() const { return pattern_.rows(); }
  std::int64_t width() const;
  bool thin() const { return thin_; }
  const PatternFactorization& pattern() const { return pattern_; }

  double Left(std::int64_t i, std::int64_t j) const;
  double Right(std::int64_t j, std::int64_t k) const;

  // <left row i, z> for z of length width(), in O(width) time.
  double LeftRowDot(std::int64_t i, std::span<const double> z) const;

  // Largest column 2-norm of the right factor.
  double Sensitivity() const;

  Eigen::MatrixXd MaterializeLeft() const;
  Eigen::MatrixXd MaterializeRight() const;

 private:
  PatternFactorization pattern_;
  bool thin_;
};

// Square factors with a lower-triangular left factor.
struct TriangularFactorization {
  Eigen::MatrixXd left;
  Eigen::MatrixXd right;
  double sensitivity = 0.0;         // largest column 2-norm of right
  Eigen::VectorXd trace_profile;    // diagonal of left * left^T
};

enum class Mode { kPattern, kTriangular };

Mode ParseMode(std::string_view name);

struct FactorizeOptions {
  std::int64_t dense_cap = kDefaultDenseCap;
};

PatternFactorization BuildPattern(const RootsProfile& profile, std::int64_t rows);
RealFactorization Realify(const PatternFactorization& pattern);

// Householder decomposition left^T = Q T (Q with orthonormal columns, T upper
// triangular with non-negative diagonal), then L = T^T and R = Q^T right.
TriangularFactorization Triangularize(const RealFactorization& real,
                                      std::int64_t dense_cap = kDefaultDenseCap);

// Output of the full pipeline for one spec.
struct Factorization {
  WeightSpec spec;
  std::int64_t horizon = 0;          // N, padded for Striped when b does not divide n
  std::vector<double> coefficients;  // f(0..n-1)
  RootsProfile profile;              // computed at the horizon N
  PatternFactorization pattern;
  RealFactorization real;
  std::optional<TriangularFactorization> triangular;
};

Factorization Factorize(const WeightSpec& spec, Mode mode,
                        const FactorizeOptions& options = {});

}  // namespace gfdp

#endif  // GFDP_FACTORIZER_H_
