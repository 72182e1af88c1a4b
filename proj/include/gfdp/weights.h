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

#ifndef GFDP_WEIGHTS_H_
#define GFDP_WEIGHTS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace gfdp {

// Largest n for which an n x n (or wider) dense matrix is materialized unless
// the caller raises the cap.
inline constexpr std::int64_t kDefaultDenseCap = 8192;

enum class Family { kCounting, kSliding, kStriped, kExpDecay, kPolyDecay, kTable };

std::string_view FamilyName(Family family);
Family ParseFamily(std::string_view name);

// A weight function f on {0, ..., n-1} together with the stream length n.
//
// Named families:
//   Counting          f(k) = 1
//   Sliding(W)        f(k) = 1 for k < W, else 0 (W ones per column)
//   Striped(b)        f(k) = 1 when b divides k, else 0
//   ExpDecay(alpha)   f(k) = alpha^k,      alpha in (0, 1]
//   PolyDecay(alpha)  f(k) = (k+1)^-alpha, alpha > 0
//   Table             user values, zero-padded or truncated to n
struct WeightSpec {
  Family family = Family::kCounting;
  std::int64_t n = 1;
  std::int64_t window = 0;  // Sliding
  std::int64_t stripe = 0;  // Striped
  double alpha = 0.0;       // ExpDecay, PolyDecay
  std::vector<double> table;

  static WeightSpec Counting(std::int64_t n);
  static WeightSpec Sliding(std::int64_t n, std::int64_t window);
  static WeightSpec Striped(std::int64_t n, std::int64_t stripe);
  static WeightSpec ExpDecay(std::int64_t n, double alpha);
  static WeightSpec PolyDecay(std::int64_t n, double alpha);
  static WeightSpec Table(std::int64_t n, std::vector<double> values);

  // Throws ParameterError when the spec violates its invariants.
  void Validate() const;

  // Same family and parameters at a different horizon. A window or stripe
  // longer than the new horizon is shortened to it.
  WeightSpec WithHorizon(std::int64_t horizon) const;

  // Horizon used for factorization. Equal to n except for Striped(b) with
  // b not dividing n, where n is rounded up to the next multiple of b.
  std::int64_t FactorHorizon() const;

  // True for Table specs carrying a negative value, which are outside the
  // non-negative scope of the upper bound.
  bool OutsideNonNegativeScope() const;

  // Short identifier such as "sliding(W=16)".
  std::string Name() const;
};

// f(0), ..., f(length-1). `length` defaults to spec.n.
std::vector<double> Coefficients(const WeightSpec& spec);
std::vector<double> Coefficients(const WeightSpec& spec, std::int64_t length);

// The lower-triangular Toeplitz workload M_f, M[i][j] = f(i-j) for i >= j.
struct Workload {
  std::int64_t n = 0;
  Eigen::MatrixXd entries;
};

Workload BuildMatrix(const WeightSpec& spec,
                     std::int64_t dense_cap = kDefaultDenseCap);

// Lower-triangular Toeplitz matrix with first column `coefficients`.
Eigen::MatrixXd LowerToeplitz(std::span<const double> coefficients);

}  // namespace gfdp

#endif  // GFDP_WEIGHTS_H_
