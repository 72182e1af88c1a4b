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

#ifndef GFDP_NORMS_H_
#define GFDP_NORMS_H_

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gfdp/errors.h"
#include "gfdp/factorizer.h"
#include "gfdp/polyeval.h"
#include "json.hpp"

namespace gfdp {

// Exponent p in [2, inf]. Infinity is its own state, never a large float.
class PNorm {
 public:
  static PNorm Infinity() { return PNorm(0.0, true); }
  static PNorm Finite(double p);
  // "inf" (or "infinity") or a real >= 2.
  static PNorm Parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  // p itself; +inf for the infinite case.
  double value() const;
  // 1/p, which is 0 for p = inf.
  double inverse() const { return infinite_ ? 0.0 : 1.0 / p_; }
  std::string ToString() const;

  friend bool operator==(const PNorm&, const PNorm&) = default;

 private:
  PNorm(double p, bool infinite) : p_(p), infinite_(infinite) {}

  double p_;
  bool infinite_;
};

// (sum_i d_i^(p/2))^(1/p) for squared row norms d_i; max_i sqrt(d_i) at inf.
double TracePFromRowEnergies(std::span<const double> row_energies, PNorm p);

// Generalized p-trace: the p-norm of the row 2-norms of `m`.
template <typename Derived>
double TraceP(const Eigen::MatrixBase<Derived>& m, PNorm p) {
  const Eigen::VectorXd energies = m.rowwise().squaredNorm().template cast<double>();
  return TracePFromRowEnergies({energies.data(), static_cast<std::size_t>(energies.size())}, p);
}

// Largest column 2-norm (the 1->2 operator norm).
template <typename Derived>
double ColNorm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return std::sqrt(static_cast<double>(m.colwise().squaredNorm().maxCoeff()));
}

// Largest row 2-norm (the 2->inf operator norm).
template <typename Derived>
double RowNorm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return std::sqrt(static_cast<double>(m.rowwise().squaredNorm().maxCoeff()));
}

// (1 / (2 n^(1-1/p))) sum_k |m_vals[k]|, with 2n = m_vals.size().
double GammaUpperFormula(std::span<const Complex> m_vals, PNorm p);

// 1/2 + (1/2n) sum_{l=1}^{n} csc((2l-1) pi / 2n).
double CountingClosedForm(std::int64_t n);

// 1 + (1/pi) ln(2n/pi). Real argument so that non-integer n can be probed.
double CountingLogBound(double n);

// (ln((2n+1)/3) + 2) / pi.
double LowerMatousek(double n);

// ((n+1)/(2n^2)) sum_{i=1}^{n} csc((2i-1) pi / 2n). This is the reading
// consistent with the counting upper bound and tight at n = 1.
double LowerMathias(std::int64_t n);

// ((n+1)/(2n)) sum csc(...), as printed. It exceeds the counting upper bound
// already at n = 2 and is exposed only for comparison.
double LowerMathiasPrinted(std::int64_t n);

// Schatten-1 norm of the n x n counting matrix:
// (1/2) sum_{i=1}^{n} csc((2i-1) pi / (4n+2)).
double CountingSchattenOne(std::int64_t n);

// n^(1/p - 1) * CountingSchattenOne(n).
double LowerSchatten(std::int64_t n, PNorm p);

// n^(1/p) (2/pi + (1/pi) ln((2n+1)/5) + ln(2n+1)/(2 n pi)). Informational
// only; never asserted against achieved values.
double LowerSchattenAsymptotic(std::int64_t n, PNorm p);

// (1/2n) sum_l |(1 - omega^(W l)) / (1 - omega^l)|, the l = 0 term being W.
double SlidingUpper(std::int64_t n, std::int64_t window);

struct SlidingBounds {
  double upper = 0.0;
  double lower = 0.0;  // max(LowerMathias(W), LowerMatousek(W))
};
SlidingBounds SlidingBoundsFor(std::int64_t n, std::int64_t window);

// Counting bound at ceil(n/b).
double StripedUpper(std::int64_t n, std::int64_t stripe);

// 1 + (gamma + ln n) / pi, the prior constructive counting bound.
double BaselineSqrtBound(double n);

struct BoundReport {
  std::string spec;
  std::int64_t n = 0;
  std::int64_t horizon = 0;
  PNorm p = PNorm::Infinity();
  double formula_upper = 0.0;
  double achieved = 0.0;
  std::optional<double> closed_form;
  std::map<std::string, double> lower;
  std::map<std::string, double> baseline;
  std::vector<std::string> flags;
};

// Gathers every bound for the factorization's spec at exponent p. The
// achieved value comes from the triangular factors when present, otherwise
// from the real pattern factors.
BoundReport MakeBoundReport(const Factorization& fact, PNorm p);

nlohmann::json ToJson(const BoundReport& report);

}  // namespace gfdp

#endif  // GFDP_NORMS_H_
