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

#ifndef GFDP_ORACLE_H_
#define GFDP_ORACLE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gfdp/factorizer.h"
#include "gfdp/polyeval.h"
#include "gfdp/weights.h"

// Brute-force validators. None of them calls into the transform or factor
// code they check; angles are formed from exact integer exponents here.
namespace gfdp::oracle {

// Oracles are quadratic or cubic in n and refuse larger inputs by default.
inline constexpr std::int64_t kDefaultOracleCap = 512;

// m_f(omega^l) by direct summation.
ComplexVector NaiveEval(std::span<const double> f);

// (1/2n) sum_l zeta[l] omega^(m l) by direct summation.
ComplexVector NaiveB(std::span<const Complex> zeta);

// Largest |coefficient of x^l in sum_k b_f(omega^k) c_f(omega^-k x) - m_l/2n|,
// with c_f = b_f and b_f(omega^k) taken from profile.b_vals.
double VerifyChalkley(const RootsProfile& profile);

// Largest |a_f(omega^-d) - expected(d)| over d in [-n, 2n-1], where expected
// is f(d) inside [0, n) and 0 elsewhere.
double VerifyWindow(std::span<const double> f, std::span<const Complex> m_vals);

// max |(left * right)[i][j] - workload[i][j]|.
double VerifyReconstruction(const Eigen::MatrixXd& left, const Eigen::MatrixXd& right,
                            const Workload& workload);
double VerifyReconstruction(const Eigen::MatrixXcd& left,
                            const Eigen::MatrixXcd& right, const Workload& workload);

// Compares Striped(b) at n entrywise against counting(n/b) (x) I_b, built by
// explicit index arithmetic. Requires b | n.
bool KronStripedCheck(std::int64_t n, std::int64_t stripe);

// max over l in [1, 2n-1] of ||1 - omega^l| - 2 sin(pi l / 2n)|.
double UnitRootChordDeviation(std::int64_t n);

// Counting, Sliding(1/4/16), Striped(2/4), ExpDecay(0.9), PolyDecay(1) and
// `random_tables` uniform [0, 1) tables. Windows and stripes longer than n
// are shortened to n.
std::vector<WeightSpec> Catalog(std::int64_t n, int random_tables = 10,
                                std::uint64_t seed = 2024);

struct VerifyRow {
  std::string identity;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Every identity over the catalog for n = 1..n_max.
std::vector<VerifyRow> RunVerifySuite(std::int64_t n_max,
                                      std::int64_t cap = kDefaultOracleCap);

}  // namespace gfdp::oracle

#endif  // GFDP_ORACLE_H_
