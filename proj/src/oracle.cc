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

#include "gfdp/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gfdp/errors.h"
#include "gfdp/norms.h"
#include "gfdp/rng.h"

namespace gfdp::oracle {
namespace {

constexpr double kPi = std::numbers::pi;

// omega^e for omega = exp(i pi / n).
Complex Omega(std::int64_t e, std::int64_t n) {
  const std::int64_t order = 2 * n;
  const std::int64_t r = ((e % order) + order) % order;
  return std::polar(1.0, kPi * static_cast<double>(r) / static_cast<double>(n));
}

void CheckCap(std::int64_t n, std::int64_t cap) {
  if (n > cap) {
    throw CapacityError("oracle refuses n = " + std::to_string(n) +
                        " above its cap of " + std::to_string(cap));
  }
}

}  // namespace

ComplexVector NaiveEval(std::span<const double> f) {
  Require(!f.empty(), "weight coefficients must be non-empty");
  const auto n = static_cast<std::int64_t>(f.size());
  ComplexVector m(static_cast<std::size_t>(2 * n));
  for (std::int64_t l = 0; l < 2 * n; ++l) {
    Complex sum{0.0, 0.0};
    for (std::int64_t k = 0; k < n; ++k) sum += f[static_cast<std::size_t>(k)] * Omega(k * l, n);
    m[static_cast<std::size_t>(l)] = sum;
  }
  return m;
}

ComplexVector NaiveB(std::span<const Complex> zeta) {
  Require(!zeta.empty() && zeta.size() % 2 == 0, "zeta must have length 2n");
  const auto order = static_cast<std::int64_t>(zeta.size());
  const std::int64_t n = order / 2;
  ComplexVector b(zeta.size());
  for (std::int64_t m = 0; m < order; ++m) {
    Complex sum{0.0, 0.0};
    for (std::int64_t l = 0; l < order; ++l) sum += zeta[static_cast<std::size_t>(l)] * Omega(m * l, n);
    b[static_cast<std::size_t>(m)] = sum / static_cast<double>(order);
  }
  return b;
}

double VerifyChalkley(const RootsProfile& profile) {
  const std::int64_t n = profile.n;
  const std::int64_t order = 2 * n;
  Require(static_cast<std::int64_t>(profile.zeta.size()) == order &&
              static_cast<std::int64_t>(profile.b_vals.size()) == order &&
              static_cast<std::int64_t>(profile.m_vals.size()) == order,
          "profile vectors must have length 2n");
  const double inv = 1.0 / static_cast<double>(order);
  double deviation = 0.0;
  for (std::int64_t l = 0; l < order; ++l) {
    // c_f(omega^-k x) contributes (1/2n) zeta_l omega^(-k l) to x^l.
    Complex coefficient{0.0, 0.0};
    for (std::int64_t k = 0; k < order; ++k) {
      coefficient += profile.b_vals[static_cast<std::size_t>(k)] * inv *
                     profile.zeta[static_cast<std::size_t>(l)] * Omega(-k * l, n);
    }
    const Complex target = profile.m_vals[static_cast<std::size_t>(l)] * inv;
    deviation = std::max(deviation, std::abs(coefficient - target));
  }
  return deviation;
}

double VerifyWindow(std::span<const double> f, std::span<const Complex> m_vals) {
  const auto n = static_cast<std::int64_t>(f.size());
  Require(static_cast<std::int64_t>(m_vals.size()) == 2 * n,
          "spectrum must have length 2n");
  double deviation = 0.0;
  for (std::int64_t d = -n; d <= 2 * n - 1; ++d) {
    Complex sum{0.0, 0.0};
    for (std::int64_t l = 0; l < 2 * n; ++l) sum += m_vals[static_cast<std::size_t>(l)] * Omega(-d * l, n);
    sum /= static_cast<double>(2 * n);
    const double expected = (d >= 0 && d < n) ? f[static_cast<std::size_t>(d)] : 0.0;
    deviation = std::max(deviation, std::abs(sum - expected));
  }
  return deviation;
}

double VerifyReconstruction(const Eigen::MatrixXd& left, const Eigen::MatrixXd& right,
                            const Workload& workload) {
  Require(left.rows() == workload.entries.rows() &&
              right.cols() == workload.entries.cols() && left.cols() == right.rows(),
          "factor shapes do not match the workload");
  if (workload.entries.size() == 0) return 0.0;
  return (left * right - workload.entries).cwiseAbs().maxCoeff();
}

double VerifyReconstruction(const Eigen::MatrixXcd& left,
                            const Eigen::MatrixXcd& right, const Workload& workload) {
  Require(left.rows() == workload.entries.rows() &&
              right.cols() == workload.entries.cols() && left.cols() == right.rows(),
          "factor shapes do not match the workload");
  if (workload.entries.size() == 0) return 0.0;
  const Eigen::MatrixXcd product = left * right;
  return (product - workload.entries.cast<Complex>()).cwiseAbs().maxCoeff();
}

bool KronStripedCheck(std::int64_t n, std::int64_t stripe) {
  Require(stripe >= 1 && stripe <= n && n % stripe == 0,
          "Kronecker check needs b to divide n");
  const Workload striped = BuildMatrix(WeightSpec::Striped(n, stripe));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      // (A (x) B)[i][j] = A[i / b][j / b] * B[i % b][j % b]
      const double counting = (i / stripe >= j / stripe) ? 1.0 : 0.0;
      const double identity = (i % stripe == j % stripe) ? 1.0 : 0.0;
      if (striped.entries(i, j) != counting * identity) return false;
    }
  }
  return true;
}

double UnitRootChordDeviation(std::int64_t n) {
  Require(n >= 1, "n must be at least 1");
  double deviation = 0.0;
  for (std::int64_t l = 1; l <= 2 * n - 1; ++l) {
    const double chord = std::abs(1.0 - Omega(l, n));
    const double sine = 2.0 * std::sin(kPi * static_cast<double>(l) / (2.0 * static_cast<double>(n)));
    deviation = std::max(deviation, std::abs(chord - sine));
  }
  return deviation;
}

std::vector<WeightSpec> Catalog(std::int64_t n, int random_tables, std::uint64_t seed) {
  Require(n >= 1, "n must be at least 1");
  std::vector<WeightSpec> specs;
  specs.push_back(WeightSpec::Counting(n));
  for (std::int64_t window : {1, 4, 16}) {
    specs.push_back(WeightSpec::Sliding(n, std::min(window, n)));
  }
  for (std::int64_t stripe : {2, 4}) {
    specs.push_back(WeightSpec::Striped(n, std::min(stripe, n)));
  }
  specs.push_back(WeightSpec::ExpDecay(n, 0.9));
  specs.push_back(WeightSpec::PolyDecay(n, 1.0));
  for (int t = 0; t < random_tables; ++t) {
    std::mt19937_64 engine(DeriveSeed(seed, static_cast<std::uint64_t>(n) * 1000 + t));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> values(static_cast<std::size_t>(n));
    for (double& v : values) v = uniform(engine);
    specs.push_back(WeightSpec::Table(n, std::move(values)));
  }
  return specs;
}

std::vector<VerifyRow> RunVerifySuite(std::int64_t n_max, std::int64_t cap) {
  Require(n_max >= 1, "n must be at least 1");
  CheckCap(n_max, cap);
  double transform = 0.0, window = 0.0, chalkley = 0.0, parseval = 0.0;
  double pattern = 0.0, real = 0.0, triangular = 0.0, achieved_excess = 0.0;
  double chord = 0.0, closed_form = 0.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    chord = std::max(chord, UnitRootChordDeviation(n));
    for (const WeightSpec& spec : Catalog(n, 3)) {
      const Factorization fact = Factorize(spec, Mode::kTriangular);
      const std::vector<double> padded = Coefficients(spec, fact.horizon);
      const ComplexVector naive_m = NaiveEval(padded);
      const ComplexVector naive_b = NaiveB(fact.profile.zeta);
      for (std::size_t l = 0; l < naive_m.size(); ++l) {
        transform = std::max({transform, std::abs(naive_m[l] - fact.profile.m_vals[l]),
                              std::abs(naive_b[l] - fact.profile.b_vals[l])});
      }
      window = std::max(window, VerifyWindow(padded, fact.profile.m_vals));
      chalkley = std::max(chalkley, VerifyChalkley(fact.profile));

      double energy = 0.0, spectrum = 0.0;
      for (const Complex& b : fact.profile.b_vals) energy += std::norm(b);
      for (const Complex& m : fact.profile.m_vals) spectrum += std::abs(m);
      spectrum /= static_cast<double>(fact.profile.m_vals.size());
      parseval = std::max(parseval, std::abs(energy - spectrum) / std::max(1.0, spectrum));

      const Workload workload = BuildMatrix(spec);
      const double scale = std::max(1.0, workload.entries.cwiseAbs().maxCoeff());
      pattern = std::max(pattern, VerifyReconstruction(fact.pattern.MaterializeLeft(),
                                                       fact.pattern.MaterializeRight(),
                                                       workload) / scale);
      real = std::max(real, VerifyReconstruction(fact.real.MaterializeLeft(),
                                                 fact.real.MaterializeRight(), workload) /
                                scale);
      triangular = std::max(triangular,
                            VerifyReconstruction(fact.triangular->left,
                                                 fact.triangular->right, workload) /
                                scale);
      const BoundReport report = MakeBoundReport(fact, PNorm::Infinity());
      achieved_excess = std::max(achieved_excess, report.achieved - report.formula_upper);
    }
    const ComplexVector counting = NaiveEval(Coefficients(WeightSpec::Counting(n)));
    closed_form = std::max(closed_form, std::abs(GammaUpperFormula(counting, PNorm::Infinity()) -
                                                 CountingClosedForm(n)));
  }

  bool kron = true;
  for (std::int64_t stripe = 1; stripe <= n_max; ++stripe) {
    if (n_max % stripe == 0) kron = kron && KronStripedCheck(n_max, stripe);
  }

  auto row = [](std::string name, double deviation, double tolerance) {
    return VerifyRow{std::move(name), deviation, tolerance, deviation <= tolerance};
  };
  return {
      row("transform_matches_direct_sum", transform, 1e-10),
      row("window_identity", window, 1e-10),
      row("chalkley_convolution", chalkley, 1e-10),
      row("parseval_row_energy", parseval, 1e-10),
      row("reconstruction_pattern", pattern, 1e-8),
      row("reconstruction_real", real, 1e-8),
      row("reconstruction_triangular", triangular, 1e-8),
      row("achieved_within_formula", std::max(0.0, achieved_excess), 1e-9),
      row("unit_root_chord", chord, 1e-12),
      row("counting_closed_form", closed_form, 1e-9),
      row("kronecker_striped", kron ? 0.0 : 1.0, 0.0),
  };
}

}  // namespace gfdp::oracle
