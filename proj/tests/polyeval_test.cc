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

#include "gfdp/polyeval.h"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gfdp/errors.h"
#include "gfdp/oracle.h"
#include "gfdp/weights.h"

namespace gfdp {
namespace {

std::vector<double> RandomNonNegative(std::int64_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> f(static_cast<std::size_t>(n));
  for (double& v : f) v = u(rng);
  return f;
}

TEST(UnitRootTest, ReducesLargeExponents) {
  EXPECT_EQ(UnitRoot(0, 8), Complex(1.0, 0.0));
  EXPECT_EQ(UnitRoot(4, 8), Complex(-1.0, 0.0));
  const Complex far = UnitRoot(8 * 1000003 + 1, 8);
  const Complex near = UnitRoot(1, 8);
  EXPECT_EQ(far, near);
  EXPECT_NEAR(std::abs(UnitRoot(-1, 8) - std::conj(near)), 0.0, 1e-15);
}

TEST(EvalMTest, CountingTwo) {
  const ComplexVector m = EvalM(Coefficients(WeightSpec::Counting(2)));
  ASSERT_EQ(m.size(), 4u);
  EXPECT_NEAR(std::abs(m[0] - Complex(2, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m[1] - Complex(1, 1)), 0.0, 1e-15);
  EXPECT_EQ(m[2], Complex(0, 0));
  EXPECT_NEAR(std::abs(m[3] - Complex(1, -1)), 0.0, 1e-15);
}

TEST(EvalMTest, ConjugateSymmetric) {
  std::mt19937_64 rng(7);
  for (std::int64_t n : {1, 3, 8, 33}) {
    const auto f = RandomNonNegative(n, rng);
    const ComplexVector m = EvalM(f);
    for (std::int64_t l = 1; l < 2 * n; ++l) {
      EXPECT_EQ(m[static_cast<std::size_t>(l)],
                std::conj(m[static_cast<std::size_t>(2 * n - l)]));
    }
    EXPECT_EQ(m[0].imag(), 0.0);
  }
}

TEST(EvalMTest, MatchesDirectSum) {
  std::mt19937_64 rng(11);
  for (std::int64_t n = 1; n <= 64; ++n) {
    const auto f = RandomNonNegative(n, rng);
    const ComplexVector fast = EvalM(f);
    const ComplexVector slow = oracle::NaiveEval(f);
    for (std::size_t l = 0; l < fast.size(); ++l) {
      EXPECT_NEAR(std::abs(fast[l] - slow[l]), 0.0, 1e-10) << "n=" << n << " l=" << l;
    }
  }
}

TEST(SqrtSpectrumTest, PrincipalBranch) {
  const ComplexVector zeta = SqrtSpectrum(std::vector<Complex>{{1.0, 1.0}, {-4.0, 0.0}});
  EXPECT_NEAR(zeta[0].real(), 1.09868411346781, 1e-13);
  EXPECT_NEAR(zeta[0].imag(), 0.455089860562227, 1e-13);
  EXPECT_NEAR(std::abs(zeta[1] - Complex(0.0, 2.0)), 0.0, 1e-15);
}

TEST(ProfileTest, CountingTwoFrozen) {
  const RootsProfile profile = ComputeProfile(Coefficients(WeightSpec::Counting(2)));
  const double expected[] = {0.902895447327179, 0.126008460312160,
                             -0.195788666140631, 0.581098320874387};
  ASSERT_EQ(profile.b_vals.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(profile.b_vals[k].real(), expected[k], 1e-13) << k;
    EXPECT_NEAR(profile.b_vals[k].imag(), 0.0, 1e-13) << k;
  }
}

TEST(ProfileTest, EvalBMatchesDirectSum) {
  std::mt19937_64 rng(13);
  for (std::int64_t n = 1; n <= 40; ++n) {
    const RootsProfile profile = ComputeProfile(RandomNonNegative(n, rng));
    const ComplexVector slow = oracle::NaiveB(profile.zeta);
    for (std::size_t k = 0; k < slow.size(); ++k) {
      EXPECT_NEAR(std::abs(slow[k] - profile.b_vals[k]), 0.0, 1e-10);
    }
  }
}

TEST(WindowIdentityTest, RandomNonNegative) {
  std::mt19937_64 rng(17);
  for (std::int64_t n = 1; n <= 64; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = RandomNonNegative(n, rng);
      const ComplexVector m = EvalM(f);
      ASSERT_LE(oracle::VerifyWindow(f, m), 1e-10) << "n=" << n;
    }
  }
}

TEST(WindowIdentityTest, EvalAPicksOutCoefficients) {
  const std::vector<double> f = {3.0, 1.5, 0.25, 2.0};
  const ComplexVector m = EvalM(f);
  for (std::int64_t d = -4; d <= 7; ++d) {
    const double expected = (d >= 0 && d < 4) ? f[static_cast<std::size_t>(d)] : 0.0;
    EXPECT_NEAR(std::abs(EvalA(m, d) - expected), 0.0, 1e-12) << d;
  }
  EXPECT_THROW(EvalA(m, -5), ParameterError);
  EXPECT_THROW(EvalA(m, 8), ParameterError);
}

TEST(ChalkleyTest, RandomAndCatalog) {
  std::mt19937_64 rng(19);
  for (std::int64_t n = 1; n <= 32; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      EXPECT_LE(oracle::VerifyChalkley(ComputeProfile(RandomNonNegative(n, rng))), 1e-10);
    }
    for (const WeightSpec& spec : oracle::Catalog(n, 2)) {
      EXPECT_LE(oracle::VerifyChalkley(ComputeProfile(Coefficients(spec))), 1e-10)
          << spec.Name();
    }
  }
}

TEST(ParsevalTest, RowEnergyEqualsMeanModulus) {
  std::mt19937_64 rng(23);
  for (std::int64_t n = 1; n <= 64; ++n) {
    const RootsProfile profile = ComputeProfile(RandomNonNegative(n, rng));
    double energy = 0.0, spectrum = 0.0;
    for (const Complex& b : profile.b_vals) energy += std::norm(b);
    for (const Complex& m : profile.m_vals) spectrum += std::abs(m);
    spectrum /= static_cast<double>(2 * n);
    EXPECT_NEAR(energy, spectrum, 1e-10 * spectrum) << n;
  }
}

TEST(GeneratorSumTest, VanishesOffMultiples) {
  for (std::int64_t p : {1, 2, 5, 16}) {
    for (std::int64_t k = -2 * p; k <= 2 * p; ++k) {
      const Complex expected = (k % p == 0) ? Complex(static_cast<double>(p), 0.0)
                                            : Complex(0.0, 0.0);
      EXPECT_NEAR(std::abs(GeneratorSum(k, p) - expected), 0.0, 1e-12);
    }
  }
}

TEST(ProfileJsonTest, PairsOfReals) {
  const nlohmann::json j = ProfileToJson(ComputeProfile(std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(j.at("n"), 2);
  ASSERT_EQ(j.at("b_vals").size(), 4u);
  EXPECT_EQ(j.at("b_vals")[0].size(), 2u);
}

}  // namespace
}  // namespace gfdp
