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

#include "gfdp/mechanism.h"

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "gfdp/errors.h"
#include "gfdp/oracle.h"
#include "gfdp/rng.h"

namespace gfdp {
namespace {

std::shared_ptr<const Factorization> Share(const WeightSpec& spec, Mode mode) {
  return std::make_shared<const Factorization>(Factorize(spec, mode));
}

TEST(SigmaTest, FrozenValues) {
  PrivacyParams params;
  EXPECT_NEAR(Sigma(params), 7.49363839780877, 1e-12);
  params.variant = SigmaVariant::kDef28;
  EXPECT_NEAR(Sigma(params), 7.49243982952522, 1e-12);
  params.clip = 2.0;
  params.epsilon = 2.0;
  EXPECT_NEAR(Sigma(params), 7.49243982952522, 1e-12);
}

TEST(SigmaTest, RejectsBadParameters) {
  PrivacyParams params;
  params.epsilon = 0.0;
  EXPECT_THROW(Sigma(params), ParameterError);
  params = {};
  params.delta = 1.0;
  EXPECT_THROW(Sigma(params), ParameterError);
  params = {};
  params.clip = -1.0;
  EXPECT_THROW(Sigma(params), ParameterError);
  EXPECT_THROW(ParseSigmaVariant("laplace"), ParameterError);
  EXPECT_EQ(ParseSigmaVariant("def28"), SigmaVariant::kDef28);
  EXPECT_EQ(SigmaVariantName(SigmaVariant::kThm15), "thm15");
}

TEST(RngTest, DeterministicAndSplit) {
  GaussianSampler a(42), b(42), c(DeriveSeed(42, 1));
  for (int i = 0; i < 100; ++i) {
    const double va = a.Next();
    EXPECT_EQ(va, b.Next());
    EXPECT_NE(va, c.Next());
  }
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
}

TEST(RngTest, MomentsAreStandard) {
  GaussianSampler sampler(5);
  const int count = 200000;
  double sum = 0.0, squares = 0.0;
  for (int i = 0; i < count; ++i) {
    const double v = sampler.Next();
    sum += v;
    squares += v * v;
  }
  EXPECT_NEAR(sum / count, 0.0, 0.01);
  EXPECT_NEAR(squares / count, 1.0, 0.02);
}

TEST(StreamStateTest, NoiseIdentityIsExact) {
  const PrivacyParams params;
  for (Mode mode : {Mode::kTriangular, Mode::kPattern}) {
    for (const WeightSpec& spec : oracle::Catalog(24, 2)) {
      StreamState state = StreamState::Init(Share(spec, mode), mode, params, 99);
      const auto x = SyntheticStream("uniform", 24, 1.0, 3);
      for (double v : x) state.Step(v);
      for (std::int64_t t = 0; t < 24; ++t) {
        const auto i = static_cast<std::size_t>(t);
        EXPECT_EQ(state.outputs()[i], state.true_outputs()[i] + state.NoiseAt(t));
      }
    }
  }
}

TEST(StreamStateTest, NoiseMatchesLeftTimesLoggedZ) {
  const auto fact = Share(WeightSpec::ExpDecay(16, 0.8), Mode::kTriangular);
  StreamState state = StreamState::Init(fact, Mode::kTriangular, PrivacyParams{}, 8);
  for (int t = 0; t < 16; ++t) state.Step(0.0);
  const Eigen::Map<const Eigen::VectorXd> z(state.noise().data(), 16);
  const Eigen::VectorXd expected = fact->triangular->left * z;
  for (Eigen::Index t = 0; t < 16; ++t) {
    EXPECT_NEAR(state.outputs()[static_cast<std::size_t>(t)], expected(t), 1e-12);
  }
  EXPECT_TRUE(state.adaptive_safe());
  EXPECT_NEAR(state.noise_std(), Sigma(PrivacyParams{}) * state.sensitivity(), 1e-15);
}

TEST(StreamStateTest, PatternModeIsNotAdaptiveSafe) {
  const auto fact = Share(WeightSpec::Counting(8), Mode::kPattern);
  StreamState state = StreamState::Init(fact, Mode::kPattern, PrivacyParams{}, 1);
  EXPECT_FALSE(state.adaptive_safe());
  // The whole noise vector is drawn before the first step.
  EXPECT_EQ(static_cast<std::int64_t>(state.noise().size()), fact->real.width());
}

TEST(StreamStateTest, ZeroSigmaIsExact) {
  for (Mode mode : {Mode::kTriangular, Mode::kPattern}) {
    for (const WeightSpec& spec : oracle::Catalog(128, 3)) {
      const auto fact = Share(spec, mode);
      StreamState state(fact, mode, 0.0, 1.0, 5);
      const auto x = SyntheticStream("uniform", 128, 1.0, 11);
      for (double v : x) state.Step(v);
      const Eigen::Map<const Eigen::VectorXd> xv(x.data(), 128);
      const Eigen::VectorXd truth = BuildMatrix(spec).entries * xv;
      for (Eigen::Index t = 0; t < 128; ++t) {
        EXPECT_NEAR(state.outputs()[static_cast<std::size_t>(t)], truth(t),
                    1e-12 * std::max(1.0, std::abs(truth(t))))
            << spec.Name();
      }
    }
  }
}

TEST(StreamStateTest, ExhaustionAndClipping) {
  StreamState state = StreamState::Init(Share(WeightSpec::Counting(3), Mode::kTriangular),
                                        Mode::kTriangular, PrivacyParams{}, 1);
  state.Step(5.0);
  state.Step(-0.5);
  state.Step(-9.0);
  EXPECT_EQ(state.clipped_count(), 2);
  EXPECT_EQ(state.inputs()[0], 1.0);
  EXPECT_EQ(state.inputs()[2], -1.0);
  EXPECT_EQ(state.true_outputs()[2], -0.5);
  EXPECT_THROW(state.Step(0.0), StateError);
  EXPECT_THROW(state.NoiseAt(3), ParameterError);
}

TEST(RunTest, DeterministicForFixedSeed) {
  const auto x = SyntheticStream("spike", 64, 1.0, 0);
  const auto a = gfdp::Run(WeightSpec::Sliding(64, 8), PrivacyParams{}, x, 123);
  const auto b = gfdp::Run(WeightSpec::Sliding(64, 8), PrivacyParams{}, x, 123);
  const auto c = gfdp::Run(WeightSpec::Sliding(64, 8), PrivacyParams{}, x, 124);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_THROW(gfdp::Run(WeightSpec::Sliding(64, 8), PrivacyParams{}, std::vector<double>(3), 1),
               ParameterError);
}

TEST(EncodeTest, ClippedNeighborsStayWithinSensitivity) {
  for (const WeightSpec& spec : oracle::Catalog(32, 2)) {
    const Factorization fact = Factorize(spec, Mode::kTriangular);
    const double clip = 1.5;
    auto x = SyntheticStream("uniform", 32, clip, 4);
    for (std::size_t i = 0; i < x.size(); i += 5) {
      auto neighbor = x;
      neighbor[i] = (i % 2 == 0) ? 1e6 : -1e6;
      const Eigen::VectorXd diff =
          Encode(*fact.triangular, x, clip) - Encode(*fact.triangular, neighbor, clip);
      EXPECT_LE(diff.norm(), 2.0 * clip * fact.triangular->sensitivity + 1e-12)
          << spec.Name();
    }
  }
}

TEST(SyntheticStreamTest, Kinds) {
  EXPECT_EQ(SyntheticStream("constant", 3, 0.5, 0), (std::vector<double>{0.5, 0.5, 0.5}));
  const auto spike = SyntheticStream("spike", 4, 1.0, 0);
  EXPECT_EQ(std::count(spike.begin(), spike.end(), 0.0), 3);
  for (double v : SyntheticStream("uniform", 100, 2.0, 9)) {
    EXPECT_LE(std::abs(v), 2.0);
  }
  EXPECT_THROW(SyntheticStream("sine", 4, 1.0, 0), ParameterError);
}

}  // namespace
}  // namespace gfdp
