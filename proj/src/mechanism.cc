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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gfdp/errors.h"

namespace gfdp {

SigmaVariant ParseSigmaVariant(std::string_view name) {
  if (name == "thm15") return SigmaVariant::kThm15;
  if (name == "def28") return SigmaVariant::kDef28;
  throw ParameterError("unknown sigma variant '" + std::string(name) + "'");
}

std::string_view SigmaVariantName(SigmaVariant variant) {
  return variant == SigmaVariant::kThm15 ? "thm15" : "def28";
}

void PrivacyParams::Validate() const {
  Require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be positive");
  Require(delta > 0.0 && delta < 1.0, "delta must be in (0, 1)");
  Require(std::isfinite(clip) && clip > 0.0, "clip must be positive");
}

double Sigma(const PrivacyParams& params) {
  params.Validate();
  switch (params.variant) {
    case SigmaVariant::kThm15:
      return 2.0 * params.clip / params.epsilon * std::sqrt(std::log(1.25 / params.delta));
    case SigmaVariant::kDef28:
      return params.clip * 2.0 / params.epsilon *
             std::sqrt(4.0 / 9.0 +
                       std::log(std::sqrt(2.0 / std::numbers::pi) / params.delta));
  }
  return 0.0;
}

StreamState::StreamState(std::shared_ptr<const Factorization> fact, Mode mode,
                         double sigma, double clip, std::uint64_t seed)
    : fact_(std::move(fact)), mode_(mode), clip_(clip), sampler_(seed) {
  Require(fact_ != nullptr, "stream state needs a factorization");
  Require(std::isfinite(sigma) && sigma >= 0.0, "sigma must be non-negative");
  Require(std::isfinite(clip) && clip > 0.0, "clip must be positive");
  if (mode_ == Mode::kTriangular) {
    Require(fact_->triangular.has_value() &&
                fact_->triangular->left.rows() == fact_->spec.n,
            "triangular mode needs triangular factors of size n");
    sensitivity_ = fact_->triangular->sensitivity;
  } else {
    Require(fact_->real.rows() == fact_->spec.n,
            "pattern factors must have n rows");
    sensitivity_ = fact_->real.Sensitivity();
  }
  noise_std_ = sigma * sensitivity_;
  const auto n = static_cast<std::size_t>(fact_->spec.n);
  inputs_.reserve(n);
  true_outputs_.reserve(n);
  outputs_.reserve(n);
  if (mode_ == Mode::kPattern) {
    noise_.resize(static_cast<std::size_t>(fact_->real.width()));
    for (double& z : noise_) z = noise_std_ * sampler_.Next();
  } else {
    noise_.reserve(n);
  }
}

StreamState StreamState::Init(std::shared_ptr<const Factorization> fact, Mode mode,
                              const PrivacyParams& params, std::uint64_t seed) {
  return StreamState(std::move(fact), mode, Sigma(params), params.clip, seed);
}

double StreamState::NoiseAt(std::int64_t step) const {
  const std::int64_t available = mode_ == Mode::kPattern ? n() : t();
  Require(step >= 0 && step < available, "noise requested for an unsampled step");
  if (mode_ == Mode::kPattern) return fact_->real.LeftRowDot(step, noise_);
  const Eigen::MatrixXd& left = fact_->triangular->left;
  double sum = 0.0;
  for (std::int64_t i = 0; i <= step; ++i) {
    sum += left(step, i) * noise_[static_cast<std::size_t>(i)];
  }
  return sum;
}

double StreamState::Step(double x) {
  if (t() >= n()) throw StateError("stream exhausted after n steps");
  if (!std::isfinite(x)) throw ParameterError("stream values must be finite");
  const double clipped = std::clamp(x, -clip_, clip_);
  if (clipped != x) ++clipped_;
  inputs_.push_back(clipped);

  const std::int64_t step = t() - 1;
  const std::vector<double>& f = fact_->coefficients;
  double truth = 0.0;
  for (std::int64_t i = 0; i <= step; ++i) {
    truth += f[static_cast<std::size_t>(step - i)] * inputs_[static_cast<std::size_t>(i)];
  }
  if (mode_ == Mode::kTriangular) noise_.push_back(noise_std_ * sampler_.Next());
  const double released = truth + NoiseAt(step);
  true_outputs_.push_back(truth);
  outputs_.push_back(released);
  return released;
}

std::vector<double> Run(const WeightSpec& spec, const PrivacyParams& params,
                        std::span<const double> x, std::uint64_t seed, Mode mode) {
  Require(static_cast<std::int64_t>(x.size()) == spec.n,
          "stream length must equal n");
  auto fact = std::make_shared<const Factorization>(Factorize(spec, mode));
  StreamState state = StreamState::Init(fact, mode, params, seed);
  for (double value : x) state.Step(value);
  return {state.outputs().begin(), state.outputs().end()};
}

Eigen::VectorXd Encode(const TriangularFactorization& fact,
                       std::span<const double> x, double clip) {
  Require(static_cast<Eigen::Index>(x.size()) == fact.right.cols(),
          "stream length must equal the factor size");
  Eigen::VectorXd clipped(static_cast<Eigen::Index>(x.size()));
  for (Eigen::Index i = 0; i < clipped.size(); ++i) {
    clipped(i) = std::clamp(x[static_cast<std::size_t>(i)], -clip, clip);
  }
  return fact.right * clipped;
}

std::vector<double> SyntheticStream(std::string_view kind, std::int64_t n,
                                    double clip, std::uint64_t seed) {
  Require(n >= 1, "stream length must be positive");
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  if (kind == "constant") {
    std::fill(x.begin(), x.end(), clip);
  } else if (kind == "uniform") {
    std::mt19937_64 engine(DeriveSeed(seed, 0x5354524541ULL));
    for (double& value : x) {
      value = clip * (2.0 * static_cast<double>(engine() >> 11) * 0x1.0p-53 - 1.0);
    }
  } else if (kind == "spike") {
    x[static_cast<std::size_t>(n / 2)] = clip;
  } else {
    throw ParameterError("unknown synthetic stream '" + std::string(kind) + "'");
  }
  return x;
}

}  // namespace gfdp
