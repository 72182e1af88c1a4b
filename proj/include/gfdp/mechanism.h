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

#ifndef GFDP_MECHANISM_H_
#define GFDP_MECHANISM_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gfdp/factorizer.h"
#include "gfdp/rng.h"

namespace gfdp {

// kThm15: (2 clip / eps) sqrt(ln(1.25 / delta))
// kDef28: (2 / eps) sqrt(4/9 + ln(sqrt(2/pi) / delta)), times clip
enum class SigmaVariant { kThm15, kDef28 };

SigmaVariant ParseSigmaVariant(std::string_view name);
std::string_view SigmaVariantName(SigmaVariant variant);

struct PrivacyParams {
  double epsilon = 1.0;
  double delta = 1e-6;
  double clip = 1.0;
  SigmaVariant variant = SigmaVariant::kThm15;

  void Validate() const;
};

double Sigma(const PrivacyParams& params);

// Streaming matrix mechanism for weighted prefix sums.
//
// Step t releases (M x)_t + (left z)_t for one persistent Gaussian vector z
// whose coordinates have standard deviation sigma * sensitivity. In
// triangular mode z grows by one coordinate per step, which is valid because
// the left factor is lower triangular; the state is then safe against
// adaptively chosen inputs. In pattern mode z has the full width of the real
// pattern factor and is drawn at construction, which only covers streams
// fixed in advance.
class StreamState {
 public:
  StreamState(std::shared_ptr<const Factorization> fact, Mode mode, double sigma,
              double clip, std::uint64_t seed);

  static StreamState Init(std::shared_ptr<const Factorization> fact, Mode mode,
                          const PrivacyParams& params, std::uint64_t seed);

  // Consumes x_t (clipped to [-clip, clip]) and returns the released value.
  // Throws StateError once n values have been consumed.
  double Step(double x);

  std::int64_t t() const { return static_cast<std::int64_t>(inputs_.size()); }
  std::int64_t n() const { return fact_->spec.n; }
  Mode mode() const { return mode_; }
  bool adaptive_safe() const { return mode_ == Mode::kTriangular; }
  double sensitivity() const { return sensitivity_; }
  double noise_std() const { return noise_std_; }
  std::int64_t clipped_count() const { return clipped_; }

  std::span<const double> noise() const { return noise_; }
  std::span<const double> inputs() const { return inputs_; }
  std::span<const double> true_outputs() const { return true_outputs_; }
  std::span<const double> outputs() const { return outputs_; }

  // (left z)_t for an already released step, recomputed in the same order
  // Step() uses, so outputs()[t] == true_outputs()[t] + NoiseAt(t) exactly.
  double NoiseAt(std::int64_t step) const;

 private:
  std::shared_ptr<const Factorization> fact_;
  Mode mode_;
  double clip_;
  double sensitivity_;
  double noise_std_;
  GaussianSampler sampler_;
  std::vector<double> noise_;
  std::vector<double> inputs_;
  std::vector<double> true_outputs_;
  std::vector<double> outputs_;
  std::int64_t clipped_ = 0;
};

// init followed by n steps.
std::vector<double> Run(const WeightSpec& spec, const PrivacyParams& params,
                        std::span<const double> x, std::uint64_t seed,
                        Mode mode = Mode::kTriangular);

// R * clip(x), the vector the Gaussian noise is added to.
Eigen::VectorXd Encode(const TriangularFactorization& fact,
                       std::span<const double> x, double clip);

// "constant" (every value equal to clip), "uniform" (uniform on
// [-clip, clip]) or "spike" (clip at the middle step, zero elsewhere).
std::vector<double> SyntheticStream(std::string_view kind, std::int64_t n,
                                    double clip, std::uint64_t seed);

}  // namespace gfdp

#endif  // GFDP_MECHANISM_H_
