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

#ifndef GFDP_RNG_H_
#define GFDP_RNG_H_

#include <cstdint>
#include <random>

namespace gfdp {

// Derives an independent seed for sub-stream `index` of `seed`: the splitmix64
// finalizer applied to seed ^ (index * 0x9E3779B97F4A7C15). Trial i of a run
// with seed s always uses DeriveSeed(s, i), whatever the thread layout.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

// Seed drawn from std::random_device, for runs without an explicit seed.
std::uint64_t EntropySeed();

// Standard normal variates from the Marsaglia polar method over
// std::mt19937_64. The engine and the transform are both fully specified, so
// a seed produces the same sequence on every platform.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed);

  double Next();

 private:
  // Uniform on [-1, 1) with 53 random bits.
  double Symmetric();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gfdp

#endif  // GFDP_RNG_H_
