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

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "gfdp/errors.h"

namespace gfdp {
namespace {

// FFTW's planner is not thread-safe; execution of an existing plan is.
std::mutex& PlannerMutex() {
  static std::mutex mutex;
  return mutex;
}

// out[j] = sum_k in[k] exp(+2*pi*i*j*k/N). FFTW_BACKWARD carries the positive
// exponent, which is the orientation of omega^(k l).
ComplexVector PositiveExponentTransform(std::span<const Complex> in) {
  const int size = static_cast<int>(in.size());
  ComplexVector data(in.begin(), in.end());
  ComplexVector out(in.size());
  auto* data_ptr = reinterpret_cast<fftw_complex*>(data.data());
  auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan = fftw_plan_dft_1d(size, data_ptr, out_ptr, FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw NumericError("FFTW failed to plan a transform");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

Complex UnitRoot(std::int64_t exponent, std::int64_t order) {
  std::int64_t r = exponent % order;
  if (r < 0) r += order;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == order) return {-1.0, 0.0};
  if (4 * r == order) return {0.0, 1.0};
  if (4 * r == 3 * order) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(order);
  return {std::cos(angle), std::sin(angle)};
}

ComplexVector EvalM(std::span<const double> f) {
  Require(!f.empty(), "weight coefficients must be non-empty");
  const std::size_t n = f.size();
  ComplexVector padded(2 * n, Complex{0.0, 0.0});
  double scale = 0.0;
  double direct_one = 0.0;
  double direct_minus_one = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    padded[k] = f[k];
    scale += std::abs(f[k]);
    direct_one += f[k];
    direct_minus_one += (k % 2 == 0) ? f[k] : -f[k];
  }
  ComplexVector m = PositiveExponentTransform(padded);
  m[0] = direct_one;
  m[n] = direct_minus_one;
  for (std::size_t l = 1; l < n; ++l) {
    const Complex symmetric = 0.5 * (m[l] + std::conj(m[2 * n - l]));
    m[l] = symmetric;
    m[2 * n - l] = std::conj(symmetric);
  }
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  for (Complex& value : m) {
    if (std::abs(value) <= floor) value = 0.0;
  }
  return m;
}

ComplexVector SqrtSpectrum(std::span<const Complex> m_vals) {
  ComplexVector zeta(m_vals.size());
  for (std::size_t l = 0; l < m_vals.size(); ++l) zeta[l] = std::sqrt(m_vals[l]);
  return zeta;
}

ComplexVector EvalB(std::span<const Complex> zeta) {
  Require(!zeta.empty() && zeta.size() % 2 == 0,
          "square-root spectrum must have even length 2n");
  ComplexVector b = PositiveExponentTransform(zeta);
  const double inv = 1.0 / static_cast<double>(zeta.size());
  for (Complex& value : b) value *= inv;
  return b;
}

Complex EvalA(std::span<const Complex> m_vals, std::int64_t d) {
  Require(!m_vals.empty() && m_vals.size() % 2 == 0,
          "spectrum must have even length 2n");
  const auto order = static_cast<std::int64_t>(m_vals.size());
  const std::int64_t n = order / 2;
  Require(d >= -n && d <= 2 * n - 1, "window offset d must be in [-n, 2n-1]");
  Complex sum{0.0, 0.0};
  for (std::int64_t l = 0; l < order; ++l) {
    sum += m_vals[static_cast<std::size_t>(l)] * UnitRoot(-d * l, order);
  }
  return sum / static_cast<double>(order);
}

Complex GeneratorSum(std::int64_t k, std::int64_t p) {
  Require(p >= 1, "group order p must be positive");
  Complex sum{0.0, 0.0};
  for (std::int64_t l = 0; l < p; ++l) sum += UnitRoot(k * l, p);
  return sum;
}

RootsProfile ComputeProfile(std::span<const double> f) {
  RootsProfile profile;
  profile.n = static_cast<std::int64_t>(f.size());
  profile.m_vals = EvalM(f);
  profile.zeta = SqrtSpectrum(profile.m_vals);
  profile.b_vals = EvalB(profile.zeta);
  return profile;
}

nlohmann::json ProfileToJson(const RootsProfile& profile) {
  auto pairs = [](const ComplexVector& values) {
    nlohmann::json array = nlohmann::json::array();
    for (const Complex& v : values) array.push_back({v.real(), v.imag()});
    return array;
  };
  return {{"n", profile.n},
          {"m_vals", pairs(profile.m_vals)},
          {"zeta", pairs(profile.zeta)},
          {"b_vals", pairs(profile.b_vals)}};
}

}  // namespace gfdp
