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

#ifndef GFDP_POLYEVAL_H_
#define GFDP_POLYEVAL_H_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

namespace gfdp {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Throughout, omega = exp(i*pi/n) is the primitive 2n-th root of unity.

// exp(2*pi*i*exponent/order), with the exponent reduced modulo `order` before
// the angle is formed so that large exponents keep full accuracy.
Complex UnitRoot(std::int64_t exponent, std::int64_t order);

// Spectrum of a weight function over the 2n-th roots of unity.
struct RootsProfile {
  std::int64_t n = 0;
  ComplexVector m_vals;  // m_f(omega^l), l = 0..2n-1
  ComplexVector zeta;    // principal square roots of m_vals
  ComplexVector b_vals;  // b_f(omega^m), m = 0..2n-1
};

// m_f(omega^l) = sum_k f(k) omega^(k l) for l = 0..2n-1, n = f.size().
//
// Computed with a length-2n transform. The result is made exactly conjugate
// symmetric, the two real-axis values m_f(1) and m_f(-1) are summed directly,
// and entries whose magnitude is at the rounding floor of sum_k |f(k)| are
// set to zero so that vanishing values do not pick up a spurious phase.
ComplexVector EvalM(std::span<const double> f);

// Entrywise principal square root. A negative real with +0 imaginary part
// maps to +i*sqrt(|x|); with -0 it maps to the conjugate, which keeps
// conjugate-symmetric input conjugate symmetric.
ComplexVector SqrtSpectrum(std::span<const Complex> m_vals);

// b_vals[m] = (1/2n) sum_l zeta[l] omega^(m l).
ComplexVector EvalB(std::span<const Complex> zeta);

// a_f(omega^-d) = (1/2n) sum_l m_vals[l] omega^(-d l) for d in [-n, 2n-1].
// This is f(d) for 0 <= d < n and 0 for the other d in range.
Complex EvalA(std::span<const Complex> m_vals, std::int64_t d);

// sum_{l=0}^{p-1} g^(k l) for g = exp(2*pi*i/p).
Complex GeneratorSum(std::int64_t k, std::int64_t p);

RootsProfile ComputeProfile(std::span<const double> f);

// {"n", "m_vals", "zeta", "b_vals"}, complex values as [re, im] pairs.
nlohmann::json ProfileToJson(const RootsProfile& profile);

}  // namespace gfdp

#endif  // GFDP_POLYEVAL_H_
