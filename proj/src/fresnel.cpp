// SPDX-License-Identifier: Apache-2.0
//
// blockcast - mmWave/sub-THz LoS-blockage early-warning workbench
// Copyright (C) 2026 blockcast authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "blockcast/fresnel.hpp"

#include <cmath>
#include <vector>

namespace blockcast {

namespace {

// 5-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr Scalar kGlNode[5] = {0.0, -0.5384693101056831, 0.5384693101056831,
                               -0.9061798459386640, 0.9061798459386640};
constexpr Scalar kGlWeight[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                 0.2369268850561891, 0.2369268850561891};

// Cumulative table of C, S and their derivatives on [0, kTableMax]. The step
// is chosen so cubic-Hermite interpolation stays below ~1e-11 absolute error
// at the top of the range where the integrands oscillate fastest.
constexpr Scalar kTableStep = 5.0e-4;
constexpr Scalar kTableMax = 12.0;

struct FresnelTable {
  std::vector<Scalar> c, s, dc, ds;

  FresnelTable() {
    const auto n = static_cast<std::size_t>(std::llround(kTableMax / kTableStep)) + 1;
    c.resize(n);
    s.resize(n);
    dc.resize(n);
    ds.resize(n);
    c[0] = s[0] = 0.0;
    dc[0] = 1.0;
    ds[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      const Scalar x0 = static_cast<Scalar>(i - 1) * kTableStep;
      const Scalar mid = x0 + 0.5 * kTableStep;
      Scalar ic = 0.0, is = 0.0;
      for (int g = 0; g < 5; ++g) {
        const Scalar t = mid + 0.5 * kTableStep * kGlNode[g];
        const Scalar phase = 0.5 * kPi * t * t;
        ic += kGlWeight[g] * std::cos(phase);
        is += kGlWeight[g] * std::sin(phase);
      }
      c[i] = c[i - 1] + 0.5 * kTableStep * ic;
      s[i] = s[i - 1] + 0.5 * kTableStep * is;
      const Scalar x1 = static_cast<Scalar>(i) * kTableStep;
      const Scalar phase1 = 0.5 * kPi * x1 * x1;
      dc[i] = std::cos(phase1);
      ds[i] = std::sin(phase1);
    }
  }
};

const FresnelTable& table() {
  static const FresnelTable t;
  return t;
}

inline Scalar hermite(Scalar u, Scalar h, Scalar f0, Scalar f1, Scalar d0, Scalar d1) {
  const Scalar u2 = u * u;
  const Scalar u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * f0 + (u3 - 2 * u2 + u) * h * d0 + (-2 * u3 + 3 * u2) * f1 +
         (u3 - u2) * h * d1;
}

// Auxiliary asymptotic expansion (valid for x >> 1):
//   C(x) = 1/2 + f sin(pi x^2/2) - g cos(pi x^2/2)
//   S(x) = 1/2 - f cos(pi x^2/2) - g sin(pi x^2/2)
// with pi x f = sum (-1)^m (4m-1)!! / (pi x^2)^(2m) and
//      pi x g = sum (-1)^m (4m+1)!! / (pi x^2)^(2m+1).
std::pair<Scalar, Scalar> fresnel_asymptotic(Scalar x) {
  const Scalar z = kPi * x * x;
  const Scalar z2 = z * z;
  Scalar f = 1.0, g = 1.0 / z;
  Scalar num_f = 1.0, num_g = 1.0;
  Scalar zp = 1.0;
  for (int m = 1; m <= 4; ++m) {
    num_f *= static_cast<Scalar>((4 * m - 3) * (4 * m - 1));
    num_g *= static_cast<Scalar>((4 * m - 1) * (4 * m + 1));
    zp *= z2;
    const Scalar sign = (m % 2 == 0) ? 1.0 : -1.0;
    f += sign * num_f / zp;
    g += sign * num_g / (zp * z);
  }
  f /= kPi * x;
  g /= kPi * x;
  const Scalar phase = 0.5 * kPi * x * x;
  const Scalar sp = std::sin(phase);
  const Scalar cp = std::cos(phase);
  return {0.5 + f * sp - g * cp, 0.5 - f * cp - g * sp};
}

}  // namespace

std::pair<Scalar, Scalar> fresnel_cs(Scalar x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("fresnel_cs: non-finite argument");
  }
  const Scalar ax = std::abs(x);
  Scalar cv, sv;
  if (ax < kTableMax) {
    const auto& t = table();
    auto i = static_cast<std::size_t>(ax / kTableStep);
    if (i + 1 >= t.c.size()) i = t.c.size() - 2;
    const Scalar x0 = static_cast<Scalar>(i) * kTableStep;
    const Scalar u = (ax - x0) / kTableStep;
    cv = hermite(u, kTableStep, t.c[i], t.c[i + 1], t.dc[i], t.dc[i + 1]);
    sv = hermite(u, kTableStep, t.s[i], t.s[i + 1], t.ds[i], t.ds[i + 1]);
  } else {
    std::tie(cv, sv) = fresnel_asymptotic(ax);
  }
  if (x < 0) {
    cv = -cv;
    sv = -sv;
  }
  return {cv, sv};
}

Complex fresnel_edge_factor(Scalar nu) {
  const auto [cv, sv] = fresnel_cs(nu);
  // ((1+j)/2) * ((1/2 - C) - j (1/2 - S))
  const Scalar re = 0.5 - cv;
  const Scalar im = -(0.5 - sv);
  return {0.5 * (re - im), 0.5 * (re + im)};
}

Complex strip_factor(Scalar nu_a, Scalar nu_b) {
  if (nu_a > nu_b) {
    throw std::invalid_argument("strip_factor: nu_a must not exceed nu_b");
  }
  return fresnel_edge_factor(nu_a) - fresnel_edge_factor(nu_b);
}

Scalar fresnel_parameter(Scalar h, Scalar d1, Scalar d2, Scalar lambda) {
  if (d1 <= 0.0 || d2 <= 0.0 || lambda <= 0.0) {
    throw std::invalid_argument("fresnel_parameter: d1, d2 and lambda must be positive");
  }
  return h * std::sqrt(2.0 * (d1 + d2) / (lambda * d1 * d2));
}

}  // namespace blockcast
