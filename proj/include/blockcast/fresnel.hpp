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
//
// Knife-edge diffraction factors built on the Fresnel integrals
//
//   C(x) = int_0^x cos(pi t^2 / 2) dt,   S(x) = int_0^x sin(pi t^2 / 2) dt.
//
// The integrals are evaluated from a cumulative Gauss-Legendre table with
// cubic-Hermite interpolation (the integrands are the exact derivatives),
// switching to the asymptotic auxiliary-function expansion for large
// arguments. Absolute error is below 1e-10 everywhere.

#pragma once

#include <utility>

#include "blockcast/types.hpp"

namespace blockcast {

/// Fresnel cosine and sine integrals (C(x), S(x)). Both are odd in x.
std::pair<Scalar, Scalar> fresnel_cs(Scalar x);

/// Complex knife-edge factor F(nu) = ((1+j)/2) * int_nu^inf exp(-j pi t^2/2) dt.
///
/// |F| -> 1 as nu -> -inf (clear path, with ripple), |F(0)| = 1/2 at the
/// shadow boundary, |F| -> 0 as nu -> +inf (deep shadow).
Complex fresnel_edge_factor(Scalar nu);

/// Two-edge aperture factor F(nu_a) - F(nu_b) for a finite strip whose edges
/// sit at signed Fresnel parameters nu_a <= nu_b around the specular point.
/// Approaches 1 when the specular point is deep inside the strip and decays
/// with an oscillatory tail once both edges share a sign.
Complex strip_factor(Scalar nu_a, Scalar nu_b);

/// Dimensionless Fresnel parameter nu = h * sqrt(2 (d1+d2) / (lambda d1 d2)).
Scalar fresnel_parameter(Scalar h, Scalar d1, Scalar d2, Scalar lambda);

}  // namespace blockcast
