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
// Narrowband multipath channel with knife-edge diffraction and uniform
// linear arrays at both ends. Per-path complex gains are combined through
// the array responses without ever materializing the LxM channel matrix.

#pragma once

#include <vector>

#include "blockcast/fresnel.hpp"
#include "blockcast/geometry.hpp"
#include "blockcast/scenario.hpp"
#include "blockcast/types.hpp"

namespace blockcast {

/// Uniform linear arrays at BS (L elements) and UE (M elements).
struct ArrayConfig {
  int bs_elements = 16;
  int ue_elements = 4;
  Scalar bs_spacing_m = 0.0;  // 0 -> lambda/2
  Scalar ue_spacing_m = 0.0;
  Scalar carrier_hz = 30e9;

  Scalar wavelength() const { return kSpeedOfLight / carrier_hz; }
  Scalar bs_spacing() const { return bs_spacing_m > 0.0 ? bs_spacing_m : 0.5 * wavelength(); }
  Scalar ue_spacing() const { return ue_spacing_m > 0.0 ? ue_spacing_m : 0.5 * wavelength(); }

  static ArrayConfig mimo(int l, int m, Scalar carrier_hz) { return {l, m, 0.0, 0.0, carrier_hz}; }
  static ArrayConfig omni(Scalar carrier_hz) { return {1, 1, 0.0, 0.0, carrier_hz}; }
};

struct PropagationConfig {
  Complex reflection_coefficient{-0.8, 0.0};  // |Gamma| <= 1
  Scalar min_reflector_length_m = 1e-3;       // shorter strips treated as absent
  Scalar grazing_tolerance_m = 1e-9;          // skip reflections with an endpoint on the line
  bool keep_complex = false;                  // retain complex samples in traces
};

/// One multipath component feeding the combined channel gain: complex scalar
/// gain plus departure/arrival angles measured from the array endfires.
struct MpcComponent {
  Complex gain{0.0, 0.0};
  Scalar theta_t = 0.0;  // [0, pi]
  Scalar theta_r = 0.0;
};

/// Uniformly sampled RSS trace |h'(t)|.
struct RssTrace {
  Scalar fs_hz = 0.0;
  Scalar t0_ms = 0.0;
  std::vector<Scalar> samples;
  std::vector<Complex> complex_samples;  // filled when requested

  Scalar time_ms(std::size_t i) const { return t0_ms + 1000.0 * static_cast<Scalar>(i) / fs_hz; }
  Scalar duration_ms() const { return 1000.0 * static_cast<Scalar>(samples.size()) / fs_hz; }
};

/// Steering vector: element i = exp(j 2 pi i delta cos(theta) / lambda).
CVec steering_vector(Scalar theta, int n, Scalar delta, Scalar lambda);

/// Unit-norm beamformer pointed at theta0: steering_vector / sqrt(n).
CVec beamformer(Scalar theta0, int n, Scalar delta, Scalar lambda);

/// V(theta0)^H a(theta) evaluated in closed form (Dirichlet kernel); equals
/// beamformer(theta0).dot-product with steering_vector(theta) to rounding.
Complex beamformer_response(Scalar theta0, Scalar theta, int n, Scalar delta, Scalar lambda);

/// Knife-edge factor for a clearance lying on a (possibly unfolded) path:
/// the screen sits pre_m after the source and post_m before the sink, so the
/// Fresnel distances are d1 = pre_m + clearance.d1 and d2 = clearance.d2 +
/// post_m. Inactive clearance yields exactly 1.
Complex blocker_factor(const ClearanceGeometry& clearance, Scalar pre_m, Scalar post_m,
                       Scalar lambda);

/// Direct-path gain: (lambda / 4 pi d) e^{-j 2 pi d / lambda} F(nu_blocker).
Complex direct_mpc_gain(Scalar distance_m, const ClearanceGeometry& blocker, Scalar lambda);

/// Reflected-path gain: free-space amplitude over the unfolded length, the
/// reflection coefficient, the finite-strip factor from the signed edge
/// offsets, and per-leg blocker diffraction.
Complex reflected_mpc_gain(const ReflectionGeometry& path, const ClearanceGeometry& leg1_blocker,
                           const ClearanceGeometry& leg2_blocker, Scalar leg1_m, Scalar leg2_m,
                           const PropagationConfig& cfg, Scalar lambda);

/// Combined gain h' = V_r^H (sum_q h_q a_r(theta_rq) a_t^H(theta_tq)) V_t,
/// evaluated as sum_q h_q (V_r^H a_r)(a_t^H V_t).
Complex combine_channel(const std::vector<MpcComponent>& mpcs, const ArrayConfig& arrays,
                        const CVec& v_t, const CVec& v_r);

/// combine_channel specialized to beamformers pointed at (theta_t0, theta_r0),
/// using the closed-form array responses. Identical result, no allocation.
Complex combine_channel_beamformed(const std::vector<MpcComponent>& mpcs,
                                   const ArrayConfig& arrays, Scalar theta_t0, Scalar theta_r0);

/// Synthesize the RSS trace of a scenario at rate fs. Beamformers track the
/// geometric LoS direction while it is clear and hold the last clear bearing
/// through blocked stretches.
RssTrace synth_trace(const Scenario& scenario, const ArrayConfig& arrays, Scalar fs_hz,
                     const PropagationConfig& cfg);

/// Per-sample multipath components for one world pose; exposed for tests and
/// the trace synthesizer.
std::vector<MpcComponent> world_mpcs(const Vec2& bs, const WorldPose& pose,
                                     const Vec2& blocker_dir, const Vec2& ue_axis,
                                     const PropagationConfig& cfg, Scalar lambda);

/// Trace CSV with header `t_ms,rss` (15 significant digits).
std::string trace_to_csv(const RssTrace& trace);

}  // namespace blockcast
