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

#include "blockcast/propagation.hpp"

#include <cmath>
#include <sstream>

namespace blockcast {

CVec steering_vector(Scalar theta, int n, Scalar delta, Scalar lambda) {
  if (n < 1 || delta <= 0.0 || lambda <= 0.0) {
    throw std::invalid_argument("steering_vector: need n >= 1, delta > 0, lambda > 0");
  }
  const Scalar step = 2.0 * kPi * delta * std::cos(theta) / lambda;
  CVec a(n);
  for (int i = 0; i < n; ++i) a(i) = std::polar(1.0, step * static_cast<Scalar>(i));
  return a;
}

CVec beamformer(Scalar theta0, int n, Scalar delta, Scalar lambda) {
  return steering_vector(theta0, n, delta, lambda) / std::sqrt(static_cast<Scalar>(n));
}

Complex beamformer_response(Scalar theta0, Scalar theta, int n, Scalar delta, Scalar lambda) {
  // V^H a = (1/sqrt(n)) sum_i e^{j i d}, d = 2 pi delta (cos theta - cos theta0) / lambda
  const Scalar d = 2.0 * kPi * delta * (std::cos(theta) - std::cos(theta0)) / lambda;
  const Scalar half = 0.5 * d;
  const Scalar sin_half = std::sin(half);
  const Scalar inv_sqrt_n = 1.0 / std::sqrt(static_cast<Scalar>(n));
  if (std::abs(sin_half) < 1e-9) {
    // At (or numerically near) a grating lobe the geometric-series form is
    // ill-conditioned; sum the few terms directly.
    Complex acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) acc += std::polar(1.0, d * static_cast<Scalar>(i));
    return acc * inv_sqrt_n;
  }
  const Scalar ratio = std::sin(static_cast<Scalar>(n) * half) / sin_half;
  return std::polar(ratio * inv_sqrt_n, half * static_cast<Scalar>(n - 1));
}

Complex blocker_factor(const ClearanceGeometry& clearance, Scalar pre_m, Scalar post_m,
                       Scalar lambda) {
  if (!clearance.active) return {1.0, 0.0};
  const Scalar d1 = pre_m + clearance.d1;
  const Scalar d2 = clearance.d2 + post_m;
  if (d1 <= 0.0 || d2 <= 0.0) return {1.0, 0.0};
  return fresnel_edge_factor(fresnel_parameter(clearance.h, d1, d2, lambda));
}

namespace {

inline Complex free_space(Scalar d, Scalar lambda) {
  // amplitude lambda/(4 pi d), phase -2 pi d / lambda
  return std::polar(lambda / (4.0 * kPi * d), -2.0 * kPi * d / lambda);
}

}  // namespace

Complex direct_mpc_gain(Scalar distance_m, const ClearanceGeometry& blocker, Scalar lambda) {
  if (distance_m <= 0.0) {
    throw std::invalid_argument("direct_mpc_gain: coincident endpoints");
  }
  return free_space(distance_m, lambda) * blocker_factor(blocker, 0.0, 0.0, lambda);
}

Complex reflected_mpc_gain(const ReflectionGeometry& path, const ClearanceGeometry& leg1_blocker,
                           const ClearanceGeometry& leg2_blocker, Scalar leg1_m, Scalar leg2_m,
                           const PropagationConfig& cfg, Scalar lambda) {
  if (path.path_length <= 0.0 || leg1_m <= 0.0 || leg2_m <= 0.0) {
    throw std::invalid_argument("reflected_mpc_gain: degenerate path");
  }
  const Scalar nu_a = fresnel_parameter(path.edge_offset_a, leg1_m, leg2_m, lambda);
  const Scalar nu_b = fresnel_parameter(path.edge_offset_b, leg1_m, leg2_m, lambda);
  return free_space(path.path_length, lambda) * cfg.reflection_coefficient *
         strip_factor(nu_a, nu_b) * blocker_factor(leg1_blocker, 0.0, leg2_m, lambda) *
         blocker_factor(leg2_blocker, leg1_m, 0.0, lambda);
}

Complex combine_channel(const std::vector<MpcComponent>& mpcs, const ArrayConfig& arrays,
                        const CVec& v_t, const CVec& v_r) {
  if (v_t.size() != arrays.bs_elements || v_r.size() != arrays.ue_elements) {
    throw std::invalid_argument("combine_channel: beamformer size mismatch");
  }
  const Scalar lambda = arrays.wavelength();
  Complex acc{0.0, 0.0};
  for (const auto& mpc : mpcs) {
    const CVec a_t = steering_vector(mpc.theta_t, arrays.bs_elements, arrays.bs_spacing(), lambda);
    const CVec a_r = steering_vector(mpc.theta_r, arrays.ue_elements, arrays.ue_spacing(), lambda);
    acc += mpc.gain * v_r.dot(a_r) * a_t.dot(v_t);
  }
  return acc;
}

Complex combine_channel_beamformed(const std::vector<MpcComponent>& mpcs,
                                   const ArrayConfig& arrays, Scalar theta_t0, Scalar theta_r0) {
  const Scalar lambda = arrays.wavelength();
  Complex acc{0.0, 0.0};
  for (const auto& mpc : mpcs) {
    // a_t^H V_t = conj(V_t^H a_t)
    const Complex rx = beamformer_response(theta_r0, mpc.theta_r, arrays.ue_elements,
                                           arrays.ue_spacing(), lambda);
    const Complex tx = beamformer_response(theta_t0, mpc.theta_t, arrays.bs_elements,
                                           arrays.bs_spacing(), lambda);
    acc += mpc.gain * rx * std::conj(tx);
  }
  return acc;
}

std::vector<MpcComponent> world_mpcs(const Vec2& bs, const WorldPose& pose,
                                     const Vec2& blocker_dir, const Vec2& ue_axis,
                                     const PropagationConfig& cfg, Scalar lambda) {
  const Vec2 ue = pose.ue;
  const Scalar d0 = (ue - bs).norm();
  if (d0 < 1e-9) {
    throw std::runtime_error("world_mpcs: UE coincides with BS");
  }
  const Vec2 bs_axis(1.0, 0.0);
  const Vec2 los_dir = (ue - bs) / d0;

  std::vector<MpcComponent> mpcs;
  mpcs.reserve(pose.reflectors.size() + 1);

  MpcComponent direct;
  direct.gain = direct_mpc_gain(d0, los_clearance(bs, ue, pose.blocker_tip, blocker_dir), lambda);
  direct.theta_t = angle_from_endfire(bs_axis, los_dir);
  direct.theta_r = angle_from_endfire(ue_axis, -los_dir);
  mpcs.push_back(direct);

  for (const auto& strip : pose.reflectors) {
    if (strip.length < cfg.min_reflector_length_m) continue;
    const Vec2 u = strip.direction();
    if (std::abs(cross2(u, bs - strip.center)) < cfg.grazing_tolerance_m ||
        std::abs(cross2(u, ue - strip.center)) < cfg.grazing_tolerance_m) {
      continue;  // grazing incidence, no usable specular geometry
    }
    const auto geom = reflect_path(bs, ue, strip);
    if (!geom) continue;
    const Scalar leg1 = (geom->specular_point - bs).norm();
    const Scalar leg2 = (geom->specular_point - ue).norm();
    if (leg1 < 1e-9 || leg2 < 1e-9) continue;

    MpcComponent mpc;
    mpc.gain = reflected_mpc_gain(
        *geom, los_clearance(bs, geom->specular_point, pose.blocker_tip, blocker_dir),
        los_clearance(geom->specular_point, ue, pose.blocker_tip, blocker_dir), leg1, leg2, cfg,
        lambda);
    mpc.theta_t = angle_from_endfire(bs_axis, geom->departure_dir);
    mpc.theta_r = angle_from_endfire(ue_axis, geom->arrival_dir);
    mpcs.push_back(mpc);
  }
  return mpcs;
}

RssTrace synth_trace(const Scenario& scenario, const ArrayConfig& arrays, Scalar fs_hz,
                     const PropagationConfig& cfg) {
  if (fs_hz <= 0.0) throw std::invalid_argument("synth_trace: fs must be positive");
  const auto count = static_cast<std::size_t>(std::llround(scenario.duration_ms * fs_hz / 1000.0));
  if (count < 1) throw std::invalid_argument("synth_trace: scenario shorter than one sample");

  const Scalar lambda = arrays.wavelength();
  const Vec2 bs_axis(1.0, 0.0);
  const Vec2 ue_axis = scenario.ue.direction;

  RssTrace trace;
  trace.fs_hz = fs_hz;
  trace.t0_ms = 0.0;
  trace.samples.resize(count);
  if (cfg.keep_complex) trace.complex_samples.resize(count);

  // Beam bearings track the geometric LoS while it is clear and hold the
  // last clear bearing once the knife edge cuts the ray.
  bool have_bearing = false;
  Scalar theta_t0 = 0.0, theta_r0 = 0.0;

  for (std::size_t i = 0; i < count; ++i) {
    const Scalar t = 1000.0 * static_cast<Scalar>(i) / fs_hz;
    const WorldPose pose = pose_at(scenario, t);
    const Scalar d = (pose.ue - scenario.bs).norm();
    if (d < 1e-9) throw std::runtime_error("synth_trace: UE coincides with BS");
    const Vec2 los_dir = (pose.ue - scenario.bs) / d;

    const bool blocked =
        geometrically_blocked(scenario.bs, pose.ue, pose.blocker_tip, scenario.blocker.direction);
    if (!blocked || !have_bearing) {
      theta_t0 = angle_from_endfire(bs_axis, los_dir);
      theta_r0 = angle_from_endfire(ue_axis, -los_dir);
      have_bearing = true;
    }

    const auto mpcs =
        world_mpcs(scenario.bs, pose, scenario.blocker.direction, ue_axis, cfg, lambda);
    const Complex h = combine_channel_beamformed(mpcs, arrays, theta_t0, theta_r0);
    trace.samples[i] = std::abs(h);
    if (cfg.keep_complex) trace.complex_samples[i] = h;
  }
  return trace;
}

std::string trace_to_csv(const RssTrace& trace) {
  std::ostringstream out;
  out << "t_ms,rss\n";
  char line[80];
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.15g,%.15g\n", trace.time_ms(i), trace.samples[i]);
    out << line;
  }
  return out.str();
}

}  // namespace blockcast
