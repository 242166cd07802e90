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
// 2-D primitives for the propagation engine: image-method reflection off a
// finite strip, knife-edge clearance of the direct ray, and the angles the
// array responses are evaluated at.

#pragma once

#include <optional>

#include "blockcast/types.hpp"

namespace blockcast {

/// Infinite line through `point` along `direction` (need not be unit length).
struct Line2 {
  Vec2 point;
  Vec2 direction;
};

/// Flat reflecting strip: center position, length in meters, orientation in
/// degrees CCW from the +x axis.
struct StripReflector {
  Vec2 center{0.0, 0.0};
  Scalar length = 1.0;
  Scalar angle_deg = 0.0;

  Vec2 direction() const;        // unit vector along the strip
  Vec2 end_a() const;            // center - (length/2) * direction
  Vec2 end_b() const;            // center + (length/2) * direction
};

/// Specular reflection geometry produced by the method of images.
struct ReflectionGeometry {
  Vec2 image_point;        // tx mirrored across the reflector line
  Vec2 specular_point;     // may lie outside the strip
  Scalar path_length;      // |tx -> specular| + |specular -> rx|
  Scalar edge_offset_a;    // signed meters from specular point to strip ends,
  Scalar edge_offset_b;    // ordered so edge_offset_a <= edge_offset_b
  Vec2 departure_dir;      // unit, tx -> specular
  Vec2 arrival_dir;        // unit, rx -> specular
};

/// Knife-edge clearance of a ray [tx, rx] against a blocker edge tip.
///
/// h > 0 once the tip has crossed the tx-rx line moving along its approach
/// direction (ray geometrically blocked); h < 0 while still clear. When the
/// foot of the perpendicular falls outside the segment the clearance is
/// inactive and the diffraction factor must be forced to 1.
struct ClearanceGeometry {
  Scalar h = 0.0;     // signed perpendicular offset of the tip, meters
  Scalar d1 = 0.0;    // tx to foot of perpendicular
  Scalar d2 = 0.0;    // foot to rx
  bool active = false;
};

/// Mirror p across an infinite line. Throws on a degenerate direction.
Vec2 mirror_point(const Vec2& p, const Line2& line);

/// Image-method reflection of tx -> rx off a strip. Returns nothing when the
/// endpoints sit on opposite sides of the reflector line (no specular path);
/// throws when either endpoint lies on the line itself.
std::optional<ReflectionGeometry> reflect_path(const Vec2& tx, const Vec2& rx,
                                               const StripReflector& reflector);

/// Clearance of the tx-rx ray against a blocker edge tip approaching along
/// approach_dir. The sign convention follows the crossing direction: the
/// opaque half-line trails behind the tip, so the ray is blocked exactly when
/// the tip has passed through it.
ClearanceGeometry los_clearance(const Vec2& tx, const Vec2& rx, const Vec2& edge_tip,
                                const Vec2& approach_dir);

/// Angle in [0, pi] between an array axis and a propagation direction.
Scalar angle_from_endfire(const Vec2& axis, const Vec2& dir);

}  // namespace blockcast
