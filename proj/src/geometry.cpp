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

#include "blockcast/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace blockcast {

namespace {
constexpr Scalar kDegenerate = 1e-12;
}

Vec2 StripReflector::direction() const {
  const Scalar a = angle_deg * kPi / 180.0;
  return Vec2(std::cos(a), std::sin(a));
}

Vec2 StripReflector::end_a() const { return center - 0.5 * length * direction(); }
Vec2 StripReflector::end_b() const { return center + 0.5 * length * direction(); }

Vec2 mirror_point(const Vec2& p, const Line2& line) {
  const Scalar len = line.direction.norm();
  if (len < kDegenerate) {
    throw std::invalid_argument("mirror_point: degenerate line direction");
  }
  const Vec2 u = line.direction / len;
  const Vec2 foot = line.point + u * u.dot(p - line.point);
  return 2.0 * foot - p;
}

std::optional<ReflectionGeometry> reflect_path(const Vec2& tx, const Vec2& rx,
                                               const StripReflector& reflector) {
  const Vec2 u = reflector.direction();
  const Scalar side_tx = cross2(u, tx - reflector.center);
  const Scalar side_rx = cross2(u, rx - reflector.center);

  if (std::abs(side_tx) < kDegenerate || std::abs(side_rx) < kDegenerate) {
    throw std::invalid_argument("reflect_path: endpoint on the reflector line");
  }
  if ((side_tx > 0) != (side_rx > 0)) {
    return std::nullopt;  // opposite sides: no specular reflection
  }

  ReflectionGeometry g;
  g.image_point = mirror_point(tx, Line2{reflector.center, u});

  // The image and rx are on opposite sides, so the segment image->rx always
  // crosses the reflector line.
  const Vec2 seg = rx - g.image_point;
  const Scalar denom = cross2(u, seg);
  const Scalar t = cross2(u, reflector.center - g.image_point) / denom;
  g.specular_point = g.image_point + t * seg;

  g.path_length = (rx - g.image_point).norm();

  const Scalar sa = u.dot(reflector.end_a() - g.specular_point);
  const Scalar sb = u.dot(reflector.end_b() - g.specular_point);
  g.edge_offset_a = std::min(sa, sb);
  g.edge_offset_b = std::max(sa, sb);

  g.departure_dir = (g.specular_point - tx).normalized();
  g.arrival_dir = (g.specular_point - rx).normalized();
  return g;
}

ClearanceGeometry los_clearance(const Vec2& tx, const Vec2& rx, const Vec2& edge_tip,
                                const Vec2& approach_dir) {
  const Vec2 seg = rx - tx;
  const Scalar len = seg.norm();
  if (len < kDegenerate) {
    throw std::invalid_argument("los_clearance: coincident tx and rx");
  }
  const Vec2 e = seg / len;
  const Vec2 n = perp(e);

  ClearanceGeometry c;
  const Scalar along = e.dot(edge_tip - tx);
  c.d1 = along;
  c.d2 = len - along;
  c.active = along > 0.0 && along < len;

  const Scalar offset = n.dot(edge_tip - tx);
  const Scalar orient = n.dot(approach_dir);
  if (std::abs(orient) < kDegenerate) {
    // Approach parallel to the ray: the tip never crosses, keep it on the
    // unblocked side.
    c.h = -std::abs(offset);
  } else {
    c.h = orient > 0.0 ? offset : -offset;
  }
  return c;
}

Scalar angle_from_endfire(const Vec2& axis, const Vec2& dir) {
  const Scalar na = axis.norm();
  const Scalar nd = dir.norm();
  if (na < kDegenerate || nd < kDegenerate) {
    throw std::invalid_argument("angle_from_endfire: zero vector");
  }
  const Scalar c = std::clamp(axis.dot(dir) / (na * nd), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace blockcast
