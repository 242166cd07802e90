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
// World description and the randomized scenario generator. Generation is a
// pure function of (master seed, scenario index); regenerating a dataset
// yields identical bytes.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockcast/geometry.hpp"
#include "blockcast/rng.hpp"
#include "blockcast/types.hpp"

namespace blockcast {

/// Straight-line constant-speed motion.
struct Trajectory {
  Vec2 origin{0.0, 0.0};
  Vec2 direction{1.0, 0.0};  // unit
  Scalar speed_mps = 0.0;
  Scalar duration_ms = 1000.0;

  Vec2 position_at(Scalar t_ms) const { return origin + direction * (speed_mps * t_ms / 1000.0); }
};

struct ReflectorMotion {
  enum class Kind { kStatic, kTranslating, kRotating };
  Kind kind = Kind::kStatic;
  Vec2 direction{1.0, 0.0};  // translating
  Scalar speed_mps = 0.0;    // translating, in [0, 30]
  Scalar angle_start_deg = 0.0;  // rotating, in [0, 360)
  Scalar angle_end_deg = 0.0;
};

struct MovingReflector {
  StripReflector shape;
  ReflectorMotion motion;
};

struct Scenario {
  std::uint64_t id = 0;
  std::uint64_t rng_seed = 0;  // derived stream seed, kept for provenance
  Scalar duration_ms = 1000.0;
  Vec2 bs{0.0, 0.0};
  Trajectory ue;
  Trajectory blocker;  // knife-edge tip
  std::vector<MovingReflector> reflectors;
};

/// World snapshot at one instant.
struct WorldPose {
  Vec2 ue;
  Vec2 blocker_tip;
  std::vector<StripReflector> reflectors;
};

/// Randomization ranges following the dataset protocol.
struct GeneratorConfig {
  Vec2 region_min{0.0, 0.0};
  Vec2 region_max{160.0, 60.0};
  Vec2 bs_line_a{-40.0, 0.0};
  Vec2 bs_line_b{-0.5, 0.0};
  int q_min = 0;
  int q_max = 10;
  Scalar size_min_m = 0.1;
  Scalar size_max_m = 2.0;
  Scalar speed_min_mps = 0.0;   // UE and blocker
  Scalar speed_max_mps = 30.0;
  Scalar reflector_speed_min_mps = 0.0;  // translating reflectors
  Scalar reflector_speed_max_mps = 30.0;
  Scalar duration_ms = 1000.0;
  std::uint64_t master_seed = 1;
  int max_attempts = 10000;

  /// Motion rule: kQThreshold enables movers/rotators only for Q >= 8 with
  /// the equiprobable split per Q; kTwoMovers forces two translating
  /// reflectors for every Q and adds one rotating reflector when Q >= 9.
  enum class MotionRule { kQThreshold, kTwoMovers };
  MotionRule motion_rule = MotionRule::kQThreshold;
};

/// Deterministic scenario draw for (cfg.master_seed, index).
Scenario gen_scenario(std::uint64_t index, const GeneratorConfig& cfg);

/// Pose every moving body at time t in [0, duration]. Throws out of range.
WorldPose pose_at(const Scenario& scenario, Scalar t_ms);

/// Whether the knife edge geometrically cuts the BS-UE ray at this pose.
bool geometrically_blocked(const Vec2& bs, const Vec2& ue, const Vec2& blocker_tip,
                           const Vec2& blocker_dir);

/// JSON serialization with a stable key order and full unit-suffixed names.
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);
void save_scenario(const std::string& path, const Scenario& s);
Scenario load_scenario(const std::string& path);

}  // namespace blockcast
