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

#include "blockcast/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "json.hpp"

namespace blockcast {

namespace {

using Json = nlohmann::ordered_json;

bool in_region(const Vec2& p, const GeneratorConfig& cfg) {
  return p.x() >= cfg.region_min.x() && p.x() <= cfg.region_max.x() && p.y() >= cfg.region_min.y() &&
         p.y() <= cfg.region_max.y();
}

Vec2 unit_from_angle(Scalar deg) {
  const Scalar a = deg * kPi / 180.0;
  return Vec2(std::cos(a), std::sin(a));
}

Scalar normalize_angle(Scalar deg) {
  Scalar a = std::fmod(deg, 360.0);
  if (a < 0.0) a += 360.0;
  return a;
}

}  // namespace

bool geometrically_blocked(const Vec2& bs, const Vec2& ue, const Vec2& blocker_tip,
                           const Vec2& blocker_dir) {
  const ClearanceGeometry c = los_clearance(bs, ue, blocker_tip, blocker_dir);
  return c.active && c.h >= 0.0;
}

namespace {

/// Direction/speed pair whose straight-line trajectory stays inside the
/// region for the whole duration.
Trajectory draw_contained(Rng& rng, const Vec2& origin, const GeneratorConfig& cfg) {
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Trajectory t;
    t.origin = origin;
    t.direction = unit_from_angle(rng.uniform(0.0, 360.0));
    t.speed_mps = rng.uniform(cfg.speed_min_mps, cfg.speed_max_mps);
    t.duration_ms = cfg.duration_ms;
    if (in_region(t.position_at(cfg.duration_ms), cfg)) return t;
  }
  throw InfeasibleConfig("gen_scenario: no contained trajectory found (region too small?)");
}

/// k distinct indices in [0, n), order meaningful (first picks move first).
std::vector<int> pick_distinct(Rng& rng, int n, int k) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  rng.shuffle(idx);
  idx.resize(static_cast<std::size_t>(k));
  return idx;
}

void assign_motion(Rng& rng, std::vector<MovingReflector>& reflectors, int n_translate,
                   int n_rotate, const GeneratorConfig& cfg) {
  const int q = static_cast<int>(reflectors.size());
  const auto chosen = pick_distinct(rng, q, n_translate + n_rotate);
  for (int i = 0; i < n_translate + n_rotate; ++i) {
    auto& m = reflectors[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])].motion;
    if (i < n_translate) {
      m.kind = ReflectorMotion::Kind::kTranslating;
      m.direction = unit_from_angle(rng.uniform(0.0, 360.0));
      m.speed_mps = rng.uniform(cfg.reflector_speed_min_mps, cfg.reflector_speed_max_mps);
    } else {
      m.kind = ReflectorMotion::Kind::kRotating;
      m.angle_start_deg = rng.uniform(0.0, 360.0);
      m.angle_end_deg = rng.uniform(0.0, 360.0);
    }
  }
}

}  // namespace

Scenario gen_scenario(std::uint64_t index, const GeneratorConfig& cfg) {
  if (cfg.q_min < 0 || cfg.q_max < cfg.q_min || cfg.size_min_m > cfg.size_max_m ||
      cfg.duration_ms <= 0.0) {
    throw std::invalid_argument("gen_scenario: invalid generator config");
  }

  Rng rng(cfg.master_seed, index, RngStream::kScenario);

  Scenario s;
  s.id = index;
  s.rng_seed = mix64(mix64(cfg.master_seed) + index);
  s.duration_ms = cfg.duration_ms;

  s.bs = cfg.bs_line_a + rng.uniform() * (cfg.bs_line_b - cfg.bs_line_a);

  s.blocker = draw_contained(rng, Vec2(0.0, 0.0), cfg);

  // UE origin uniform over the LoS sub-region: rejection against the initial
  // blocker edge.
  Vec2 ue_origin;
  bool found = false;
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    ue_origin = Vec2(rng.uniform(cfg.region_min.x(), cfg.region_max.x()),
                     rng.uniform(cfg.region_min.y(), cfg.region_max.y()));
    if ((ue_origin - s.bs).norm() < 1e-6) continue;
    if (!geometrically_blocked(s.bs, ue_origin, s.blocker.origin, s.blocker.direction)) {
      found = true;
      break;
    }
  }
  if (!found) throw InfeasibleConfig("gen_scenario: no LoS UE origin found");
  s.ue = draw_contained(rng, ue_origin, cfg);

  const int q = cfg.q_min + static_cast<int>(rng.uniform_int(
                                static_cast<std::uint64_t>(cfg.q_max - cfg.q_min + 1)));
  s.reflectors.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    MovingReflector r;
    r.shape.center = Vec2(rng.uniform(cfg.region_min.x(), cfg.region_max.x()),
                          rng.uniform(cfg.region_min.y(), cfg.region_max.y()));
    r.shape.length = rng.uniform(cfg.size_min_m, cfg.size_max_m);
    r.shape.angle_deg = rng.uniform(0.0, 360.0);
    s.reflectors.push_back(r);
  }

  if (cfg.motion_rule == GeneratorConfig::MotionRule::kQThreshold) {
    if (q == 8) {
      // one reflector moves or rotates, equiprobably
      const bool rotate = rng.uniform_int(2) == 1;
      assign_motion(rng, s.reflectors, rotate ? 0 : 1, rotate ? 1 : 0, cfg);
    } else if (q == 9) {
      // two movers | two rotators | one of each
      switch (rng.uniform_int(3)) {
        case 0: assign_motion(rng, s.reflectors, 2, 0, cfg); break;
        case 1: assign_motion(rng, s.reflectors, 0, 2, cfg); break;
        default: assign_motion(rng, s.reflectors, 1, 1, cfg); break;
      }
    } else if (q == 10) {
      // two move + one rotates | one moves + two rotate
      if (rng.uniform_int(2) == 0) {
        assign_motion(rng, s.reflectors, 2, 1, cfg);
      } else {
        assign_motion(rng, s.reflectors, 1, 2, cfg);
      }
    }
  } else {
    const int movers = std::min(q, 2);
    const int rotators = (q >= 9) ? 1 : 0;
    if (movers + rotators > 0) assign_motion(rng, s.reflectors, movers, rotators, cfg);
  }

  return s;
}

WorldPose pose_at(const Scenario& scenario, Scalar t_ms) {
  if (t_ms < 0.0 || t_ms > scenario.duration_ms) {
    throw std::out_of_range("pose_at: t outside [0, duration]");
  }
  WorldPose pose;
  pose.ue = scenario.ue.position_at(t_ms);
  pose.blocker_tip = scenario.blocker.position_at(t_ms);
  pose.reflectors.reserve(scenario.reflectors.size());
  for (const auto& r : scenario.reflectors) {
    StripReflector shape = r.shape;
    switch (r.motion.kind) {
      case ReflectorMotion::Kind::kStatic:
        break;
      case ReflectorMotion::Kind::kTranslating:
        shape.center += r.motion.direction * (r.motion.speed_mps * t_ms / 1000.0);
        break;
      case ReflectorMotion::Kind::kRotating: {
        const Scalar frac = t_ms / scenario.duration_ms;
        shape.angle_deg = normalize_angle(r.motion.angle_start_deg +
                                          frac * (r.motion.angle_end_deg - r.motion.angle_start_deg));
        break;
      }
    }
    pose.reflectors.push_back(shape);
  }
  return pose;
}

namespace {

Json point_json(const Vec2& p) { return Json{{"x_m", p.x()}, {"y_m", p.y()}}; }
Vec2 point_from(const Json& j) { return Vec2(j.at("x_m").get<Scalar>(), j.at("y_m").get<Scalar>()); }

Json trajectory_json(const Trajectory& t) {
  return Json{{"origin", point_json(t.origin)},
              {"direction", Json{{"x", t.direction.x()}, {"y", t.direction.y()}}},
              {"speed_mps", t.speed_mps},
              {"duration_ms", t.duration_ms}};
}

Trajectory trajectory_from(const Json& j) {
  Trajectory t;
  t.origin = point_from(j.at("origin"));
  t.direction = Vec2(j.at("direction").at("x").get<Scalar>(), j.at("direction").at("y").get<Scalar>());
  t.speed_mps = j.at("speed_mps").get<Scalar>();
  t.duration_ms = j.at("duration_ms").get<Scalar>();
  return t;
}

}  // namespace

std::string scenario_to_json(const Scenario& s) {
  Json j;
  j["id"] = s.id;
  j["rng_seed"] = s.rng_seed;
  j["duration_ms"] = s.duration_ms;
  j["bs"] = point_json(s.bs);
  j["ue"] = trajectory_json(s.ue);
  j["blocker"] = trajectory_json(s.blocker);
  Json refl = Json::array();
  for (const auto& r : s.reflectors) {
    Json rj;
    rj["center"] = point_json(r.shape.center);
    rj["length_m"] = r.shape.length;
    rj["angle_deg"] = r.shape.angle_deg;
    switch (r.motion.kind) {
      case ReflectorMotion::Kind::kStatic:
        rj["motion"] = Json{{"kind", "static"}};
        break;
      case ReflectorMotion::Kind::kTranslating:
        rj["motion"] = Json{{"kind", "translating"},
                            {"direction", Json{{"x", r.motion.direction.x()}, {"y", r.motion.direction.y()}}},
                            {"speed_mps", r.motion.speed_mps}};
        break;
      case ReflectorMotion::Kind::kRotating:
        rj["motion"] = Json{{"kind", "rotating"},
                            {"angle_start_deg", r.motion.angle_start_deg},
                            {"angle_end_deg", r.motion.angle_end_deg}};
        break;
    }
    refl.push_back(rj);
  }
  j["reflectors"] = refl;
  return j.dump();
}

Scenario scenario_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("scenario JSON parse failure: ") + e.what());
  }
  try {
    Scenario s;
    s.id = j.at("id").get<std::uint64_t>();
    s.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    s.duration_ms = j.at("duration_ms").get<Scalar>();
    s.bs = point_from(j.at("bs"));
    s.ue = trajectory_from(j.at("ue"));
    s.blocker = trajectory_from(j.at("blocker"));
    for (const auto& rj : j.at("reflectors")) {
      MovingReflector r;
      r.shape.center = point_from(rj.at("center"));
      r.shape.length = rj.at("length_m").get<Scalar>();
      r.shape.angle_deg = rj.at("angle_deg").get<Scalar>();
      const auto& mj = rj.at("motion");
      const std::string kind = mj.at("kind").get<std::string>();
      if (kind == "static") {
        r.motion.kind = ReflectorMotion::Kind::kStatic;
      } else if (kind == "translating") {
        r.motion.kind = ReflectorMotion::Kind::kTranslating;
        r.motion.direction =
            Vec2(mj.at("direction").at("x").get<Scalar>(), mj.at("direction").at("y").get<Scalar>());
        r.motion.speed_mps = mj.at("speed_mps").get<Scalar>();
      } else if (kind == "rotating") {
        r.motion.kind = ReflectorMotion::Kind::kRotating;
        r.motion.angle_start_deg = mj.at("angle_start_deg").get<Scalar>();
        r.motion.angle_end_deg = mj.at("angle_end_deg").get<Scalar>();
      } else {
        throw IoError("scenario JSON: unknown motion kind '" + kind + "'");
      }
      s.reflectors.push_back(r);
    }
    return s;
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw IoError(std::string("scenario JSON missing/invalid field: ") + e.what());
  }
}

void save_scenario(const std::string& path, const Scenario& s) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << scenario_to_json(s) << "\n";
  if (!out) throw IoError("write failure: " + path);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return scenario_from_json(text);
}

}  // namespace blockcast
