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

#include "blockcast/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "blockcast/threading.hpp"
#include "json.hpp"

namespace blockcast {

namespace {
using Json = nlohmann::ordered_json;
}

int WindowConfig::window_samples() const {
  const Scalar exact = w_ms * fs_hz / 1000.0;
  const auto n = static_cast<int>(std::llround(exact));
  if (n < 1 || std::abs(exact - static_cast<Scalar>(n)) > 1e-9) {
    throw std::invalid_argument("WindowConfig: W * fs must be a whole number of samples");
  }
  return n;
}

std::optional<Scalar> detect_tau(const RssTrace& trace, Scalar dwell_ms) {
  if (trace.samples.empty()) throw std::invalid_argument("detect_tau: empty trace");
  const Scalar ref = trace.samples.front();
  if (ref <= 0.0) throw std::invalid_argument("detect_tau: zero initial RSS");
  const Scalar threshold = 0.5 * ref;

  const auto n = trace.samples.size();
  // Samples covering [u, u + dwell], endpoints included.
  const auto dwell_samples = static_cast<std::size_t>(
      std::max<long long>(0, std::llround(dwell_ms * trace.fs_hz / 1000.0)) + 1);

  std::size_t run = 0;      // below-threshold run length starting at ri
  std::size_t best = n;     // earliest index whose run covers the (truncated) dwell
  for (std::size_t ri = n; ri-- > 0;) {
    run = trace.samples[ri] < threshold ? run + 1 : 0;
    const std::size_t needed = std::min(dwell_samples, n - ri);
    if (run >= needed && run > 0) best = ri;
  }
  if (best == n) return std::nullopt;
  return trace.time_ms(best);
}

std::optional<WindowPlacement> place_windows(int label, Scalar tau_or_len_ms, Rng& rng,
                                             const WindowConfig& cfg) {
  if (cfg.w_ms <= 0.0 || cfg.t1_ms <= 0.0 || cfg.p_ms <= 0.0) {
    throw std::invalid_argument("place_windows: W, t_1, P must be positive");
  }
  WindowPlacement placement;
  if (label == 1) {
    const Scalar tau = tau_or_len_ms;
    if (tau < cfg.w_ms + cfg.t1_ms + 0.5 * cfg.p_ms) return std::nullopt;
    placement.pred_a_ms = tau - 0.5 * cfg.p_ms;
    placement.pred_b_ms = tau + 0.5 * cfg.p_ms;
  } else {
    const Scalar len = tau_or_len_ms;
    if (len < cfg.w_ms + cfg.t1_ms + cfg.p_ms) return std::nullopt;
    placement.pred_a_ms = rng.uniform(cfg.w_ms + cfg.t1_ms, len - cfg.p_ms);
    placement.pred_b_ms = placement.pred_a_ms + cfg.p_ms;
  }
  placement.tau_r_ms = rng.uniform(placement.pred_a_ms, placement.pred_b_ms);
  placement.t_end_ms = placement.tau_r_ms - cfg.t1_ms;
  if (placement.t_end_ms - cfg.w_ms < 0.0) return std::nullopt;
  return placement;
}

namespace {

struct Candidate {
  bool valid = false;
  LabeledExample example;
};

Candidate make_candidate(std::uint64_t index, const GeneratorConfig& gen_cfg,
                         const WindowConfig& window_cfg, const ArrayConfig& arrays,
                         const PropagationConfig& prop_cfg) {
  Candidate out;
  const Scenario scenario = gen_scenario(index, gen_cfg);
  const RssTrace trace = synth_trace(scenario, arrays, window_cfg.fs_hz, prop_cfg);
  const auto tau = detect_tau(trace, window_cfg.dwell_ms);
  const int label = tau.has_value() ? 1 : 0;

  Rng rng(gen_cfg.master_seed, index, RngStream::kWindows);
  const auto placement =
      place_windows(label, label == 1 ? *tau : trace.duration_ms(), rng, window_cfg);
  if (!placement) return out;

  const int count = window_cfg.window_samples();
  const auto start = static_cast<long long>(
      std::llround((placement->t_end_ms - window_cfg.w_ms) * window_cfg.fs_hz / 1000.0));
  if (start < 0 || static_cast<std::size_t>(start + count) > trace.samples.size()) return out;

  out.valid = true;
  out.example.scenario_id = index;
  out.example.label = label;
  out.example.tau_ms = tau;
  out.example.tau_r_ms = placement->tau_r_ms;
  out.example.t_end_ms = placement->t_end_ms;
  out.example.fs_hz = window_cfg.fs_hz;
  out.example.samples.assign(trace.samples.begin() + start, trace.samples.begin() + start + count);
  return out;
}

}  // namespace

Dataset build_dataset(int n, const GeneratorConfig& gen_cfg, const WindowConfig& window_cfg,
                      const ArrayConfig& arrays, const PropagationConfig& prop_cfg) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("build_dataset: n must be even, > 0");
  window_cfg.window_samples();  // validate once up front

  Dataset ds;
  ds.generator = gen_cfg;
  ds.window = window_cfg;
  ds.arrays = arrays;
  ds.propagation = prop_cfg;
  ds.master_seed = gen_cfg.master_seed;
  ds.examples.reserve(static_cast<std::size_t>(n));

  const int per_label = n / 2;
  int count0 = 0, count1 = 0;
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;

  constexpr std::size_t kBatch = 64;
  std::vector<Candidate> batch(kBatch);
  std::uint64_t next_index = 0;

  while (count0 < per_label || count1 < per_label) {
    // infeasibility guard: after 10n attempts require >= 1% acceptance
    if (attempts >= static_cast<std::uint64_t>(10) * static_cast<std::uint64_t>(n) &&
        accepted * 100 < attempts) {
      throw InfeasibleConfig("build_dataset: acceptance rate below 1%");
    }
    parallel_for(0, kBatch, [&](std::size_t i) {
      batch[i] = make_candidate(next_index + i, gen_cfg, window_cfg, arrays, prop_cfg);
    });
    for (std::size_t i = 0; i < kBatch; ++i) {
      ++attempts;
      const Candidate& c = batch[i];
      if (!c.valid) continue;
      int& pool = c.example.label == 1 ? count1 : count0;
      if (pool >= per_label) continue;
      ++pool;
      ++accepted;
      ds.examples.push_back(c.example);
      if (count0 == per_label && count1 == per_label) break;
    }
    next_index += kBatch;
  }
  return ds;
}

namespace {

Json generator_json(const GeneratorConfig& g) {
  return Json{{"region_min", {g.region_min.x(), g.region_min.y()}},
              {"region_max", {g.region_max.x(), g.region_max.y()}},
              {"bs_line_a", {g.bs_line_a.x(), g.bs_line_a.y()}},
              {"bs_line_b", {g.bs_line_b.x(), g.bs_line_b.y()}},
              {"q_min", g.q_min},
              {"q_max", g.q_max},
              {"size_min_m", g.size_min_m},
              {"size_max_m", g.size_max_m},
              {"speed_min_mps", g.speed_min_mps},
              {"speed_max_mps", g.speed_max_mps},
              {"reflector_speed_min_mps", g.reflector_speed_min_mps},
              {"reflector_speed_max_mps", g.reflector_speed_max_mps},
              {"duration_ms", g.duration_ms},
              {"master_seed", g.master_seed},
              {"max_attempts", g.max_attempts},
              {"motion_rule",
               g.motion_rule == GeneratorConfig::MotionRule::kQThreshold ? "q_threshold"
                                                                         : "two_movers"}};
}

GeneratorConfig generator_from(const Json& j) {
  GeneratorConfig g;
  g.region_min = Vec2(j.at("region_min")[0].get<Scalar>(), j.at("region_min")[1].get<Scalar>());
  g.region_max = Vec2(j.at("region_max")[0].get<Scalar>(), j.at("region_max")[1].get<Scalar>());
  g.bs_line_a = Vec2(j.at("bs_line_a")[0].get<Scalar>(), j.at("bs_line_a")[1].get<Scalar>());
  g.bs_line_b = Vec2(j.at("bs_line_b")[0].get<Scalar>(), j.at("bs_line_b")[1].get<Scalar>());
  g.q_min = j.at("q_min").get<int>();
  g.q_max = j.at("q_max").get<int>();
  g.size_min_m = j.at("size_min_m").get<Scalar>();
  g.size_max_m = j.at("size_max_m").get<Scalar>();
  g.speed_min_mps = j.at("speed_min_mps").get<Scalar>();
  g.speed_max_mps = j.at("speed_max_mps").get<Scalar>();
  g.reflector_speed_min_mps = j.at("reflector_speed_min_mps").get<Scalar>();
  g.reflector_speed_max_mps = j.at("reflector_speed_max_mps").get<Scalar>();
  g.duration_ms = j.at("duration_ms").get<Scalar>();
  g.master_seed = j.at("master_seed").get<std::uint64_t>();
  g.max_attempts = j.at("max_attempts").get<int>();
  g.motion_rule = j.at("motion_rule").get<std::string>() == "two_movers"
                      ? GeneratorConfig::MotionRule::kTwoMovers
                      : GeneratorConfig::MotionRule::kQThreshold;
  return g;
}

Json header_json(const Dataset& ds) {
  return Json{{"format", "blockcast-dataset"},
              {"version", 1},
              {"n", ds.examples.size()},
              {"master_seed", ds.master_seed},
              {"window",
               Json{{"w_ms", ds.window.w_ms},
                    {"t1_ms", ds.window.t1_ms},
                    {"p_ms", ds.window.p_ms},
                    {"fs_hz", ds.window.fs_hz},
                    {"dwell_ms", ds.window.dwell_ms}}},
              {"arrays",
               Json{{"bs_elements", ds.arrays.bs_elements},
                    {"ue_elements", ds.arrays.ue_elements},
                    {"bs_spacing_m", ds.arrays.bs_spacing_m},
                    {"ue_spacing_m", ds.arrays.ue_spacing_m},
                    {"carrier_hz", ds.arrays.carrier_hz}}},
              {"propagation",
               Json{{"reflection_coefficient_re", ds.propagation.reflection_coefficient.real()},
                    {"reflection_coefficient_im", ds.propagation.reflection_coefficient.imag()},
                    {"min_reflector_length_m", ds.propagation.min_reflector_length_m},
                    {"grazing_tolerance_m", ds.propagation.grazing_tolerance_m}}},
              {"generator", generator_json(ds.generator)}};
}

void header_from(const Json& j, Dataset& ds) {
  if (j.value("format", "") != "blockcast-dataset") {
    throw IoError("dataset header: not a blockcast-dataset file");
  }
  ds.master_seed = j.at("master_seed").get<std::uint64_t>();
  const auto& w = j.at("window");
  ds.window.w_ms = w.at("w_ms").get<Scalar>();
  ds.window.t1_ms = w.at("t1_ms").get<Scalar>();
  ds.window.p_ms = w.at("p_ms").get<Scalar>();
  ds.window.fs_hz = w.at("fs_hz").get<Scalar>();
  ds.window.dwell_ms = w.at("dwell_ms").get<Scalar>();
  const auto& a = j.at("arrays");
  ds.arrays.bs_elements = a.at("bs_elements").get<int>();
  ds.arrays.ue_elements = a.at("ue_elements").get<int>();
  ds.arrays.bs_spacing_m = a.at("bs_spacing_m").get<Scalar>();
  ds.arrays.ue_spacing_m = a.at("ue_spacing_m").get<Scalar>();
  ds.arrays.carrier_hz = a.at("carrier_hz").get<Scalar>();
  const auto& p = j.at("propagation");
  ds.propagation.reflection_coefficient = {p.at("reflection_coefficient_re").get<Scalar>(),
                                           p.at("reflection_coefficient_im").get<Scalar>()};
  ds.propagation.min_reflector_length_m = p.at("min_reflector_length_m").get<Scalar>();
  ds.propagation.grazing_tolerance_m = p.at("grazing_tolerance_m").get<Scalar>();
  ds.generator = generator_from(j.at("generator"));
}

}  // namespace

std::string dataset_to_ndjson(const Dataset& dataset) {
  std::ostringstream out;
  out << header_json(dataset).dump() << "\n";
  for (const auto& ex : dataset.examples) {
    Json j;
    j["scenario_id"] = ex.scenario_id;
    j["label"] = ex.label;
    if (ex.tau_ms.has_value()) {
      j["tau_ms"] = *ex.tau_ms;
    } else {
      j["tau_ms"] = nullptr;
    }
    j["tau_r_ms"] = ex.tau_r_ms;
    j["T_ms"] = ex.t_end_ms;
    j["fs_hz"] = ex.fs_hz;
    j["samples"] = ex.samples;
    out << j.dump() << "\n";
  }
  return out.str();
}

Dataset dataset_from_ndjson(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  Dataset ds;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const std::exception& e) {
      throw IoError("dataset line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      if (!have_header) {
        header_from(j, ds);
        have_header = true;
        continue;
      }
      LabeledExample ex;
      ex.scenario_id = j.at("scenario_id").get<std::uint64_t>();
      ex.label = j.at("label").get<int>();
      if (!j.at("tau_ms").is_null()) ex.tau_ms = j.at("tau_ms").get<Scalar>();
      ex.tau_r_ms = j.at("tau_r_ms").get<Scalar>();
      ex.t_end_ms = j.at("T_ms").get<Scalar>();
      ex.fs_hz = j.at("fs_hz").get<Scalar>();
      ex.samples = j.at("samples").get<std::vector<Scalar>>();
      ds.examples.push_back(std::move(ex));
    } catch (const IoError&) {
      throw;
    } catch (const std::exception& e) {
      throw IoError("dataset line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw IoError("dataset: missing header line");
  return ds;
}

void save_dataset(const std::string& path, const Dataset& dataset) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << dataset_to_ndjson(dataset);
  if (!out) throw IoError("write failure: " + path);
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return dataset_from_ndjson(text);
}

}  // namespace blockcast
