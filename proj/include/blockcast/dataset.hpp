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
// Labeled-example construction: RSS-drop detection, prediction/observation
// window placement, balanced dataset assembly and NDJSON persistence.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcast/propagation.hpp"
#include "blockcast/rng.hpp"
#include "blockcast/scenario.hpp"
#include "blockcast/types.hpp"

namespace blockcast {

/// Observation window W, prediction range t_1 and prediction window P, all in
/// milliseconds, plus the sampling rate. W * fs must be a whole number of
/// samples.
struct WindowConfig {
  Scalar w_ms = 400.0;
  Scalar t1_ms = 100.0;
  Scalar p_ms = 50.0;
  Scalar fs_hz = 4000.0;
  Scalar dwell_ms = 20.0;  // debounce for the RSS-drop detector

  int window_samples() const;
};

struct LabeledExample {
  std::uint64_t scenario_id = 0;
  int label = 0;                     // 1 = blockage inside the prediction window
  std::optional<Scalar> tau_ms;      // RSS-drop time, absent for label 0
  Scalar tau_r_ms = 0.0;             // random anchor inside the prediction window
  Scalar t_end_ms = 0.0;             // observation window end, T = tau_r - t_1
  Scalar fs_hz = 0.0;
  std::vector<Scalar> samples;       // observation window, length W * fs
};

struct Dataset {
  std::vector<LabeledExample> examples;
  GeneratorConfig generator;
  WindowConfig window;
  ArrayConfig arrays;
  PropagationConfig propagation;
  std::uint64_t master_seed = 0;
};

/// Earliest time u at which the RSS stays below half of the initial value for
/// the whole dwell period (truncated at the trace end); nothing when the
/// trace never drops. Throws when the initial sample is zero.
std::optional<Scalar> detect_tau(const RssTrace& trace, Scalar dwell_ms);

struct WindowPlacement {
  Scalar pred_a_ms = 0.0;  // prediction window [a, b]
  Scalar pred_b_ms = 0.0;
  Scalar tau_r_ms = 0.0;
  Scalar t_end_ms = 0.0;   // observation window is [T - W, T]
};

/// Place prediction and observation windows for one trace. For label 1 pass
/// the RSS-drop time tau; for label 0 pass the trace length. Returns nothing
/// when the placement preconditions fail (caller discards the scenario).
std::optional<WindowPlacement> place_windows(int label, Scalar tau_or_len_ms, Rng& rng,
                                             const WindowConfig& cfg);

/// Balanced dataset of n examples (n even): generate scenarios in index
/// order, simulate, detect the drop, place windows, and fill the two label
/// pools. Deterministic for a given generator master seed.
Dataset build_dataset(int n, const GeneratorConfig& gen_cfg, const WindowConfig& window_cfg,
                      const ArrayConfig& arrays, const PropagationConfig& prop_cfg);

/// NDJSON persistence: one header line with config + seed, one line per
/// example. Numeric fields round-trip exactly.
void save_dataset(const std::string& path, const Dataset& dataset);
Dataset load_dataset(const std::string& path);
std::string dataset_to_ndjson(const Dataset& dataset);
Dataset dataset_from_ndjson(const std::string& text);

}  // namespace blockcast
