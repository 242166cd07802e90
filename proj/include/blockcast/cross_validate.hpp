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
// Stratified k-fold evaluation. Transform biases and ridge weights are
// fitted per round on the training folds only; every example is tested
// exactly once.

#pragma once

#include <cstdint>
#include <vector>

#include "blockcast/dataset.hpp"
#include "blockcast/metrics.hpp"
#include "blockcast/minirocket.hpp"
#include "blockcast/ridge.hpp"
#include "blockcast/types.hpp"

namespace blockcast {

/// A fitted transform + classifier pair, applicable to fresh windows.
struct TrainedModel {
  FeatureTransform transform;
  RidgeModel ridge;

  Vec scores(const RowMat& windows) const;
  std::vector<int> predict(const RowMat& windows) const;
};

struct CvOptions {
  int k = 5;
  FeatureMode features = FeatureMode::kMiniRocket;
  std::vector<Scalar> alpha_grid = default_alpha_grid();
  bool keep_models = false;  // retain per-fold models for external test sets
};

struct FoldResult {
  EvalMetrics metrics;
  std::vector<std::size_t> test_indices;
};

struct CvResult {
  std::vector<FoldResult> folds;
  EvalMetrics mean;
  std::vector<TrainedModel> models;  // filled when keep_models
};

/// Windows matrix (one row per example) and 0/1 labels of a dataset.
RowMat dataset_windows(const Dataset& dataset);
std::vector<int> dataset_labels(const Dataset& dataset);

/// Stratified fold assignment: fold id per example, sizes differing by at
/// most one within each class.
std::vector<int> stratified_folds(const std::vector<int>& labels, int k, std::uint64_t seed);

CvResult cross_validate(const Dataset& dataset, const CvOptions& options, std::uint64_t seed);

/// Fit transform + ridge on the whole dataset (for model persistence).
TrainedModel fit_full(const Dataset& dataset, const CvOptions& options, std::uint64_t seed);

/// Metrics of a trained model on an external labeled window set.
EvalMetrics evaluate_model(const TrainedModel& model, const RowMat& windows,
                           const std::vector<int>& labels);

}  // namespace blockcast
