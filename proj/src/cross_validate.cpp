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

#include "blockcast/cross_validate.hpp"

#include "blockcast/rng.hpp"

namespace blockcast {

RowMat dataset_windows(const Dataset& dataset) {
  if (dataset.examples.empty()) throw std::invalid_argument("dataset_windows: empty dataset");
  const auto cols = dataset.examples.front().samples.size();
  RowMat windows(static_cast<Eigen::Index>(dataset.examples.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < dataset.examples.size(); ++i) {
    const auto& s = dataset.examples[i].samples;
    if (s.size() != cols) throw std::invalid_argument("dataset_windows: ragged window lengths");
    for (std::size_t j = 0; j < cols; ++j) {
      windows(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s[j];
    }
  }
  return windows;
}

std::vector<int> dataset_labels(const Dataset& dataset) {
  std::vector<int> labels;
  labels.reserve(dataset.examples.size());
  for (const auto& ex : dataset.examples) labels.push_back(ex.label);
  return labels;
}

std::vector<int> stratified_folds(const std::vector<int>& labels, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("stratified_folds: k must be >= 2");
  if (labels.size() < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("stratified_folds: fewer examples than folds");
  }
  std::vector<int> fold_of(labels.size(), -1);
  Rng rng(seed, 0, RngStream::kFolds);
  for (const int cls : {0, 1}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == cls) idx.push_back(i);
    }
    rng.shuffle(idx);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      fold_of[idx[j]] = static_cast<int>(j % static_cast<std::size_t>(k));
    }
  }
  return fold_of;
}

namespace {

RowMat select_rows(const RowMat& m, const std::vector<std::size_t>& rows) {
  RowMat out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(rows[i]));
  }
  return out;
}

TrainedModel fit_model(const RowMat& windows, const std::vector<int>& labels01,
                       const CvOptions& options, std::uint64_t transform_seed) {
  auto [transform, features] = fit_transform(windows, transform_seed, options.features);
  std::vector<int> pm(labels01.size());
  for (std::size_t i = 0; i < labels01.size(); ++i) pm[i] = labels01[i] == 1 ? 1 : -1;
  TrainedModel model;
  model.ridge = fit_ridge(features, pm, options.alpha_grid);
  model.transform = std::move(transform);
  return model;
}

}  // namespace

Vec TrainedModel::scores(const RowMat& windows) const {
  return ridge.decision_scores(apply_transform(transform, windows));
}

std::vector<int> TrainedModel::predict(const RowMat& windows) const {
  return ridge.predict(apply_transform(transform, windows));
}

CvResult cross_validate(const Dataset& dataset, const CvOptions& options, std::uint64_t seed) {
  const RowMat windows = dataset_windows(dataset);
  const std::vector<int> labels = dataset_labels(dataset);
  const std::vector<int> fold_of = stratified_folds(labels, options.k, seed);

  CvResult result;
  result.folds.resize(static_cast<std::size_t>(options.k));

  for (int fold = 0; fold < options.k; ++fold) {
    std::vector<std::size_t> train_idx, test_idx;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      (fold_of[i] == fold ? test_idx : train_idx).push_back(i);
    }
    std::vector<int> train_labels, test_labels;
    for (const auto i : train_idx) train_labels.push_back(labels[i]);
    for (const auto i : test_idx) test_labels.push_back(labels[i]);

    const std::uint64_t transform_seed = mix64(seed + static_cast<std::uint64_t>(fold) + 1);
    TrainedModel model =
        fit_model(select_rows(windows, train_idx), train_labels, options, transform_seed);

    const RowMat test_windows = select_rows(windows, test_idx);
    const Vec scores = model.scores(test_windows);
    std::vector<int> predicted(test_idx.size());
    for (std::size_t i = 0; i < test_idx.size(); ++i) {
      predicted[i] = scores(static_cast<Eigen::Index>(i)) >= 0.0 ? 1 : 0;
    }

    auto& fr = result.folds[static_cast<std::size_t>(fold)];
    fr.metrics = compute_metrics(test_labels, predicted, scores);
    fr.test_indices = std::move(test_idx);
    if (options.keep_models) result.models.push_back(std::move(model));
  }

  for (const auto& fr : result.folds) {
    result.mean.accuracy += fr.metrics.accuracy;
    result.mean.f1 += fr.metrics.f1;
    result.mean.auc += fr.metrics.auc;
  }
  const auto k_s = static_cast<Scalar>(options.k);
  result.mean.accuracy /= k_s;
  result.mean.f1 /= k_s;
  result.mean.auc /= k_s;
  return result;
}

TrainedModel fit_full(const Dataset& dataset, const CvOptions& options, std::uint64_t seed) {
  return fit_model(dataset_windows(dataset), dataset_labels(dataset), options, mix64(seed));
}

EvalMetrics evaluate_model(const TrainedModel& model, const RowMat& windows,
                           const std::vector<int>& labels) {
  const Vec scores = model.scores(windows);
  std::vector<int> predicted(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    predicted[i] = scores(static_cast<Eigen::Index>(i)) >= 0.0 ? 1 : 0;
  }
  return compute_metrics(labels, predicted, scores);
}

}  // namespace blockcast
