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

#include "blockcast/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace blockcast {

EvalMetrics compute_metrics(const std::vector<int>& labels, const std::vector<int>& predicted,
                            const Vec& scores) {
  const std::size_t n = labels.size();
  if (n == 0 || predicted.size() != n || static_cast<std::size_t>(scores.size()) != n) {
    throw std::invalid_argument("compute_metrics: length mismatch");
  }

  std::size_t correct = 0, tp = 0, fp = 0, fn = 0, n_pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool truth = labels[i] == 1;
    const bool pred = predicted[i] == 1;
    if (truth) ++n_pos;
    if (truth == pred) ++correct;
    if (pred && truth) ++tp;
    if (pred && !truth) ++fp;
    if (!pred && truth) ++fn;
  }
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw std::invalid_argument("compute_metrics: AUC undefined for single-class ground truth");
  }

  EvalMetrics m;
  m.accuracy = static_cast<Scalar>(correct) / static_cast<Scalar>(n);

  const Scalar precision = (tp + fp) > 0 ? static_cast<Scalar>(tp) / static_cast<Scalar>(tp + fp) : 0.0;
  const Scalar recall = (tp + fn) > 0 ? static_cast<Scalar>(tp) / static_cast<Scalar>(tp + fn) : 0.0;
  m.f1 = (precision + recall) > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;

  // Mann-Whitney rank statistic, ties averaged (equals trapezoidal ROC area).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores(static_cast<Eigen::Index>(a)) <
                                                       scores(static_cast<Eigen::Index>(b)); });
  Scalar rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores(static_cast<Eigen::Index>(order[j + 1])) ==
                            scores(static_cast<Eigen::Index>(order[i]))) {
      ++j;
    }
    const Scalar avg_rank = 0.5 * static_cast<Scalar>(i + j) + 1.0;  // 1-based
    for (std::size_t k = i; k <= j; ++k) {
      if (labels[order[k]] == 1) rank_sum_pos += avg_rank;
    }
    i = j + 1;
  }
  const Scalar u = rank_sum_pos - 0.5 * static_cast<Scalar>(n_pos) * static_cast<Scalar>(n_pos + 1);
  m.auc = u / (static_cast<Scalar>(n_pos) * static_cast<Scalar>(n_neg));
  return m;
}

}  // namespace blockcast
