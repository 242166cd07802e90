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
// Ridge-regression classifier on standardized features. The regularization
// strength is selected by generalized (leave-one-out) cross-validation over
// a grid, evaluated from one eigendecomposition — of the Gram matrix when
// examples are fewer than features, of the covariance otherwise.

#pragma once

#include <vector>

#include "blockcast/types.hpp"

namespace blockcast {

struct RidgeModel {
  Vec weights;          // over standardized features
  Scalar intercept = 0.0;
  Scalar alpha = 1.0;
  Vec feature_mean;
  Vec feature_scale;

  /// Continuous decision scores x.w + b; label 1 is declared for score >= 0.
  Vec decision_scores(const RowMat& features) const;
  std::vector<int> predict(const RowMat& features) const;
};

inline std::vector<Scalar> default_alpha_grid() {
  return {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3};
}

/// Fit on features (rows = examples) with labels in {-1, +1}. Requires both
/// classes present and at least one non-constant feature column.
RidgeModel fit_ridge(const RowMat& features, const std::vector<int>& labels_pm,
                     const std::vector<Scalar>& alpha_grid);

}  // namespace blockcast
