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

#pragma once

#include <vector>

#include "blockcast/types.hpp"

namespace blockcast {

struct EvalMetrics {
  Scalar accuracy = 0.0;
  Scalar f1 = 0.0;
  Scalar auc = 0.0;
};

/// Accuracy, F1 for the positive (blockage) class, and AUC via the
/// tie-averaged rank statistic over the continuous scores. Requires both
/// classes in the ground truth.
EvalMetrics compute_metrics(const std::vector<int>& labels, const std::vector<int>& predicted,
                            const Vec& scores);

}  // namespace blockcast
