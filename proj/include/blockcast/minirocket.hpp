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
// Rocket-family time-series feature extraction. The default is the fixed
// 84-kernel construction (length-9 kernels with weights {-1, 2}, exponential
// dilations, quantile biases, PPV pooling, 9996 features). An alternative
// mode uses 10,000 random-weight kernels of length 12 with one PPV feature
// each. Windows are z-normalized before convolution, so features depend only
// on the window shape, not its absolute scale.

#pragma once

#include <cstdint>
#include <vector>

#include "blockcast/types.hpp"

namespace blockcast {

enum class FeatureMode { kMiniRocket, kRocket12 };

struct FeatureTransform {
  FeatureMode mode = FeatureMode::kMiniRocket;
  int input_length = 0;

  // kMiniRocket: fixed kernel set, per-dilation feature counts, and biases
  // laid out as [dilation][kernel][bias slot].
  std::vector<int> dilations;
  std::vector<int> features_per_dilation;
  std::vector<Scalar> biases;

  // kRocket12: per-kernel weights (flattened, 12 per kernel), dilation,
  // padding flag and bias.
  std::vector<Scalar> kernel_weights;
  std::vector<int> kernel_dilations;
  std::vector<std::uint8_t> kernel_padding;
  std::vector<Scalar> kernel_biases;

  int feature_count() const;
};

inline constexpr int kMiniRocketKernels = 84;
inline constexpr int kMiniRocketKernelLength = 9;
inline constexpr int kMiniRocketFeatures = 9996;  // 84 kernels x 119 slots
inline constexpr int kRocket12Kernels = 10000;
inline constexpr int kRocket12KernelLength = 12;

/// Fit the transform on a set of equal-length windows (rows) and return the
/// transform together with the feature matrix of the fitting split. Bias
/// quantiles are computed on these windows only.
std::pair<FeatureTransform, RowMat> fit_transform(const RowMat& windows, std::uint64_t seed,
                                                  FeatureMode mode = FeatureMode::kMiniRocket);

/// Apply a fitted transform; never re-fits. Throws on window-length mismatch.
RowMat apply_transform(const FeatureTransform& transform, const RowMat& windows);

}  // namespace blockcast
