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

#include "blockcast/minirocket.hpp"

#include <algorithm>
#include <cmath>

#include "blockcast/rng.hpp"
#include "blockcast/threading.hpp"

namespace blockcast {

namespace {

constexpr int kKernelTaps = kMiniRocketKernelLength;       // 9
constexpr int kFeaturesPerKernel = kMiniRocketFeatures / kMiniRocketKernels;  // 119
constexpr int kMaxDilationsPerKernel = 32;

/// The 84 three-subsets of {0..8} in lexicographic order; those positions
/// carry weight 2, all others weight -1.
struct KernelSet {
  int pos[kMiniRocketKernels][3];
  KernelSet() {
    int n = 0;
    for (int a = 0; a < kKernelTaps - 2; ++a)
      for (int b = a + 1; b < kKernelTaps - 1; ++b)
        for (int c = b + 1; c < kKernelTaps; ++c) {
          pos[n][0] = a;
          pos[n][1] = b;
          pos[n][2] = c;
          ++n;
        }
  }
};

const KernelSet& kernels() {
  static const KernelSet k;
  return k;
}

/// Low-discrepancy quantile positions: frac(j * golden ratio), j = 1..n.
Scalar quantile_position(int j) {
  const Scalar phi = (std::sqrt(5.0) + 1.0) / 2.0;
  const Scalar v = static_cast<Scalar>(j) * phi;
  return v - std::floor(v);
}

/// Linear-interpolation quantile of an ascending-sorted sequence.
Scalar sorted_quantile(const std::vector<Scalar>& sorted, Scalar q) {
  const Scalar pos = q * static_cast<Scalar>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const Scalar frac = pos - static_cast<Scalar>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

void z_normalize(const Scalar* src, int n, Scalar* dst) {
  Scalar mean = 0.0;
  for (int i = 0; i < n; ++i) mean += src[i];
  mean /= static_cast<Scalar>(n);
  Scalar var = 0.0;
  for (int i = 0; i < n; ++i) {
    const Scalar d = src[i] - mean;
    var += d * d;
  }
  var /= static_cast<Scalar>(n);
  const Scalar sd = std::sqrt(var);
  if (sd < 1e-12) {
    std::fill(dst, dst + n, 0.0);
  } else {
    for (int i = 0; i < n; ++i) dst[i] = (src[i] - mean) / sd;
  }
}

/// Exponentially spaced dilations with per-dilation feature budgets summing
/// to kFeaturesPerKernel.
void dilation_schedule(int input_length, std::vector<int>& dilations,
                       std::vector<int>& features_per_dilation) {
  if (input_length < kKernelTaps) {
    throw std::invalid_argument("fit_transform: window shorter than the kernel span");
  }
  const Scalar max_exponent =
      std::log2(static_cast<Scalar>(input_length - 1) / static_cast<Scalar>(kKernelTaps - 1));
  dilations.clear();
  features_per_dilation.clear();
  std::vector<int> counts;
  for (int i = 0; i < kMaxDilationsPerKernel; ++i) {
    const Scalar e = max_exponent * static_cast<Scalar>(i) /
                     static_cast<Scalar>(kMaxDilationsPerKernel - 1);
    const int d = std::max(1, static_cast<int>(std::exp2(e)));
    if (!dilations.empty() && dilations.back() == d) {
      ++counts.back();
    } else {
      dilations.push_back(d);
      counts.push_back(1);
    }
  }
  const Scalar multiplier =
      static_cast<Scalar>(kFeaturesPerKernel) / static_cast<Scalar>(kMaxDilationsPerKernel);
  int total = 0;
  for (const int c : counts) {
    const int f = static_cast<int>(static_cast<Scalar>(c) * multiplier);
    features_per_dilation.push_back(f);
    total += f;
  }
  int remainder = kFeaturesPerKernel - total;
  std::size_t i = 0;
  while (remainder > 0) {
    ++features_per_dilation[i];
    --remainder;
    i = (i + 1) % features_per_dilation.size();
  }
}

/// Scratch space for one window at one dilation.
struct ConvWorkspace {
  std::vector<Scalar> padded;  // window with 4*d zeros on each side
  std::vector<Scalar> base;    // sum over all nine taps
  std::vector<Scalar> conv;    // per-kernel output

  void load(const Scalar* window, int n, int dilation) {
    const int pad = (kKernelTaps / 2) * dilation;
    padded.assign(static_cast<std::size_t>(n + 2 * pad), 0.0);
    std::copy(window, window + n, padded.begin() + pad);
    base.assign(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < kKernelTaps; ++j) {
      const Scalar* src = padded.data() + static_cast<std::ptrdiff_t>(j) * dilation;
      for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] += src[i];
    }
    conv.resize(static_cast<std::size_t>(n));
  }

  /// conv[i] = -base[i] + 3 * (three chosen taps), i.e. weights {-1, 2}.
  void kernel_conv(int n, int dilation, const int* pos) {
    const Scalar* s0 = padded.data() + static_cast<std::ptrdiff_t>(pos[0]) * dilation;
    const Scalar* s1 = padded.data() + static_cast<std::ptrdiff_t>(pos[1]) * dilation;
    const Scalar* s2 = padded.data() + static_cast<std::ptrdiff_t>(pos[2]) * dilation;
    for (int i = 0; i < n; ++i) {
      conv[static_cast<std::size_t>(i)] = 3.0 * (s0[i] + s1[i] + s2[i]) - base[static_cast<std::size_t>(i)];
    }
  }
};

void minirocket_features(const FeatureTransform& t, const Scalar* window, Scalar* out) {
  const int n = t.input_length;
  std::vector<Scalar> normed(static_cast<std::size_t>(n));
  z_normalize(window, n, normed.data());

  ConvWorkspace ws;
  std::size_t feature = 0;
  std::size_t bias_index = 0;
  for (std::size_t di = 0; di < t.dilations.size(); ++di) {
    const int d = t.dilations[di];
    const int f_d = t.features_per_dilation[di];
    ws.load(normed.data(), n, d);
    const int lo_valid = (kKernelTaps / 2) * d;
    const int hi_valid = n - lo_valid;  // exclusive
    for (int k = 0; k < kMiniRocketKernels; ++k) {
      ws.kernel_conv(n, d, kernels().pos[k]);
      // alternate padded / valid pooling ranges across kernel-dilation pairs
      const bool padded_range = ((static_cast<int>(di) + k) % 2) == 0;
      const int lo = padded_range ? 0 : lo_valid;
      const int hi = padded_range ? n : hi_valid;
      const Scalar inv_len = 1.0 / static_cast<Scalar>(hi - lo);
      for (int s = 0; s < f_d; ++s) {
        const Scalar bias = t.biases[bias_index++];
        int count = 0;
        for (int i = lo; i < hi; ++i) {
          count += ws.conv[static_cast<std::size_t>(i)] > bias ? 1 : 0;
        }
        out[feature++] = static_cast<Scalar>(count) * inv_len;
      }
    }
  }
}

FeatureTransform fit_minirocket(const RowMat& windows, std::uint64_t seed) {
  FeatureTransform t;
  t.mode = FeatureMode::kMiniRocket;
  t.input_length = static_cast<int>(windows.cols());
  dilation_schedule(t.input_length, t.dilations, t.features_per_dilation);

  const int n = t.input_length;
  const auto n_windows = static_cast<std::size_t>(windows.rows());
  Rng rng(seed);
  std::vector<Scalar> normed(static_cast<std::size_t>(n));
  ConvWorkspace ws;
  std::vector<Scalar> values;
  t.biases.reserve(kMiniRocketFeatures);

  int feature_index = 0;
  for (std::size_t di = 0; di < t.dilations.size(); ++di) {
    const int d = t.dilations[di];
    const int f_d = t.features_per_dilation[di];
    for (int k = 0; k < kMiniRocketKernels; ++k) {
      // quantiles of the convolution of one randomly chosen fitting window
      const auto w = rng.uniform_int(n_windows);
      z_normalize(windows.row(static_cast<Eigen::Index>(w)).data(), n, normed.data());
      ws.load(normed.data(), n, d);
      ws.kernel_conv(n, d, kernels().pos[k]);
      values = ws.conv;
      std::sort(values.begin(), values.end());
      for (int s = 0; s < f_d; ++s) {
        t.biases.push_back(sorted_quantile(values, quantile_position(feature_index + s + 1)));
      }
      feature_index += f_d;
    }
  }
  return t;
}

// ---- random-kernel mode (length 12, one PPV feature per kernel) ----------

void rocket12_features(const FeatureTransform& t, const Scalar* window, Scalar* out) {
  const int n = t.input_length;
  std::vector<Scalar> normed(static_cast<std::size_t>(n));
  z_normalize(window, n, normed.data());

  std::vector<Scalar> padded;
  for (int k = 0; k < kRocket12Kernels; ++k) {
    const int d = t.kernel_dilations[static_cast<std::size_t>(k)];
    const Scalar* w = &t.kernel_weights[static_cast<std::size_t>(k) * kRocket12KernelLength];
    const int span = (kRocket12KernelLength - 1) * d;
    const bool pad_on = t.kernel_padding[static_cast<std::size_t>(k)] != 0;
    const int pad = pad_on ? span / 2 : 0;
    const Scalar* x = normed.data();
    int out_len = n - span;
    if (pad_on) {
      padded.assign(static_cast<std::size_t>(n + 2 * pad), 0.0);
      std::copy(normed.begin(), normed.end(), padded.begin() + pad);
      x = padded.data();
      out_len = n + 2 * pad - span;
    }
    const Scalar bias = t.kernel_biases[static_cast<std::size_t>(k)];
    int count = 0;
    for (int i = 0; i < out_len; ++i) {
      Scalar acc = 0.0;
      for (int j = 0; j < kRocket12KernelLength; ++j) acc += w[j] * x[i + j * d];
      count += acc > bias ? 1 : 0;
    }
    out[k] = static_cast<Scalar>(count) / static_cast<Scalar>(out_len);
  }
}

FeatureTransform fit_rocket12(const RowMat& windows, std::uint64_t seed) {
  FeatureTransform t;
  t.mode = FeatureMode::kRocket12;
  t.input_length = static_cast<int>(windows.cols());
  const int n = t.input_length;
  if (n < kRocket12KernelLength) {
    throw std::invalid_argument("fit_transform: window shorter than the kernel span");
  }
  const Scalar max_exponent =
      std::log2(static_cast<Scalar>(n - 1) / static_cast<Scalar>(kRocket12KernelLength - 1));

  Rng rng(seed);
  t.kernel_weights.resize(static_cast<std::size_t>(kRocket12Kernels) * kRocket12KernelLength);
  t.kernel_dilations.resize(kRocket12Kernels);
  t.kernel_padding.resize(kRocket12Kernels);
  t.kernel_biases.resize(kRocket12Kernels);

  std::vector<Scalar> normed(static_cast<std::size_t>(n));
  std::vector<Scalar> values;
  for (int k = 0; k < kRocket12Kernels; ++k) {
    Scalar* w = &t.kernel_weights[static_cast<std::size_t>(k) * kRocket12KernelLength];
    Scalar mean = 0.0;
    for (int j = 0; j < kRocket12KernelLength; ++j) {
      w[j] = rng.normal();
      mean += w[j];
    }
    mean /= kRocket12KernelLength;
    for (int j = 0; j < kRocket12KernelLength; ++j) w[j] -= mean;
    t.kernel_dilations[static_cast<std::size_t>(k)] =
        std::max(1, static_cast<int>(std::exp2(rng.uniform() * max_exponent)));
    t.kernel_padding[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(rng.uniform_int(2));

    // bias = one quantile of the convolution of a random fitting window
    const auto wi = rng.uniform_int(static_cast<std::uint64_t>(windows.rows()));
    z_normalize(windows.row(static_cast<Eigen::Index>(wi)).data(), n, normed.data());
    const int d = t.kernel_dilations[static_cast<std::size_t>(k)];
    const int span = (kRocket12KernelLength - 1) * d;
    values.clear();
    for (int i = 0; i + span < n; ++i) {
      Scalar acc = 0.0;
      for (int j = 0; j < kRocket12KernelLength; ++j) acc += w[j] * normed[static_cast<std::size_t>(i + j * d)];
      values.push_back(acc);
    }
    if (values.empty()) values.push_back(0.0);
    std::sort(values.begin(), values.end());
    t.kernel_biases[static_cast<std::size_t>(k)] = sorted_quantile(values, quantile_position(k + 1));
  }
  return t;
}

}  // namespace

int FeatureTransform::feature_count() const {
  if (mode == FeatureMode::kMiniRocket) {
    int per_kernel = 0;
    for (const int f : features_per_dilation) per_kernel += f;
    return per_kernel * kMiniRocketKernels;
  }
  return kRocket12Kernels;
}

RowMat apply_transform(const FeatureTransform& transform, const RowMat& windows) {
  if (static_cast<int>(windows.cols()) != transform.input_length) {
    throw std::invalid_argument("apply_transform: window length mismatch");
  }
  const auto rows = static_cast<std::size_t>(windows.rows());
  RowMat features(windows.rows(), transform.feature_count());
  parallel_for(0, rows, [&](std::size_t r) {
    const auto row = static_cast<Eigen::Index>(r);
    if (transform.mode == FeatureMode::kMiniRocket) {
      minirocket_features(transform, windows.row(row).data(), features.row(row).data());
    } else {
      rocket12_features(transform, windows.row(row).data(), features.row(row).data());
    }
  });
  return features;
}

std::pair<FeatureTransform, RowMat> fit_transform(const RowMat& windows, std::uint64_t seed,
                                                  FeatureMode mode) {
  if (windows.rows() < 1) throw std::invalid_argument("fit_transform: no windows");
  FeatureTransform t =
      mode == FeatureMode::kMiniRocket ? fit_minirocket(windows, seed) : fit_rocket12(windows, seed);
  RowMat features = apply_transform(t, windows);
  return {std::move(t), std::move(features)};
}

}  // namespace blockcast
