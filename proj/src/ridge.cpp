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

#include "blockcast/ridge.hpp"

#include <cmath>
#include <limits>

#include "blockcast/threading.hpp"

namespace blockcast {

namespace {

/// Symmetric product A A^T computed in row blocks so worker count never
/// changes the result.
Mat gram_lower(const RowMat& a) {
  const Eigen::Index n = a.rows();
  Mat k(n, n);
  constexpr Eigen::Index kBlock = 128;
  const auto n_blocks = static_cast<std::size_t>((n + kBlock - 1) / kBlock);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> tasks;
  for (std::size_t bi = 0; bi < n_blocks; ++bi)
    for (std::size_t bj = 0; bj <= bi; ++bj)
      tasks.emplace_back(static_cast<Eigen::Index>(bi), static_cast<Eigen::Index>(bj));
  parallel_for(0, tasks.size(), [&](std::size_t t) {
    const Eigen::Index bi = tasks[t].first * kBlock;
    const Eigen::Index bj = tasks[t].second * kBlock;
    const Eigen::Index ri = std::min(kBlock, n - bi);
    const Eigen::Index rj = std::min(kBlock, n - bj);
    k.block(bi, bj, ri, rj).noalias() = a.middleRows(bi, ri) * a.middleRows(bj, rj).transpose();
  });
  return k;
}

struct Standardized {
  RowMat z;
  Vec mean;
  Vec scale;
};

Standardized standardize(const RowMat& x) {
  const auto n = static_cast<Scalar>(x.rows());
  Standardized s;
  s.mean = x.colwise().mean();
  Vec var = (x.rowwise() - s.mean.transpose()).array().square().colwise().sum() / n;
  s.scale = var.array().sqrt();
  bool any_varying = false;
  for (Eigen::Index j = 0; j < s.scale.size(); ++j) {
    if (s.scale(j) > 1e-12) {
      any_varying = true;
    } else {
      s.scale(j) = 1.0;  // constant column: centered to zero, left unscaled
    }
  }
  if (!any_varying) {
    throw std::invalid_argument("fit_ridge: all feature columns are constant");
  }
  s.z = (x.rowwise() - s.mean.transpose()).array().rowwise() / s.scale.transpose().array();
  return s;
}

}  // namespace

RidgeModel fit_ridge(const RowMat& features, const std::vector<int>& labels_pm,
                     const std::vector<Scalar>& alpha_grid) {
  const Eigen::Index n = features.rows();
  const Eigen::Index f = features.cols();
  if (n < 2 || static_cast<std::size_t>(n) != labels_pm.size()) {
    throw std::invalid_argument("fit_ridge: need >= 2 labeled rows");
  }
  if (alpha_grid.empty()) throw std::invalid_argument("fit_ridge: empty alpha grid");
  bool has_pos = false, has_neg = false;
  for (const int y : labels_pm) {
    if (y > 0) has_pos = true;
    if (y < 0) has_neg = true;
  }
  if (!has_pos || !has_neg) throw std::invalid_argument("fit_ridge: both classes required");

  Standardized s = standardize(features);
  Vec y(n);
  for (Eigen::Index i = 0; i < n; ++i) y(i) = static_cast<Scalar>(labels_pm[static_cast<std::size_t>(i)]);
  const Scalar y_mean = y.mean();
  const Vec yc = y.array() - y_mean;

  RidgeModel model;
  model.feature_mean = std::move(s.mean);
  model.feature_scale = std::move(s.scale);
  model.intercept = y_mean;

  const auto n_s = static_cast<Scalar>(n);
  Scalar best_gcv = std::numeric_limits<Scalar>::infinity();
  Scalar best_alpha = alpha_grid.front();

  if (n <= f) {
    // Dual (Gram) route: w = Z^T (Z Z^T + alpha I)^{-1} yc.
    const Mat k = gram_lower(s.z);
    Eigen::SelfAdjointEigenSolver<Mat> eig(k);
    if (eig.info() != Eigen::Success) throw std::runtime_error("fit_ridge: eigensolve failed");
    const Vec lam = eig.eigenvalues().cwiseMax(0.0);  // clip eigensolver noise
    const Vec qty = eig.eigenvectors().transpose() * yc;
    Vec best_c;
    for (const Scalar alpha : alpha_grid) {
      const Vec shrink = (lam.array() + alpha).inverse();
      Scalar rss = 0.0, tr_h = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar ri = alpha * shrink(i) * qty(i);
        rss += ri * ri;
        tr_h += lam(i) * shrink(i);
      }
      const Scalar denom = 1.0 - tr_h / n_s;
      const Scalar gcv = (rss / n_s) / (denom * denom);
      if (gcv < best_gcv) {
        best_gcv = gcv;
        best_alpha = alpha;
        best_c = eig.eigenvectors() * (shrink.array() * qty.array()).matrix();
      }
    }
    model.alpha = best_alpha;
    model.weights = s.z.transpose() * best_c;
  } else {
    // Primal route: w = (Z^T Z + alpha I)^{-1} Z^T yc.
    const Mat g = s.z.transpose() * s.z;
    const Vec zty = s.z.transpose() * yc;
    Eigen::SelfAdjointEigenSolver<Mat> eig(g);
    if (eig.info() != Eigen::Success) throw std::runtime_error("fit_ridge: eigensolve failed");
    const Vec lam = eig.eigenvalues().cwiseMax(0.0);
    const Vec vty = eig.eigenvectors().transpose() * zty;
    const Scalar yc_norm2 = yc.squaredNorm();
    Vec best_w;
    for (const Scalar alpha : alpha_grid) {
      const Vec shrink = (lam.array() + alpha).inverse();
      const Vec w = eig.eigenvectors() * (shrink.array() * vty.array()).matrix();
      // ||yc - Zw||^2 = ||yc||^2 - 2 w.Zty + w^T G w, all terms already known
      Scalar rss = yc_norm2 - 2.0 * w.dot(zty) + w.dot(g * w);
      rss = std::max(rss, 0.0);
      Scalar tr_h = 0.0;
      for (Eigen::Index i = 0; i < f; ++i) tr_h += lam(i) * shrink(i);
      const Scalar denom = 1.0 - tr_h / n_s;
      const Scalar gcv = (rss / n_s) / (denom * denom);
      if (gcv < best_gcv) {
        best_gcv = gcv;
        best_alpha = alpha;
        best_w = w;
      }
    }
    model.alpha = best_alpha;
    model.weights = best_w;
  }
  return model;
}

Vec RidgeModel::decision_scores(const RowMat& features) const {
  if (features.cols() != weights.size()) {
    throw std::invalid_argument("RidgeModel: feature dimension mismatch");
  }
  const RowMat z =
      (features.rowwise() - feature_mean.transpose()).array().rowwise() / feature_scale.transpose().array();
  return (z * weights).array() + intercept;
}

std::vector<int> RidgeModel::predict(const RowMat& features) const {
  const Vec scores = decision_scores(features);
  std::vector<int> labels(static_cast<std::size_t>(scores.size()));
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    labels[static_cast<std::size_t>(i)] = scores(i) >= 0.0 ? 1 : 0;
  }
  return labels;
}

}  // namespace blockcast
