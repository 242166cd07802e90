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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace blockcast {

using Scalar = double;
using Complex = std::complex<Scalar>;

template <class S>
using Vector2T = Eigen::Matrix<S, 2, 1>;
template <class S>
using VectorXT = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using MatrixXT = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using Vec2 = Vector2T<Scalar>;
using Vec = VectorXT<Scalar>;
using Mat = MatrixXT<Scalar>;
using CVec = VectorXT<Complex>;
using CMat = MatrixXT<Complex>;

// Feature matrices are filled one window (row) at a time.
using RowMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr Scalar kSpeedOfLight = 299'792'458.0;  // m/s
inline constexpr Scalar kPi = 3.14159265358979323846;

/// Rotate a 2-D vector by +90 degrees.
inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }

/// z-component of the 2-D cross product a x b.
inline Scalar cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Configuration that cannot produce the requested artifact (exit code 3).
struct InfeasibleConfig : std::runtime_error {
  explicit InfeasibleConfig(const std::string& what) : std::runtime_error(what) {}
};

/// File/serialization failure (exit code 4).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blockcast
