// Copyright 2026 The curvlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <numbers>

namespace curvlab {

enum class CurvatureSign { kNegative = -1, kZero = 0, kPositive = 1 };

const char* to_string(CurvatureSign sign);

/// Gaussian curvature in 1/length^2. Positive is spherical, zero is flat,
/// negative is hyperbolic. Construction rejects NaN and infinities.
class Curvature {
 public:
  constexpr Curvature() = default;
  explicit Curvature(double k);

  double value() const { return k_; }
  CurvatureSign sign() const;

 private:
  double k_ = 0.0;
};

/// Angle sum of a geodesic triangle, stored in radians.
struct AngleSum {
  double radians = 0.0;

  double degrees() const { return radians * 180.0 / std::numbers::pi; }
};

/// Below this value of |K| r^2 the circle laws switch to their Taylor series.
inline constexpr double kSeriesThreshold = 1e-8;

/// Circumference of a geodesic circle of radius r:
/// (2pi/sqrt K) sin(sqrt K r), 2pi r, or (2pi/sqrt|K|) sinh(sqrt|K| r).
/// Throws DomainError for r <= 0 or, when K > 0, r > pi/sqrt(K).
double circle_circumference(Curvature k, double r);

/// Area enclosed by a geodesic circle of radius r. Same preconditions as
/// circle_circumference.
double circle_area(Curvature k, double r);

/// Angle sum pi + K * area of a geodesic triangle with the given area.
/// Throws DomainError for negative area or K * area >= 4 pi.
AngleSum triangle_angle_sum(Curvature k, double area);

CurvatureSign classify_curvature(Curvature k);

}  // namespace curvlab
