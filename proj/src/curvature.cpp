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

#include "curvlab/curvature.hpp"

#include <cmath>
#include <string>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_radius(Curvature k, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("radius must be positive and finite, got " +
                      std::to_string(r));
  }
  if (k.value() > 0.0 && r > kPi / std::sqrt(k.value())) {
    throw DomainError("radius exceeds pi/sqrt(K); no such circle on the sphere");
  }
}

}  // namespace

const char* to_string(CurvatureSign sign) {
  switch (sign) {
    case CurvatureSign::kPositive:
      return "positive";
    case CurvatureSign::kZero:
      return "zero";
    case CurvatureSign::kNegative:
      return "negative";
  }
  return "?";
}

Curvature::Curvature(double k) : k_(k) {
  if (!std::isfinite(k)) throw DomainError("curvature must be finite");
}

CurvatureSign Curvature::sign() const {
  if (k_ > 0.0) return CurvatureSign::kPositive;
  if (k_ < 0.0) return CurvatureSign::kNegative;
  return CurvatureSign::kZero;
}

double circle_circumference(Curvature k, double r) {
  check_radius(k, r);
  const double kv = k.value();
  const double x = kv * r * r;
  if (std::abs(x) < kSeriesThreshold) {
    return 2.0 * kPi * r * (1.0 - x / 6.0 + x * x / 120.0);
  }
  const double s = std::sqrt(std::abs(kv));
  if (kv > 0.0) return 2.0 * kPi / s * std::sin(s * r);
  return 2.0 * kPi / s * std::sinh(s * r);
}

double circle_area(Curvature k, double r) {
  check_radius(k, r);
  const double kv = k.value();
  const double x = kv * r * r;
  if (std::abs(x) < kSeriesThreshold) {
    return kPi * r * r * (1.0 - x / 12.0 + x * x / 360.0);
  }
  const double s = std::sqrt(std::abs(kv));
  // 1 - cos(t) = 2 sin^2(t/2) and cosh(t) - 1 = 2 sinh^2(t/2) avoid
  // cancellation for small t.
  if (kv > 0.0) {
    const double h = std::sin(0.5 * s * r);
    return 4.0 * kPi / kv * h * h;
  }
  const double h = std::sinh(0.5 * s * r);
  return 4.0 * kPi / -kv * h * h;
}

AngleSum triangle_angle_sum(Curvature k, double area) {
  if (!(area >= 0.0) || !std::isfinite(area)) {
    throw DomainError("triangle area must be non-negative and finite");
  }
  if (k.value() > 0.0 && k.value() * area >= 4.0 * kPi) {
    throw DomainError("K * area must be below 4 pi for a spherical triangle");
  }
  return AngleSum{kPi + k.value() * area};
}

CurvatureSign classify_curvature(Curvature k) { return k.sign(); }

}  // namespace curvlab
