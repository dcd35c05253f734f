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

#include "curvlab/fold.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "curvlab/error.hpp"

namespace curvlab::fold {

namespace {

constexpr double kPi = std::numbers::pi;

void check_fold_angle(double a) {
  if (!(a >= 0.0 && a < 0.5 * kPi)) {
    throw DomainError("fold angle must lie in [0, 90) degrees");
  }
}

}  // namespace

const char* to_string(CreaseKind kind) {
  return kind == CreaseKind::kMountain ? "mountain" : "valley";
}

AnnulusTemplate::AnnulusTemplate(double r_in_mm, double r_out_mm, std::vector<Crease> creases)
    : r_in_(r_in_mm), r_out_(r_out_mm), creases_(std::move(creases)) {
  if (!(r_in_ > 0.0) || !(r_out_ > r_in_) || !std::isfinite(r_out_)) {
    throw DomainError("annulus needs 0 < inner radius < outer radius");
  }
  double last = r_in_;
  for (size_t i = 0; i < creases_.size(); ++i) {
    const Crease& c = creases_[i];
    if (!(c.radius_mm > last) || !(c.radius_mm < r_out_)) {
      throw DomainError("crease radii must increase strictly inside (inner, outer)");
    }
    if (i > 0 && c.kind == creases_[i - 1].kind) {
      throw DomainError("crease kinds must alternate");
    }
    last = c.radius_mm;
  }
}

AnnulusTemplate make_annulus_template(double r_in_mm, double r_out_mm, int n_creases,
                                      Spacing spacing) {
  if (!(r_in_mm > 0.0) || !(r_out_mm > r_in_mm)) {
    throw DomainError("annulus needs 0 < inner radius < outer radius");
  }
  if (n_creases < 1) throw DomainError("annulus needs at least one crease");
  const int strips = n_creases + 1;
  const double width = r_out_mm - r_in_mm;
  std::vector<double> radii;
  if (spacing.rule == Spacing::Rule::kUniform) {
    for (int k = 1; k <= n_creases; ++k) radii.push_back(r_in_mm + k * width / strips);
  } else if (!spacing.ratio) {
    const double g = std::pow(r_out_mm / r_in_mm, 1.0 / strips);
    for (int k = 1; k <= n_creases; ++k) radii.push_back(r_in_mm * std::pow(g, k));
  } else {
    const double q = *spacing.ratio;
    if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("geometric ratio must be positive");
    // Strip widths w0 q^j, j = 0..n, summing to the annulus width.
    const double total = q == 1.0 ? strips : std::expm1(strips * std::log(q)) / (q - 1.0);
    const double w0 = width / total;
    for (int k = 1; k <= n_creases; ++k) {
      const double partial = q == 1.0 ? k : std::expm1(k * std::log(q)) / (q - 1.0);
      radii.push_back(r_in_mm + w0 * partial);
    }
  }
  std::vector<Crease> creases;
  for (size_t i = 0; i < radii.size(); ++i) {
    creases.push_back({radii[i], i % 2 == 0 ? CreaseKind::kMountain : CreaseKind::kValley});
  }
  return AnnulusTemplate(r_in_mm, r_out_mm, std::move(creases));
}

std::vector<double> crease_lengths(const AnnulusTemplate& t) {
  std::vector<double> out;
  for (const Crease& c : t.creases()) out.push_back(2.0 * kPi * c.radius_mm);
  return out;
}

FoldProfile::FoldProfile(std::vector<ProfileRecord> records, double fold_angle_rad)
    : records_(std::move(records)), fold_angle_(fold_angle_rad) {
  check_fold_angle(fold_angle_rad);
  for (const ProfileRecord& r : records_) {
    if (r.circumference_mm != 2.0 * kPi * r.material_radius_mm) {
      throw DomainError("profile record violates C = 2 pi r");
    }
  }
}

FoldProfile FoldProfile::from_circumference(const std::vector<double>& effective_radii,
                                            const std::vector<double>& circumferences) {
  if (effective_radii.size() != circumferences.size()) {
    throw DomainError("radius and circumference columns differ in length");
  }
  FoldProfile p;
  for (size_t i = 0; i < effective_radii.size(); ++i) {
    const double material = circumferences[i] / (2.0 * kPi);
    p.records_.push_back({material, effective_radii[i], circumferences[i]});
  }
  return p;
}

FoldProfile effective_profile(const AnnulusTemplate& t, double fold_angle_rad) {
  check_fold_angle(fold_angle_rad);
  const double c = std::cos(fold_angle_rad);
  std::vector<ProfileRecord> records;
  for (const Crease& crease : t.creases()) {
    const double r = crease.radius_mm;
    records.push_back({r, t.r_in() + c * (r - t.r_in()), 2.0 * kPi * r});
  }
  return FoldProfile(std::move(records), fold_angle_rad);
}

double apex_angle_surplus(double fold_angle_rad) {
  check_fold_angle(fold_angle_rad);
  return 2.0 * kPi * (1.0 / std::cos(fold_angle_rad) - 1.0);
}

std::vector<double> estimate_effective_curvature(const FoldProfile& p) {
  const auto& rec = p.records();
  if (rec.size() < 3) {
    throw DomainError("curvature estimate needs at least 3 creases, got " +
                      std::to_string(rec.size()));
  }
  std::vector<double> out;
  for (size_t k = 1; k + 1 < rec.size(); ++k) {
    const double s0 = rec[k - 1].effective_radius_mm;
    const double s1 = rec[k].effective_radius_mm;
    const double s2 = rec[k + 1].effective_radius_mm;
    const double c0 = rec[k - 1].circumference_mm;
    const double c1 = rec[k].circumference_mm;
    const double c2 = rec[k + 1].circumference_mm;
    const double second = 2.0 * ((c2 - c1) / (s2 - s1) - (c1 - c0) / (s1 - s0)) / (s2 - s0);
    out.push_back(-second / c1);
  }
  return out;
}

}  // namespace curvlab::fold
