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

#include <optional>
#include <vector>

// Curved-folding templates: a paper annulus creased along concentric
// circles with alternating mountain and valley folds, plus a kinematic
// model of the folded form.
namespace curvlab::fold {

enum class CreaseKind { kMountain, kValley };

const char* to_string(CreaseKind kind);

struct Crease {
  double radius_mm = 0.0;
  CreaseKind kind = CreaseKind::kMountain;
};

/// Crease radii strictly increase inside (r_in, r_out); kinds alternate.
class AnnulusTemplate {
 public:
  /// Throws DomainError when the invariants do not hold.
  AnnulusTemplate(double r_in_mm, double r_out_mm, std::vector<Crease> creases);

  double r_in() const { return r_in_; }
  double r_out() const { return r_out_; }
  const std::vector<Crease>& creases() const { return creases_; }

 private:
  double r_in_;
  double r_out_;
  std::vector<Crease> creases_;
};

/// Crease spacing. Uniform splits the width into n + 1 equal strips.
/// Geometric makes successive strip widths grow by `ratio`; without a ratio
/// the radii themselves form a geometric progression from r_in to r_out.
struct Spacing {
  enum class Rule { kUniform, kGeometric };
  Rule rule = Rule::kUniform;
  std::optional<double> ratio;

  static Spacing uniform() { return {}; }
  static Spacing geometric(std::optional<double> ratio = std::nullopt) {
    return {Rule::kGeometric, ratio};
  }
};

/// First crease is a mountain. Throws DomainError on ordering, count, or
/// ratio violations.
AnnulusTemplate make_annulus_template(double r_in_mm, double r_out_mm, int n_creases,
                                      Spacing spacing);

/// 2 pi r per crease. Folding does not change these lengths.
std::vector<double> crease_lengths(const AnnulusTemplate& t);

struct ProfileRecord {
  double material_radius_mm = 0.0;
  double effective_radius_mm = 0.0;
  double circumference_mm = 0.0;
};

/// Planform of the folded annulus under a single global fold angle.
class FoldProfile {
 public:
  /// Throws DomainError unless circumference == 2 pi material_radius for
  /// every record and fold_angle lies in [0, pi/2).
  FoldProfile(std::vector<ProfileRecord> records, double fold_angle_rad);

  /// Records from an arbitrary circumference law C(s) sampled at effective
  /// radii s; the material radius is set to C / 2pi.
  static FoldProfile from_circumference(const std::vector<double>& effective_radii,
                                        const std::vector<double>& circumferences);

  const std::vector<ProfileRecord>& records() const { return records_; }
  double fold_angle() const { return fold_angle_; }

 private:
  FoldProfile() = default;

  std::vector<ProfileRecord> records_;
  double fold_angle_ = 0.0;
};

/// Axisymmetric zigzag model: every strip contracts radially by
/// cos(fold_angle), so the crease at material radius r sits at effective
/// radius r_in + cos(fold_angle) (r - r_in) while keeping its length.
FoldProfile effective_profile(const AnnulusTemplate& t, double fold_angle_rad);

/// 2 pi (sec(fold_angle) - 1): the angle in excess of 2 pi that the folded
/// cone carries around its centre.
double apex_angle_surplus(double fold_angle_rad);

/// K estimates -C''(s) / C(s) at each interior crease from divided
/// differences of circumference over effective radius. Output index k
/// belongs to record k + 1. Throws DomainError for fewer than 3 records.
std::vector<double> estimate_effective_curvature(const FoldProfile& p);

}  // namespace curvlab::fold
