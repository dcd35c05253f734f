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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "curvlab/curvature.hpp"
#include "curvlab/error.hpp"
#include "curvlab/fold.hpp"

using namespace curvlab;
using namespace curvlab::fold;

namespace {

constexpr double kPi = std::numbers::pi;

double deg(double d) { return d * kPi / 180.0; }

std::vector<double> radii(const AnnulusTemplate& t) {
  std::vector<double> out;
  for (const Crease& c : t.creases()) out.push_back(c.radius_mm);
  return out;
}

}  // namespace

TEST(Template, UniformExamples) {
  const auto two = make_annulus_template(30, 120, 2, Spacing::uniform());
  ASSERT_EQ(two.creases().size(), 2u);
  EXPECT_DOUBLE_EQ(two.creases()[0].radius_mm, 60.0);
  EXPECT_EQ(two.creases()[0].kind, CreaseKind::kMountain);
  EXPECT_DOUBLE_EQ(two.creases()[1].radius_mm, 90.0);
  EXPECT_EQ(two.creases()[1].kind, CreaseKind::kValley);

  const auto one = make_annulus_template(30, 120, 1, Spacing::uniform());
  ASSERT_EQ(one.creases().size(), 1u);
  EXPECT_DOUBLE_EQ(one.creases()[0].radius_mm, 75.0);
  EXPECT_NEAR(crease_lengths(one)[0], 150 * kPi, 1e-12);
  EXPECT_NEAR(crease_lengths(two)[0], 120 * kPi, 1e-12);
  EXPECT_NEAR(crease_lengths(two)[0], 376.99, 5e-3);
}

TEST(Template, GeometricRadii) {
  const auto t = make_annulus_template(30, 120, 3, Spacing::geometric());
  const auto r = radii(t);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 30 * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(r[1], 60.0, 1e-9);
  EXPECT_NEAR(r[2], 60 * std::sqrt(2.0), 1e-9);
  EXPECT_EQ(t.creases()[2].kind, CreaseKind::kMountain);
}

TEST(Template, GeometricStripRatio) {
  for (double q : {0.5, 0.9, 1.0, 1.5, 3.0}) {
    const auto t = make_annulus_template(10, 100, 4, Spacing::geometric(q));
    std::vector<double> edges{10};
    for (double r : radii(t)) edges.push_back(r);
    edges.push_back(100);
    for (size_t j = 1; j + 1 < edges.size(); ++j) {
      const double w0 = edges[j] - edges[j - 1];
      const double w1 = edges[j + 1] - edges[j];
      EXPECT_NEAR(w1 / w0, q, 1e-9) << "q=" << q;
    }
  }
  // A strip ratio of one is the uniform rule.
  EXPECT_EQ(radii(make_annulus_template(30, 120, 2, Spacing::geometric(1.0))),
            radii(make_annulus_template(30, 120, 2, Spacing::uniform())));
}

TEST(Template, Errors) {
  EXPECT_THROW(make_annulus_template(0, 10, 1, Spacing::uniform()), DomainError);
  EXPECT_THROW(make_annulus_template(20, 10, 1, Spacing::uniform()), DomainError);
  EXPECT_THROW(make_annulus_template(10, 10, 1, Spacing::uniform()), DomainError);
  EXPECT_THROW(make_annulus_template(10, 20, 0, Spacing::uniform()), DomainError);
  EXPECT_THROW(make_annulus_template(10, 20, 2, Spacing::geometric(0.0)), DomainError);
  EXPECT_THROW(make_annulus_template(10, 20, 2, Spacing::geometric(-2.0)), DomainError);
  using K = CreaseKind;
  EXPECT_THROW(AnnulusTemplate(10, 20, {{12, K::kMountain}, {15, K::kMountain}}), DomainError);
  EXPECT_THROW(AnnulusTemplate(10, 20, {{15, K::kMountain}, {12, K::kValley}}), DomainError);
  EXPECT_THROW(AnnulusTemplate(10, 20, {{10, K::kMountain}}), DomainError);
  EXPECT_THROW(AnnulusTemplate(10, 20, {{20, K::kMountain}}), DomainError);
  EXPECT_NO_THROW(AnnulusTemplate(10, 20, {{15, K::kValley}}));
}

TEST(Template, KindsAlternateAndRadiiIncrease) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> inner(1, 50), extra(1, 200), ratio(0.3, 3);
  std::uniform_int_distribution<int> count(1, 30);
  for (int i = 0; i < 300; ++i) {
    const double a = inner(rng), b = a + extra(rng);
    const int n = count(rng);
    for (Spacing s : {Spacing::uniform(), Spacing::geometric(), Spacing::geometric(ratio(rng))}) {
      const auto t = make_annulus_template(a, b, n, s);
      ASSERT_EQ(static_cast<int>(t.creases().size()), n);
      double last = a;
      for (int k = 0; k < n; ++k) {
        EXPECT_GT(t.creases()[k].radius_mm, last);
        EXPECT_EQ(t.creases()[k].kind, k % 2 ? CreaseKind::kValley : CreaseKind::kMountain);
        last = t.creases()[k].radius_mm;
      }
      EXPECT_LT(last, b);
    }
  }
}

TEST(Profile, FlatIsIdentity) {
  const auto t = make_annulus_template(30, 120, 5, Spacing::geometric());
  const auto p = effective_profile(t, 0.0);
  for (const auto& r : p.records()) EXPECT_EQ(r.effective_radius_mm, r.material_radius_mm);
  for (double k : estimate_effective_curvature(p)) EXPECT_NEAR(k, 0.0, 1e-12);
  EXPECT_EQ(apex_angle_surplus(0.0), 0.0);
}

TEST(Profile, SixtyDegreeExample) {
  const auto t = make_annulus_template(30, 120, 2, Spacing::uniform());
  const auto p = effective_profile(t, deg(60));
  EXPECT_NEAR(p.records()[0].effective_radius_mm, 45.0, 1e-12);
  EXPECT_NEAR(p.records()[1].effective_radius_mm, 60.0, 1e-12);
  EXPECT_NEAR(p.records()[1].circumference_mm, 180 * kPi, 1e-12);
  EXPECT_NEAR(apex_angle_surplus(deg(60)), 2 * kPi, 1e-12);
}

TEST(Profile, Inextensible) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> angle(0, deg(89.9));
  for (int i = 0; i < 200; ++i) {
    const auto t = make_annulus_template(5 + i, 400 + i, 1 + i % 17,
                                         i % 2 ? Spacing::uniform() : Spacing::geometric(1.3));
    const auto p = effective_profile(t, angle(rng));
    const auto lengths = crease_lengths(t);
    ASSERT_EQ(p.records().size(), lengths.size());
    for (size_t k = 0; k < lengths.size(); ++k) {
      EXPECT_EQ(p.records()[k].circumference_mm, lengths[k]);
      EXPECT_EQ(p.records()[k].circumference_mm, 2 * kPi * p.records()[k].material_radius_mm);
      EXPECT_LT(p.records()[k].effective_radius_mm, p.records()[k].material_radius_mm * (1 + 1e-15));
    }
  }
}

TEST(Profile, MonotoneContraction) {
  const auto t = make_annulus_template(20, 100, 6, Spacing::uniform());
  std::vector<double> prev(6, 1e300);
  for (double a = 0; a < 89.5; a += 0.5) {
    const auto p = effective_profile(t, deg(a));
    for (size_t k = 0; k < prev.size(); ++k) {
      EXPECT_LT(p.records()[k].effective_radius_mm, prev[k]);
      prev[k] = p.records()[k].effective_radius_mm;
    }
  }
}

TEST(Profile, SurplusMatchesConeRatio) {
  const auto t = make_annulus_template(25, 150, 7, Spacing::geometric());
  for (double a = 0; a < 89.0; a += 1.0) {
    const auto p = effective_profile(t, deg(a));
    for (const auto& r : p.records()) {
      // Circumference gained beyond the inner rim per unit effective radius.
      const double ratio = (r.circumference_mm - 2 * kPi * t.r_in()) /
                           (r.effective_radius_mm - t.r_in());
      EXPECT_NEAR(ratio, 2 * kPi + apex_angle_surplus(deg(a)), 1e-12 * ratio);
    }
  }
}

TEST(Profile, UniformEstimatesVanish) {
  for (double a : {0.0, 10.0, 45.0, 80.0}) {
    const auto t = make_annulus_template(30, 120, 9, Spacing::uniform());
    for (double k : estimate_effective_curvature(effective_profile(t, deg(a)))) {
      EXPECT_NEAR(k, 0.0, 1e-9);
    }
  }
}

TEST(Profile, EstimatorRecoversCircumferenceLaws) {
  for (double k : {-1.0, 0.0, 0.5}) {
    std::vector<double> s, c;
    // A graded grid exercises the non-uniform divided differences.
    for (int i = 0; i <= 60; ++i) {
      const double x = 0.5 * std::pow(1.02, i);
      s.push_back(x);
      c.push_back(circle_circumference(Curvature(k), x));
    }
    for (double est : estimate_effective_curvature(FoldProfile::from_circumference(s, c))) {
      EXPECT_NEAR(est, k, 1e-3);
    }
  }
}

TEST(Profile, Errors) {
  const auto t = make_annulus_template(30, 120, 2, Spacing::uniform());
  EXPECT_THROW(effective_profile(t, -0.1), DomainError);
  EXPECT_THROW(effective_profile(t, kPi / 2), DomainError);
  EXPECT_THROW(apex_angle_surplus(kPi / 2), DomainError);
  EXPECT_THROW(estimate_effective_curvature(effective_profile(t, 0.3)), DomainError);
  EXPECT_THROW(FoldProfile({{10, 10, 60}}, 0.0), DomainError);
  EXPECT_THROW(FoldProfile::from_circumference({1, 2}, {1}), DomainError);
}
