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

#include "curvlab/disk.hpp"
#include "curvlab/error.hpp"

using namespace curvlab;
using namespace curvlab::disk;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

Complex random_z(std::mt19937_64& rng, double rmax = 0.95) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2 * kPi * u(rng));
}

std::optional<DiskTriangle> make_triangle(Complex a, Complex b, Complex c) {
  const DiskTriangle t{DiskPoint(a), DiskPoint(b), DiskPoint(c)};
  try {
    validate(t);
  } catch (const DegenerateError&) {
    return std::nullopt;
  }
  return t;
}

// Disk automorphism z -> e^{i theta} (z - a) / (1 - conj(a) z).
Complex isometry(Complex z, Complex a, double theta) {
  return std::polar(1.0, theta) * (z - a) / (1.0 - std::conj(a) * z);
}

// Interior samples along a geodesic, strictly between its ideal endpoints.
std::vector<Complex> samples(const DiskGeodesic& g, int n = 2000) {
  const auto [a, b] = g.ideal_endpoints();
  std::vector<Complex> out;
  if (g.kind() == DiskGeodesic::Kind::kDiameter) {
    for (int i = 1; i < n; ++i) out.push_back(a + (b - a) * (double(i) / n));
    return out;
  }
  const double t0 = std::arg(a - g.center());
  double dt = std::arg(b - g.center()) - t0;
  if (dt > kPi) dt -= 2 * kPi;
  if (dt < -kPi) dt += 2 * kPi;
  for (int i = 1; i < n; ++i) out.push_back(g.center() + std::polar(g.radius(), t0 + dt * i / n));
  return out;
}

// Signed side of z relative to g: the sign flips exactly across g.
double side(const DiskGeodesic& g, Complex z) {
  if (g.kind() == DiskGeodesic::Kind::kDiameter) {
    return g.direction().real() * z.imag() - g.direction().imag() * z.real();
  }
  return std::abs(z - g.center()) - g.radius();
}

}  // namespace

TEST(DiskPoint, InsideOnly) {
  EXPECT_NO_THROW(DiskPoint(0.999, 0.0));
  EXPECT_THROW(DiskPoint(1.0, 0.0), DomainError);
  EXPECT_THROW(DiskPoint(0.8, 0.8), DomainError);
  EXPECT_THROW(DiskPoint(std::nan(""), 0.0), DomainError);
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(DiskPoint(0, 0), DiskPoint(0, 0)), 0.0);
  const double d = distance(DiskPoint(0, 0), DiskPoint(0.5, 0));
  EXPECT_NEAR(d, std::log(3.0), 1e-15);
  EXPECT_NEAR(d, 2 * std::atanh(0.5), 1e-15);
  EXPECT_NEAR(d, std::acosh(1 + 2 * 0.25 / 0.75), 1e-12);
}

TEST(Distance, ArcoshFormAgrees) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Complex z = random_z(rng), w = random_z(rng);
    const double arcosh =
        std::acosh(1 + 2 * std::norm(z - w) / ((1 - std::norm(z)) * (1 - std::norm(w))));
    EXPECT_NEAR(distance(DiskPoint(z), DiskPoint(w)), arcosh, 1e-7 * (1 + arcosh));
  }
}

TEST(Distance, SymmetricAndTriangleInequality) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const DiskPoint a(random_z(rng)), b(random_z(rng)), c(random_z(rng));
    EXPECT_NEAR(distance(a, b), distance(b, a), 1e-12);
    EXPECT_GE(distance(a, b), 0.0);
    EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c) + 1e-12);
  }
}

TEST(Distance, IsometryInvariance) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  for (int i = 0; i < 500; ++i) {
    const Complex z = random_z(rng, 0.8), w = random_z(rng, 0.8);
    const double theta = u(rng);
    // Rotation about the origin.
    EXPECT_NEAR(distance(DiskPoint(z * std::polar(1.0, theta)), DiskPoint(w * std::polar(1.0, theta))),
                distance(DiskPoint(z), DiskPoint(w)), 1e-9);
    // General automorphism with a moderate base point.
    const Complex a = random_z(rng, 0.5);
    EXPECT_NEAR(distance(DiskPoint(isometry(z, a, theta)), DiskPoint(isometry(w, a, theta))),
                distance(DiskPoint(z), DiskPoint(w)), 1e-9);
  }
}

TEST(Mobius, RoundTrip) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Complex p = random_z(rng), z = random_z(rng);
    EXPECT_NEAR(std::abs(mobius_to_origin(p, p)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(mobius_from_origin(p, mobius_to_origin(p, z)) - z), 0.0, 1e-12);
  }
}

TEST(Geodesic, ThroughOriginIsDiameter) {
  const auto g = geodesic_through(DiskPoint(0, 0), DiskPoint(0.5, 0));
  EXPECT_EQ(g.kind(), DiskGeodesic::Kind::kDiameter);
  EXPECT_NEAR(std::abs(g.direction().imag()), 0.0, 1e-15);
  const auto h = geodesic_through(DiskPoint(-0.3, -0.3), DiskPoint(0.6, 0.6));
  EXPECT_EQ(h.kind(), DiskGeodesic::Kind::kDiameter);
}

TEST(Geodesic, ArcThroughTwoAxisPoints) {
  const Complex z{0.5, 0.0}, w{0.0, 0.5};
  // Oracle: 2 c.z = 1 + |z|^2 and 2 c.w = 1 + |w|^2 by Cramer's rule.
  const double a11 = 2 * z.real(), a12 = 2 * z.imag(), a21 = 2 * w.real(), a22 = 2 * w.imag();
  const double r1 = 1 + std::norm(z), r2 = 1 + std::norm(w);
  const double det = a11 * a22 - a12 * a21;
  const Complex c{(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
  EXPECT_NEAR(c.real(), 1.25, 1e-15);
  EXPECT_NEAR(c.imag(), 1.25, 1e-15);

  const auto g = geodesic_through(DiskPoint(z), DiskPoint(w));
  ASSERT_EQ(g.kind(), DiskGeodesic::Kind::kArc);
  EXPECT_NEAR(std::abs(g.center() - c), 0.0, 1e-12);
  EXPECT_NEAR(g.radius() * g.radius(), 2.125, 1e-12);
  EXPECT_NEAR(std::norm(g.center()) - g.radius() * g.radius(), 1.0, 1e-9);
  EXPECT_LE(g.residual(z), 1e-9);
  EXPECT_LE(g.residual(w), 1e-9);
}

TEST(Geodesic, CoincidentPoints) {
  EXPECT_THROW(geodesic_through(DiskPoint(0.2, 0.1), DiskPoint(0.2, 0.1)), DegenerateError);
}

TEST(Geodesic, RandomPairsLieOnResult) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Complex z = random_z(rng, 0.99), w = random_z(rng, 0.99);
    const auto g = geodesic_through(DiskPoint(z), DiskPoint(w));
    EXPECT_LE(g.residual(z), 1e-9);
    EXPECT_LE(g.residual(w), 1e-9);
    if (g.kind() == DiskGeodesic::Kind::kArc) {
      EXPECT_NEAR(std::norm(g.center()) - g.radius() * g.radius(), 1.0, 1e-9 * std::norm(g.center()));
    }
    const auto [a, b] = g.ideal_endpoints();
    EXPECT_NEAR(std::abs(a), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(b), 1.0, 1e-12);
    EXPECT_LE(g.residual(a), 1e-9 * (1 + g.radius()));
    // Reconstruction from the ideal points gives the same geodesic.
    EXPECT_TRUE(DiskGeodesic::from_ideal_points(a, b).same_as(g, 1e-7));
  }
}

TEST(Intersect, Diameters) {
  const auto p = intersect(DiskGeodesic::diameter(1.0), DiskGeodesic::diameter(kI));
  ASSERT_TRUE(p);
  EXPECT_NEAR(std::abs(p->z()), 0.0, 1e-15);
}

TEST(Intersect, ArcAcrossRealAxis) {
  const auto arc = geodesic_through(DiskPoint(0.5, 0.3), DiskPoint(0.5, -0.3));
  // Oracle: bisect the arc's residual sign along the real axis.
  auto f = [&](double x) { return std::abs(Complex(x, 0) - arc.center()) - arc.radius(); };
  double lo = 0.0, hi = 0.99;
  ASSERT_LT(f(lo) * f(hi), 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0 ? hi : lo) = mid;
  }
  const auto p = intersect(DiskGeodesic::diameter(1.0), arc);
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->x(), 0.5 * (lo + hi), 1e-12);
  EXPECT_NEAR(p->y(), 0.0, 1e-12);
  EXPECT_LE(arc.residual(p->z()), 1e-9);
}

TEST(Intersect, DisjointAndIdentical) {
  const auto g = DiskGeodesic::diameter(1.0);
  const auto h = geodesic_through(DiskPoint(-0.2, 0.5), DiskPoint(0.2, 0.5));
  EXPECT_FALSE(intersect(g, h));
  EXPECT_THROW(intersect(g, DiskGeodesic::diameter(-1.0)), DegenerateError);
}

TEST(Intersect, RandomCrossingsLieOnBoth) {
  std::mt19937_64 rng(6);
  int crossings = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto g1 = geodesic_through(DiskPoint(random_z(rng)), DiskPoint(random_z(rng)));
    const auto g2 = geodesic_through(DiskPoint(random_z(rng)), DiskPoint(random_z(rng)));
    const auto p = intersect(g1, g2);
    // Sample-based oracle: the geodesics cross iff g2's samples change side.
    const auto s = samples(g2);
    const bool changes = std::any_of(s.begin(), s.end(), [&](Complex z) {
      return side(g1, z) * side(g1, s.front()) < 0;
    });
    if (p) {
      ++crossings;
      EXPECT_LE(g1.residual(p->z()), 1e-9);
      EXPECT_LE(g2.residual(p->z()), 1e-9);
      EXPECT_TRUE(changes);
    } else {
      EXPECT_FALSE(changes);
    }
  }
  EXPECT_GT(crossings, 100);
}

TEST(DistanceToGeodesic, Examples) {
  EXPECT_NEAR(distance_to_geodesic(DiskGeodesic::diameter(1.0), DiskPoint(0, 0.5)),
              std::log(3.0), 1e-12);
  EXPECT_NEAR(distance_to_geodesic(DiskGeodesic::diameter(1.0), DiskPoint(0.3, 0)), 0.0, 1e-12);
}

TEST(Triangle, AxisTriangleAngles) {
  const DiskTriangle t{DiskPoint(0, 0), DiskPoint(0.5, 0), DiskPoint(0, 0.5)};
  const auto a = triangle_angles(t);
  // Right isosceles triangle with legs ln 3: tan B = 1 / cosh(ln 3) = 3/5.
  EXPECT_NEAR(a[0], kPi / 2, 1e-12);
  EXPECT_NEAR(a[1], std::atan(0.6), 1e-12);
  EXPECT_NEAR(a[2], std::atan(0.6), 1e-12);
  const double sum = a[0] + a[1] + a[2];
  EXPECT_LT(sum, kPi);
  EXPECT_NEAR(sum + area_numeric(t), kPi, 1e-6);
}

TEST(Triangle, FlatLimit) {
  const DiskTriangle t{DiskPoint(0.1e-3, 0.2e-3), DiskPoint(0.5e-3, 0.0), DiskPoint(-0.3e-3, 0.5e-3)};
  const auto a = triangle_angles(t);
  EXPECT_NEAR(a[0] + a[1] + a[2], kPi, 1e-5);
  // Euclidean angle at the first vertex.
  const Complex u = t.b.z() - t.a.z(), v = t.c.z() - t.a.z();
  EXPECT_NEAR(a[0], std::abs(std::arg(v / u)), 1e-5);
}

TEST(Triangle, NearBoundaryIsThin) {
  const auto v = [](double a) { return DiskPoint(std::polar(0.999, a)); };
  const auto a = triangle_angles({v(0.1), v(2.2), v(4.3)});
  EXPECT_LT(a[0] + a[1] + a[2], 0.1);
}

TEST(Triangle, Degenerate) {
  EXPECT_THROW(triangle_angles({DiskPoint(0, 0), DiskPoint(0, 0), DiskPoint(0.1, 0)}), DegenerateError);
  EXPECT_THROW(validate({DiskPoint(-0.5, 0), DiskPoint(0, 0), DiskPoint(0.5, 0)}), DegenerateError);
  const auto g = geodesic_through(DiskPoint(0.5, 0.3), DiskPoint(0.5, -0.3));
  const auto on = intersect(DiskGeodesic::diameter(1.0), g);
  EXPECT_THROW(validate({DiskPoint(0.5, 0.3), DiskPoint(0.5, -0.3), *on}), DegenerateError);
}

TEST(Area, Sliver) {
  const DiskTriangle t{DiskPoint(-0.5, 0), DiskPoint(0.5, 0), DiskPoint(0, 1e-7)};
  EXPECT_LT(area_numeric(t), 1e-6);
}

TEST(Area, DefectLawOnRandomTriangles) {
  std::mt19937_64 rng(2026);
  int checked = 0;
  double worst = 0.0;
  while (checked < 500) {
    const auto t = make_triangle(random_z(rng), random_z(rng), random_z(rng));
    if (!t) continue;
    const auto a = triangle_angles(*t);
    const double sum = a[0] + a[1] + a[2];
    EXPECT_LT(sum, kPi);
    worst = std::max(worst, std::abs(area_numeric(*t) - (kPi - sum)));
    ++checked;
  }
  EXPECT_LE(worst, 1e-5);
}

TEST(Area, AnglesInvariantUnderIsometry) {
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 200) {
    const auto t = make_triangle(random_z(rng, 0.7), random_z(rng, 0.7), random_z(rng, 0.7));
    if (!t) continue;
    const Complex base = random_z(rng, 0.5);
    const double th = 1.234;
    const auto u = make_triangle(isometry(t->a.z(), base, th), isometry(t->b.z(), base, th),
                                 isometry(t->c.z(), base, th));
    ASSERT_TRUE(u);
    const auto a = triangle_angles(*t);
    const auto b = triangle_angles(*u);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(a[k], b[k], 1e-9);
    EXPECT_NEAR(area_numeric(*t), area_numeric(*u), 1e-6);
    ++checked;
  }
}

TEST(Area, ReflectionDoubling) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    // A on the real axis, C above it, C' its mirror image; the geodesic CC'
    // crosses the axis at D by symmetry.
    const Complex a{std::uniform_real_distribution<double>(-0.6, 0.6)(rng), 0.0};
    Complex c = random_z(rng, 0.85);
    if (std::abs(c.imag()) < 0.05) continue;
    c = {c.real(), std::abs(c.imag())};
    const Complex cc = std::conj(c);
    const auto d = intersect(DiskGeodesic::diameter(1.0), geodesic_through(DiskPoint(c), DiskPoint(cc)));
    ASSERT_TRUE(d);
    const auto half = make_triangle(a, c, d->z());
    const auto whole = make_triangle(a, c, cc);
    if (!half || !whole) continue;
    EXPECT_NEAR(area_numeric(*whole), 2 * area_numeric(*half), 1e-5);
  }
}

TEST(Area, CevianAdditivity) {
  std::mt19937_64 rng(10);
  int checked = 0;
  while (checked < 100) {
    const auto t = make_triangle(random_z(rng, 0.9), random_z(rng, 0.9), random_z(rng, 0.9));
    if (!t) continue;
    // Geodesic midpoint of BC: move B to 0, halve the distance along C.
    const Complex cb = mobius_to_origin(t->b.z(), t->c.z());
    const double s = std::tanh(0.25 * distance(t->b, t->c)) / std::abs(cb);
    const Complex m = mobius_from_origin(t->b.z(), cb * s);
    const auto t1 = make_triangle(t->a.z(), t->b.z(), m);
    const auto t2 = make_triangle(t->a.z(), m, t->c.z());
    if (!t1 || !t2) continue;
    EXPECT_NEAR(distance(t->b, DiskPoint(m)), distance(DiskPoint(m), t->c), 1e-9);
    EXPECT_NEAR(area_numeric(*t), area_numeric(*t1) + area_numeric(*t2), 1e-5);
    ++checked;
  }
}

TEST(Circle, CenteredUnitRadius) {
  const auto c = hyperbolic_circle(DiskPoint(0, 0), 1.0);
  EXPECT_NEAR(c.euclidean_radius, std::tanh(0.5), 1e-15);
  EXPECT_NEAR(c.euclidean_radius, 0.462117, 1e-6);
  EXPECT_NEAR(distance(DiskPoint(0, 0), DiskPoint(c.euclidean_radius, 0)), 1.0, 1e-12);
  EXPECT_NEAR(c.circumference(), 2 * kPi * std::sinh(1.0), 1e-12);
  EXPECT_GT(c.circumference(), 2 * kPi);
}

TEST(Circle, SmallRadiusLimit) {
  const auto c = hyperbolic_circle(DiskPoint(0, 0), 1e-6);
  EXPECT_NEAR(c.euclidean_radius, 0.5e-6, 1e-15);
}

TEST(Circle, CircumferenceExcess) {
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    EXPECT_GT(hyperbolic_circle(DiskPoint(0, 0), r).circumference(), 2 * kPi * r);
  }
}

TEST(Circle, RenderedPointsAtRadius) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ur(0.05, 2.5);
  for (int i = 0; i < 100; ++i) {
    const DiskPoint center(random_z(rng, 0.7));
    const double r = ur(rng);
    const auto c = hyperbolic_circle(center, r);
    EXPECT_LT(std::abs(c.euclidean_center) + c.euclidean_radius, 1.0);
    for (int k = 0; k < 64; ++k) {
      const Complex z = c.euclidean_center + std::polar(c.euclidean_radius, 2 * kPi * k / 64);
      EXPECT_NEAR(distance(center, DiskPoint(z)), r, 1e-9 * (1 + std::exp(r)));
    }
  }
}

TEST(Circle, Errors) {
  EXPECT_THROW(hyperbolic_circle(DiskPoint(0, 0), 0.0), DomainError);
  EXPECT_THROW(hyperbolic_circle(DiskPoint(0.9, 0), 40.0), DomainError);
}

TEST(Parallels, ThroughPointAboveRealAxis) {
  const auto g = geodesic_through(DiskPoint(-0.9, 0), DiskPoint(0.9, 0));
  const DiskPoint p(0, 0.5);
  const auto ps = parallels_through(g, p, 3);
  ASSERT_EQ(ps.size(), 3u);
  for (size_t i = 0; i < ps.size(); ++i) {
    EXPECT_LE(ps[i].residual(p.z()), 1e-9);
    EXPECT_FALSE(intersect(ps[i], g));
    for (const Complex z : samples(ps[i])) EXPECT_GT(side(g, z) * side(g, p.z()), 0.0);
    for (size_t j = 0; j < i; ++j) EXPECT_FALSE(ps[i].same_as(ps[j], 1e-6));
  }
}

TEST(Parallels, Errors) {
  const auto g = DiskGeodesic::diameter(1.0);
  EXPECT_THROW(parallels_through(g, DiskPoint(0.3, 0), 3), DegenerateError);
  EXPECT_THROW(parallels_through(g, DiskPoint(0.3, 0.5), 0), DomainError);
  EXPECT_THROW(parallels_through(g, DiskPoint(0.3, 0.5), 2000000000), DomainError);
}

TEST(Parallels, RandomCasesAreCertified) {
  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 100) {
    const auto g = geodesic_through(DiskPoint(random_z(rng)), DiskPoint(random_z(rng)));
    const DiskPoint p(random_z(rng));
    if (distance_to_geodesic(g, p) <= 1e-3) continue;
    for (int k : {1, 5}) {
      const auto ps = parallels_through(g, p, k);
      ASSERT_EQ(ps.size(), static_cast<size_t>(k));
      for (const auto& q : ps) {
        EXPECT_LE(q.residual(p.z()), 1e-9);
        EXPECT_FALSE(intersect(q, g));
        for (const Complex z : samples(q, 400)) EXPECT_GT(side(g, z) * side(g, p.z()), 0.0);
      }
    }
    ++checked;
  }
}
