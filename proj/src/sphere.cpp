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

#include "curvlab/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "curvlab/error.hpp"

namespace curvlab::sphere {

namespace {

constexpr double kPi = std::numbers::pi;

// Three unit vectors with |a . (b x c)| below this lie on one great circle.
constexpr double kCoplanarTol = 1e-14;

Vec3 unit(Vec3 v) { return (1.0 / norm(v)) * v; }

Vec3 canonical_normal(Vec3 n) {
  n = unit(n);
  const double lead = n.x != 0.0 ? n.x : (n.y != 0.0 ? n.y : n.z);
  return lead < 0.0 ? -n : n;
}

// Angle at vertex p between the arcs p->q and p->r.
double vertex_angle(Vec3 p, Vec3 q, Vec3 r) {
  return angle_between(cross(p, q), cross(p, r));
}

}  // namespace

SpherePoint::SpherePoint(Vec3 v) {
  const double len = norm(v);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw DomainError("sphere point needs a non-zero finite vector");
  }
  v_ = (1.0 / len) * v;
}

SpherePoint SpherePoint::from_lat_lon(double lat_deg, double lon_deg) {
  if (!(lat_deg >= -90.0 && lat_deg <= 90.0) || !std::isfinite(lon_deg)) {
    throw DomainError("latitude must lie in [-90, 90] degrees");
  }
  const double lat = lat_deg * kPi / 180.0;
  const double lon = lon_deg * kPi / 180.0;
  // Exact zeros for the cardinal directions keep the canonical examples
  // free of 6e-17 noise.
  auto c = [](double a) { return std::abs(std::cos(a)) < 1e-16 ? 0.0 : std::cos(a); };
  auto s = [](double a) { return std::abs(std::sin(a)) < 1e-16 ? 0.0 : std::sin(a); };
  return SpherePoint(Vec3{c(lat) * c(lon), c(lat) * s(lon), s(lat)});
}

GreatCircle::GreatCircle(Vec3 normal) {
  if (!(norm(normal) > 0.0)) throw DomainError("great circle needs a non-zero normal");
  n_ = canonical_normal(normal);
}

bool GreatCircle::contains(const SpherePoint& p, double tol) const {
  return std::abs(dot(n_, p.v())) <= tol;
}

GreatCircle great_circle_through(const SpherePoint& p, const SpherePoint& q) {
  const Vec3 n = cross(p.v(), q.v());
  if (norm(n) <= kDegenerateTol) {
    throw DegenerateError("points are equal or antipodal; great circle not unique");
  }
  return GreatCircle(n);
}

std::pair<SpherePoint, SpherePoint> intersect_great_circles(const GreatCircle& c1,
                                                            const GreatCircle& c2) {
  const Vec3 d = cross(c1.normal(), c2.normal());
  if (norm(d) <= kDegenerateTol) throw DegenerateError("great circles are identical");
  const SpherePoint p(d);
  return {p, SpherePoint(-p.v())};
}

void validate(const SphericalTriangle& t) {
  const Vec3& a = t.a.v();
  const Vec3& b = t.b.v();
  const Vec3& c = t.c.v();
  if (norm(cross(a, b)) <= kDegenerateTol || norm(cross(b, c)) <= kDegenerateTol ||
      norm(cross(c, a)) <= kDegenerateTol) {
    throw DegenerateError("triangle has equal or antipodal vertices");
  }
  if (std::abs(dot(a, cross(b, c))) <= kCoplanarTol) {
    throw DegenerateError("triangle vertices lie on one great circle");
  }
}

std::array<double, 3> triangle_angles(const SphericalTriangle& t) {
  validate(t);
  const Vec3& a = t.a.v();
  const Vec3& b = t.b.v();
  const Vec3& c = t.c.v();
  return {vertex_angle(a, b, c), vertex_angle(b, c, a), vertex_angle(c, a, b)};
}

double triangle_area_excess(const std::array<double, 3>& angles) {
  const double sum = angles[0] + angles[1] + angles[2];
  if (!(sum > kPi && sum < 3.0 * kPi)) {
    throw DomainError("angle sum " + std::to_string(sum) +
                      " outside (pi, 3pi); not a spherical triangle");
  }
  return sum - kPi;
}

double arc_length(const SpherePoint& p, const SpherePoint& q) {
  return angle_between(p.v(), q.v());
}

double triangle_area_lhuilier(const SphericalTriangle& t) {
  validate(t);
  const double a = arc_length(t.b, t.c);
  const double b = arc_length(t.c, t.a);
  const double c = arc_length(t.a, t.b);
  const double s = 0.5 * (a + b + c);
  auto half_tan = [](double x) { return std::tan(0.5 * std::max(x, 0.0)); };
  const double prod = half_tan(s) * half_tan(s - a) * half_tan(s - b) * half_tan(s - c);
  return 4.0 * std::atan(std::sqrt(std::max(prod, 0.0)));
}

std::vector<SpherePoint> sample_geodesic(const SpherePoint& p, const SpherePoint& q,
                                         int n) {
  if (n < 2) throw DomainError("geodesic sampling needs at least 2 points");
  if (norm(cross(p.v(), q.v())) <= kDegenerateTol) {
    throw DegenerateError("points are equal or antipodal; minor arc not unique");
  }
  const double omega = arc_length(p, q);
  const double so = std::sin(omega);
  std::vector<SpherePoint> out;
  out.reserve(static_cast<size_t>(n));
  out.push_back(p);
  for (int i = 1; i + 1 < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    const double wp = std::sin((1.0 - f) * omega) / so;
    const double wq = std::sin(f * omega) / so;
    out.emplace_back(wp * p.v() + wq * q.v());
  }
  out.push_back(q);
  return out;
}

}  // namespace curvlab::sphere
