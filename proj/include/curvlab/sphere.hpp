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

#include <array>
#include <utility>
#include <vector>

#include "curvlab/vec3.hpp"

// Geometry on the unit sphere (K = +1). Straight lines are great circles.
namespace curvlab::sphere {

/// Cross-product norm below which two points are treated as equal or
/// antipodal, and two circle normals as the same circle.
inline constexpr double kDegenerateTol = 1e-9;

/// A point on the unit sphere.
class SpherePoint {
 public:
  /// Normalizes v. Throws DomainError for a zero or non-finite vector.
  explicit SpherePoint(Vec3 v);

  /// Latitude and longitude in degrees.
  static SpherePoint from_lat_lon(double lat_deg, double lon_deg);

  const Vec3& v() const { return v_; }

 private:
  Vec3 v_;
};

/// A great circle, stored as its unit plane normal. n and -n name the same
/// circle; the stored normal has its first non-zero component positive.
class GreatCircle {
 public:
  explicit GreatCircle(Vec3 normal);

  const Vec3& normal() const { return n_; }
  bool contains(const SpherePoint& p, double tol = kDegenerateTol) const;

 private:
  Vec3 n_;
};

/// Spherical triangle bounded by the three minor arcs between its vertices.
struct SphericalTriangle {
  SpherePoint a;
  SpherePoint b;
  SpherePoint c;
};

/// Throws DegenerateError for equal or antipodal points.
GreatCircle great_circle_through(const SpherePoint& p, const SpherePoint& q);

/// The antipodal pair where two distinct great circles cross. Never fails for
/// distinct circles: there are no parallel lines on the sphere.
std::pair<SpherePoint, SpherePoint> intersect_great_circles(const GreatCircle& c1,
                                                            const GreatCircle& c2);

/// Interior angles at a, b, c (radians), measured as dihedral angles between
/// the great-circle planes through each vertex.
std::array<double, 3> triangle_angles(const SphericalTriangle& t);

/// Area from the angle excess alpha + beta + gamma - pi. Throws DomainError
/// unless the sum lies in (pi, 3pi).
double triangle_area_excess(const std::array<double, 3>& angles);

/// Area from the side lengths via L'Huilier's theorem. Shares no code with
/// the angle path; used as its oracle.
double triangle_area_lhuilier(const SphericalTriangle& t);

/// Great-circle arc length between two points.
double arc_length(const SpherePoint& p, const SpherePoint& q);

/// n >= 2 points along the minor arc from p to q, evenly spaced by arc
/// length (slerp). First is p, last is q.
std::vector<SpherePoint> sample_geodesic(const SpherePoint& p, const SpherePoint& q,
                                         int n);

/// Throws DegenerateError if the triangle has equal or antipodal vertices
/// or all three vertices on one great circle.
void validate(const SphericalTriangle& t);

}  // namespace curvlab::sphere
