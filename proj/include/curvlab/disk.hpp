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
#include <complex>
#include <optional>
#include <utility>
#include <vector>

// The hyperbolic plane (K = -1) in the Poincare disk model. The model is
// conformal, so Euclidean angles between tangent directions are hyperbolic
// angles, and hyperbolic circles render as Euclidean circles.
namespace curvlab::disk {

using Complex = std::complex<double>;

/// Points must satisfy |z| < 1 - kBoundaryMargin.
inline constexpr double kBoundaryMargin = 1e-12;
/// Tolerance for "lies on a geodesic" and for comparing ideal endpoints.
inline constexpr double kOnLineTol = 1e-9;

class DiskPoint {
 public:
  /// Throws DomainError unless z lies strictly inside the unit disk.
  explicit DiskPoint(Complex z);
  DiskPoint(double x, double y) : DiskPoint(Complex(x, y)) {}

  Complex z() const { return z_; }
  double x() const { return z_.real(); }
  double y() const { return z_.imag(); }

 private:
  Complex z_;
};

/// A hyperbolic line: either a diameter of the disk or a circular arc
/// orthogonal to the unit circle (|center|^2 = 1 + radius^2).
class DiskGeodesic {
 public:
  enum class Kind { kDiameter, kArc };

  /// Diameter through the origin along `direction` (normalized).
  static DiskGeodesic diameter(Complex direction);
  /// Arc whose carrier circle has Euclidean center `center`, |center| > 1.
  static DiskGeodesic arc(Complex center);
  /// The geodesic with the given distinct ideal endpoints (|a| = |b| = 1).
  static DiskGeodesic from_ideal_points(Complex a, Complex b);

  Kind kind() const { return kind_; }
  /// Unit direction; meaningful for diameters.
  Complex direction() const { return direction_; }
  /// Carrier circle; meaningful for arcs.
  Complex center() const { return center_; }
  double radius() const { return radius_; }

  /// The two points where the geodesic meets the unit circle.
  std::pair<Complex, Complex> ideal_endpoints() const;

  /// Euclidean distance from z to the carrier line or circle.
  double residual(Complex z) const;

  bool same_as(const DiskGeodesic& other, double tol = kOnLineTol) const;

 private:
  Kind kind_ = Kind::kDiameter;
  Complex direction_{1.0, 0.0};
  Complex center_{0.0, 0.0};
  double radius_ = 0.0;
};

struct DiskTriangle {
  DiskPoint a;
  DiskPoint b;
  DiskPoint c;
};

struct HyperbolicCircle {
  DiskPoint center;
  double radius;  // hyperbolic
  Complex euclidean_center;
  double euclidean_radius;

  /// 2 pi sinh(r), delegated to the uniform-in-K circle law.
  double circumference() const;
};

/// Disk automorphism sending p to the origin: (z - p) / (1 - conj(p) z).
Complex mobius_to_origin(Complex p, Complex z);
/// Inverse of mobius_to_origin: sends the origin to p.
Complex mobius_from_origin(Complex p, Complex z);

/// Hyperbolic distance, 2 asinh(|z - w| / sqrt((1 - |z|^2)(1 - |w|^2))).
double distance(const DiskPoint& z, const DiskPoint& w);

/// Hyperbolic distance from p to the nearest point of g.
double distance_to_geodesic(const DiskGeodesic& g, const DiskPoint& p);

/// Throws DegenerateError when z and w coincide.
DiskGeodesic geodesic_through(const DiskPoint& z, const DiskPoint& w);

/// The crossing point inside the open disk, if any. Geodesics sharing an
/// ideal endpoint do not meet. Throws DegenerateError for identical inputs.
std::optional<DiskPoint> intersect(const DiskGeodesic& g1, const DiskGeodesic& g2);

/// Throws DegenerateError for coincident or collinear vertices.
void validate(const DiskTriangle& t);

/// Interior angles at a, b, c in radians.
std::array<double, 3> triangle_angles(const DiskTriangle& t);

/// Hyperbolic area by adaptive quadrature of 4 / (1 - |z|^2)^2 over the
/// triangle. The triangle is first moved so that vertex a sits at the
/// origin; its two sides through a become straight and the region is a fan
/// of thin curvilinear triangles over which the radial integral is exact.
/// The fan angle is integrated by adaptive Simpson with Richardson
/// stopping. Throws StateError past kMaxQuadratureDepth levels.
double area_numeric(const DiskTriangle& t, double rel_tol = 1e-6);
inline constexpr int kMaxQuadratureDepth = 30;

/// Circle of hyperbolic radius r about center. Throws DomainError for
/// r <= 0 or when the rendering would touch the boundary.
HyperbolicCircle hyperbolic_circle(const DiskPoint& center, double r);

/// k distinct geodesics through p that never meet g. Built in the frame
/// where p is the origin: there the candidates are diameters, and a
/// diameter misses g exactly when both of its ends fall in the long arc
/// cut off by g's ideal endpoints. The k directions are spaced evenly over
/// that admissible window and mapped back.
std::vector<DiskGeodesic> parallels_through(const DiskGeodesic& g, const DiskPoint& p,
                                            int k);

}  // namespace curvlab::disk
