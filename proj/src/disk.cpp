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

#include "curvlab/disk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "curvlab/curvature.hpp"
#include "curvlab/error.hpp"

namespace curvlab::disk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double dot2(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }
double cross2(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Parameter t of the crossing of the ray t*u (|u| = 1) with the circle of
// center c orthogonal to the unit circle, taking the root inside the disk.
// The two roots of t^2 - 2 t (u.c) + 1 = 0 multiply to 1.
double ray_hits_orthogonal_circle(Complex u, Complex c) {
  const double uc = dot2(u, c);
  const double disc = std::sqrt(std::max(uc * uc - 1.0, 0.0));
  return 1.0 / (uc + std::copysign(disc, uc));
}

// Unit tangent at `from` of the geodesic from -> to, pointing toward `to`.
Complex tangent_toward(Complex from, Complex to) {
  const Complex chord = to - from;
  const DiskGeodesic g = geodesic_through(DiskPoint(from), DiskPoint(to));
  if (g.kind() == DiskGeodesic::Kind::kDiameter) return chord / std::abs(chord);
  Complex t = kI * (from - g.center());
  if (dot2(t, chord) < 0.0) t = -t;
  return t / std::abs(t);
}

double angle_at(Complex p, Complex q, Complex r) {
  const Complex u = tangent_toward(p, q);
  const Complex v = tangent_toward(p, r);
  return std::atan2(std::abs(cross2(u, v)), dot2(u, v));
}

struct SimpsonPanel {
  double a, b;
  double fa, fm, fb;
  double whole;
};

template <typename F>
double adaptive_simpson(const F& f, const SimpsonPanel& p, double tol, int depth) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m);
  const double rm = 0.5 * (m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h = (p.b - p.a) / 12.0;
  const double left = h * (p.fa + 4.0 * flm + p.fm);
  const double right = h * (p.fm + 4.0 * frm + p.fb);
  const double refined = left + right;
  const double diff = refined - p.whole;
  if (std::abs(diff) <= 15.0 * tol) return refined + diff / 15.0;
  if (depth >= kMaxQuadratureDepth) {
    throw StateError("area quadrature did not converge within depth " +
                     std::to_string(kMaxQuadratureDepth));
  }
  return adaptive_simpson(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth + 1) +
         adaptive_simpson(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth + 1);
}

}  // namespace

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      !(std::abs(z) < 1.0 - kBoundaryMargin)) {
    throw DomainError("point (" + std::to_string(z.real()) + ", " +
                      std::to_string(z.imag()) + ") is not inside the unit disk");
  }
}

DiskGeodesic DiskGeodesic::diameter(Complex direction) {
  if (!(std::abs(direction) > 0.0)) throw DomainError("diameter needs a direction");
  DiskGeodesic g;
  g.kind_ = Kind::kDiameter;
  g.direction_ = direction / std::abs(direction);
  return g;
}

DiskGeodesic DiskGeodesic::arc(Complex center) {
  const double n2 = std::norm(center);
  if (!(n2 > 1.0) || !std::isfinite(n2)) {
    throw DomainError("orthogonal arc needs a center outside the unit circle");
  }
  DiskGeodesic g;
  g.kind_ = Kind::kArc;
  g.center_ = center;
  g.radius_ = std::sqrt(n2 - 1.0);
  return g;
}

DiskGeodesic DiskGeodesic::from_ideal_points(Complex a, Complex b) {
  a /= std::abs(a);
  b /= std::abs(b);
  if (std::abs(a - b) <= kOnLineTol) {
    throw DegenerateError("ideal endpoints coincide");
  }
  const Complex s = a + b;
  if (std::abs(s) <= 1e-12) return diameter(a);
  return arc(2.0 * s / std::norm(s));
}

std::pair<Complex, Complex> DiskGeodesic::ideal_endpoints() const {
  if (kind_ == Kind::kDiameter) return {-direction_, direction_};
  const double n2 = std::norm(center_);
  const Complex foot = center_ / n2;
  const Complex offset = (radius_ / n2) * (kI * center_);
  return {foot - offset, foot + offset};
}

double DiskGeodesic::residual(Complex z) const {
  if (kind_ == Kind::kDiameter) return std::abs(cross2(direction_, z));
  return std::abs(std::abs(z - center_) - radius_);
}

bool DiskGeodesic::same_as(const DiskGeodesic& other, double tol) const {
  const auto [a1, b1] = ideal_endpoints();
  const auto [a2, b2] = other.ideal_endpoints();
  return (std::abs(a1 - a2) <= tol && std::abs(b1 - b2) <= tol) ||
         (std::abs(a1 - b2) <= tol && std::abs(b1 - a2) <= tol);
}

double HyperbolicCircle::circumference() const {
  return circle_circumference(Curvature(-1.0), radius);
}

Complex mobius_to_origin(Complex p, Complex z) {
  return (z - p) / (1.0 - std::conj(p) * z);
}

Complex mobius_from_origin(Complex p, Complex z) {
  return (z + p) / (1.0 + std::conj(p) * z);
}

double distance(const DiskPoint& z, const DiskPoint& w) {
  const double denom = std::sqrt((1.0 - std::norm(z.z())) * (1.0 - std::norm(w.z())));
  return 2.0 * std::asinh(std::abs(z.z() - w.z()) / denom);
}

double distance_to_geodesic(const DiskGeodesic& g, const DiskPoint& p) {
  // In the frame where p is the origin, the nearest point of a geodesic with
  // ideal ends a, b lies at Euclidean radius sqrt((2 - m) / (2 + m)),
  // m = |a - b|.
  const auto [a, b] = g.ideal_endpoints();
  const Complex a0 = mobius_to_origin(p.z(), a);
  const Complex b0 = mobius_to_origin(p.z(), b);
  const double m = std::min(std::abs(a0 - b0), 2.0);
  return 2.0 * std::atanh(std::sqrt((2.0 - m) / (2.0 + m)));
}

DiskGeodesic geodesic_through(const DiskPoint& z, const DiskPoint& w) {
  const Complex p = z.z();
  const Complex q = w.z();
  if (distance(z, w) <= kOnLineTol) throw DegenerateError("geodesic endpoints coincide");
  const Complex far = std::abs(p) >= std::abs(q) ? p : q;
  const double det = cross2(p, q);
  if (std::abs(det) <= kOnLineTol * std::abs(far)) {
    return DiskGeodesic::diameter(far);
  }
  // The carrier circle is orthogonal to the unit circle, so
  // 2 c.z = 1 + |z|^2 for every point z on it.
  const double rp = 0.5 * (1.0 + std::norm(p));
  const double rq = 0.5 * (1.0 + std::norm(q));
  const double cx = (rp * q.imag() - rq * p.imag()) / det;
  const double cy = (p.real() * rq - q.real() * rp) / det;
  return DiskGeodesic::arc(Complex(cx, cy));
}

std::optional<DiskPoint> intersect(const DiskGeodesic& g1, const DiskGeodesic& g2) {
  if (g1.same_as(g2)) throw DegenerateError("geodesics are identical");
  const auto [a1, b1] = g1.ideal_endpoints();
  const auto [a2, b2] = g2.ideal_endpoints();
  // Two geodesics cross inside the disk iff their ideal endpoints
  // interleave on the circle, i.e. the chords a1b1 and a2b2 cross.
  const double s1 = cross2(b1 - a1, a2 - a1);
  const double s2 = cross2(b1 - a1, b2 - a1);
  const double s3 = cross2(b2 - a2, a1 - a2);
  const double s4 = cross2(b2 - a2, b1 - a2);
  if (!(s1 * s2 < 0.0 && s3 * s4 < 0.0)) return std::nullopt;

  using Kind = DiskGeodesic::Kind;
  if (g1.kind() == Kind::kDiameter && g2.kind() == Kind::kDiameter) {
    return DiskPoint(0.0, 0.0);
  }
  Complex u;
  Complex c;
  if (g1.kind() == Kind::kDiameter) {
    u = g1.direction();
    c = g2.center();
  } else if (g2.kind() == Kind::kDiameter) {
    u = g2.direction();
    c = g1.center();
  } else {
    // Both carriers are orthogonal to the unit circle, so their radical
    // axis passes through the origin, perpendicular to c1 - c2.
    const Complex d = g1.center() - g2.center();
    u = kI * d / std::abs(d);
    c = g1.center();
  }
  return DiskPoint(ray_hits_orthogonal_circle(u, c) * u);
}

void validate(const DiskTriangle& t) {
  if (distance(t.a, t.b) <= kOnLineTol || distance(t.b, t.c) <= kOnLineTol ||
      distance(t.c, t.a) <= kOnLineTol) {
    throw DegenerateError("triangle has coincident vertices");
  }
  if (distance_to_geodesic(geodesic_through(t.a, t.b), t.c) <= 1e-12) {
    throw DegenerateError("triangle vertices lie on one geodesic");
  }
}

std::array<double, 3> triangle_angles(const DiskTriangle& t) {
  validate(t);
  const Complex a = t.a.z();
  const Complex b = t.b.z();
  const Complex c = t.c.z();
  return {angle_at(a, b, c), angle_at(b, c, a), angle_at(c, a, b)};
}

double area_numeric(const DiskTriangle& t, double rel_tol) {
  validate(t);
  const Complex b = mobius_to_origin(t.a.z(), t.b.z());
  const Complex c = mobius_to_origin(t.a.z(), t.c.z());
  const DiskGeodesic far_side = geodesic_through(DiskPoint(b), DiskPoint(c));
  if (far_side.kind() == DiskGeodesic::Kind::kDiameter) {
    throw DegenerateError("triangle vertices lie on one geodesic");
  }
  const Complex base = b / std::abs(b);
  const double sweep = std::arg(c / b);
  const Complex center = far_side.center();
  // Radial integral of 4 rho / (1 - rho^2)^2 from 0 to R is 2 R^2 / (1 - R^2).
  auto fan = [&](double theta) {
    const Complex u = base * std::polar(1.0, theta);
    const double r = ray_hits_orthogonal_circle(u, center);
    return 2.0 * r * r / ((1.0 - r) * (1.0 + r));
  };
  const double fa = fan(0.0);
  const double fm = fan(0.5 * sweep);
  const double fb = fan(sweep);
  const double coarse = sweep / 6.0 * (fa + 4.0 * fm + fb);
  const double tol = rel_tol * std::max(std::abs(coarse), 1e-300);
  return std::abs(adaptive_simpson(fan, {0.0, sweep, fa, fm, fb, coarse}, tol, 0));
}

HyperbolicCircle hyperbolic_circle(const DiskPoint& center, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("hyperbolic radius must be positive and finite");
  }
  const double s = std::tanh(0.5 * r);
  const double d = std::abs(center.z());
  // The diameter of the rendered circle along the center's direction maps
  // from [-s, s] on the real axis.
  const double outer = (d + s) / (1.0 + d * s);
  const double inner = (d - s) / (1.0 - d * s);
  if (!(outer < 1.0 - kBoundaryMargin)) {
    throw DomainError("circle of radius " + std::to_string(r) +
                      " about this center does not fit inside the disk");
  }
  const Complex dir = d > 0.0 ? center.z() / d : Complex(1.0, 0.0);
  return HyperbolicCircle{center, r, 0.5 * (outer + inner) * dir, 0.5 * (outer - inner)};
}

std::vector<DiskGeodesic> parallels_through(const DiskGeodesic& g, const DiskPoint& p,
                                            int k) {
  if (k < 1) throw DomainError("parallel count must be at least 1");
  if (distance_to_geodesic(g, p) <= 1e-6) {
    throw DegenerateError("point lies on the line; no parallels to construct");
  }
  const auto [a, b] = g.ideal_endpoints();
  const double phi_a = std::arg(mobius_to_origin(p.z(), a));
  const double phi_b = std::arg(mobius_to_origin(p.z(), b));
  double span = std::fmod(phi_b - phi_a + 4.0 * kPi, 2.0 * kPi);
  double start = phi_a;
  if (span < kPi) {
    start = phi_b;
    span = 2.0 * kPi - span;
  }
  // Directions psi in (start, start + span - pi) keep both psi and psi + pi
  // inside the long arc.
  const double window = span - kPi;
  const double step = window / (k + 1);
  if (!(step > 1e-9)) {
    throw DomainError("too many parallels requested for the available angular window");
  }
  std::vector<DiskGeodesic> out;
  out.reserve(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) {
    const Complex xi = std::polar(1.0, start + step * j);
    out.push_back(DiskGeodesic::from_ideal_points(mobius_from_origin(p.z(), xi),
                                                  mobius_from_origin(p.z(), -xi)));
  }
  return out;
}

}  // namespace curvlab::disk
