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

#include "curvlab/net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "curvlab/error.hpp"

namespace curvlab::tiling {

namespace {

constexpr double kPi = std::numbers::pi;

Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

Point2 rotate(Point2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Regular n-gon with corner `at` = a and corner `at + 1` = b, lying to the
// left of a -> b.
std::vector<Point2> regular_on_edge(int n, int at, Point2 a, Point2 b, double edge) {
  const Point2 ab = b - a;
  const double len = std::hypot(ab.x, ab.y);
  const Point2 d{ab.x / len, ab.y / len};
  const Point2 left{-d.y, d.x};
  const double apothem = 0.5 * edge / std::tan(kPi / n);
  const Point2 c = a + (0.5 * edge) * d + apothem * left;
  std::vector<Point2> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int step = ((i - at) % n + n) % n;
    out[static_cast<size_t>(i)] = c + rotate(a - c, 2.0 * kPi * step / n);
  }
  out[static_cast<size_t>(at)] = a;
  out[static_cast<size_t>((at + 1) % n)] = b;
  return out;
}

std::vector<Point2> regular_at_origin(int n, double edge) {
  const double r = 0.5 * edge / std::sin(kPi / n);
  const double start = -0.5 * kPi - kPi / n;
  std::vector<Point2> out;
  for (int i = 0; i < n; ++i) {
    const double t = start + 2.0 * kPi * i / n;
    out.push_back({r * std::cos(t), r * std::sin(t)});
  }
  // Re-place on the bottom edge so every polygon comes from the same
  // construction.
  return regular_on_edge(n, 0, out[0], out[0] + Point2{edge, 0.0}, edge);
}

struct Box {
  double x0, y0, x1, y1;
};

Box bounds(const std::vector<Point2>& pts) {
  Box b{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
        std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
  for (const Point2& p : pts) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

// Edge index of half-edge h within its face's cycle.
int edge_index(const TilingPatch& patch, int face, int h) {
  const std::vector<int> hs = patch.face_half_edges(face);
  return static_cast<int>(std::find(hs.begin(), hs.end(), h) - hs.begin());
}

}  // namespace

int Net::fold_edge_count() const {
  int n = 0;
  for (const PlacedFace& f : faces) {
    n += static_cast<int>(std::count(f.edge_class.begin(), f.edge_class.end(), EdgeClass::kFold));
  }
  return n / 2;
}

bool interiors_overlap(std::span<const Point2> a, std::span<const Point2> b, double tol) {
  auto separated_on_edges = [tol](std::span<const Point2> p, std::span<const Point2> q) {
    for (size_t i = 0; i < p.size(); ++i) {
      const Point2 e = p[(i + 1) % p.size()] - p[i];
      const double len = std::hypot(e.x, e.y);
      const Point2 axis{-e.y / len, e.x / len};
      double pmin = std::numeric_limits<double>::max();
      double pmax = std::numeric_limits<double>::lowest();
      double qmin = pmin;
      double qmax = pmax;
      for (const Point2& v : p) {
        const double t = v.x * axis.x + v.y * axis.y;
        pmin = std::min(pmin, t);
        pmax = std::max(pmax, t);
      }
      for (const Point2& v : q) {
        const double t = v.x * axis.x + v.y * axis.y;
        qmin = std::min(qmin, t);
        qmax = std::max(qmax, t);
      }
      if (std::min(pmax, qmax) - std::max(pmin, qmin) <= tol) return true;
    }
    return false;
  };
  return !separated_on_edges(a, b) && !separated_on_edges(b, a);
}

Net unfold_net(const TilingPatch& patch, double edge_mm, NetStrategy strategy,
               double tab_depth_mm) {
  if (!(edge_mm > 0.0) || !std::isfinite(edge_mm)) {
    throw DomainError("edge length must be positive, got " + std::to_string(edge_mm));
  }
  if (!(tab_depth_mm > 0.0)) throw DomainError("tab depth must be positive");
  if (patch.face_count() < 1) throw DomainError("patch has no faces");

  const auto& hes = patch.half_edges();
  const auto& faces = patch.faces();
  const size_t nf = faces.size();

  Net net;
  net.edge_mm = edge_mm;
  net.tab_depth_mm = tab_depth_mm;
  net.strategy = strategy;
  net.faces.resize(nf);
  std::vector<char> placed(nf, 0);

  auto place_root = [&](int f) {
    PlacedFace& pf = net.faces[static_cast<size_t>(f)];
    pf.face = f;
    pf.corners = regular_at_origin(faces[static_cast<size_t>(f)].sides, edge_mm);
    placed[static_cast<size_t>(f)] = 1;
  };
  // Attaches the neighbour across edge i of `f`, if not yet placed.
  auto attach = [&](int f, int i, int h) -> int {
    const int g = hes[static_cast<size_t>(hes[static_cast<size_t>(h)].twin)].face;
    if (g < 0 || placed[static_cast<size_t>(g)]) return -1;
    const PlacedFace& pf = net.faces[static_cast<size_t>(f)];
    const int n = static_cast<int>(pf.corners.size());
    const int j = edge_index(patch, g, hes[static_cast<size_t>(h)].twin);
    PlacedFace& pg = net.faces[static_cast<size_t>(g)];
    pg.face = g;
    pg.parent = f;
    pg.corners = regular_on_edge(faces[static_cast<size_t>(g)].sides, j,
                                 pf.corners[static_cast<size_t>((i + 1) % n)],
                                 pf.corners[static_cast<size_t>(i)], edge_mm);
    placed[static_cast<size_t>(g)] = 1;
    return g;
  };

  // Disconnected patches do not occur, but every component gets a root.
  for (size_t root = 0; root < nf; ++root) {
    if (placed[root]) continue;
    place_root(static_cast<int>(root));
    if (strategy == NetStrategy::kBfsTree) {
      std::queue<int> q;
      q.push(static_cast<int>(root));
      while (!q.empty()) {
        const int f = q.front();
        q.pop();
        const std::vector<int> hs = patch.face_half_edges(f);
        for (size_t i = 0; i < hs.size(); ++i) {
          const int g = attach(f, static_cast<int>(i), hs[i]);
          if (g >= 0) q.push(g);
        }
      }
    } else {
      std::vector<std::pair<int, size_t>> stack{{static_cast<int>(root), 0}};
      while (!stack.empty()) {
        auto& [f, i] = stack.back();
        const std::vector<int> hs = patch.face_half_edges(f);
        if (i >= hs.size()) {
          stack.pop_back();
          continue;
        }
        const int g = attach(f, static_cast<int>(i), hs[i]);
        ++i;
        if (g >= 0) stack.emplace_back(g, 0);
      }
    }
  }

  for (size_t f = 0; f < nf; ++f) {
    PlacedFace& pf = net.faces[f];
    const std::vector<int> hs = patch.face_half_edges(static_cast<int>(f));
    pf.edge_class.assign(hs.size(), EdgeClass::kCut);
    pf.tab_id.assign(hs.size(), -1);
    for (size_t i = 0; i < hs.size(); ++i) {
      const int g = hes[static_cast<size_t>(hes[static_cast<size_t>(hs[i])].twin)].face;
      if (g < 0) continue;
      const bool tree = pf.parent == g || net.faces[static_cast<size_t>(g)].parent == static_cast<int>(f);
      pf.edge_class[i] = tree ? EdgeClass::kFold : EdgeClass::kGlueTab;
    }
  }
  // Tree edges between a parent and child that are adjacent along more
  // than one edge would be double counted; the placement only used one.
  for (size_t f = 0; f < nf; ++f) {
    PlacedFace& pf = net.faces[f];
    if (pf.parent < 0) continue;
    const std::vector<int> hs = patch.face_half_edges(static_cast<int>(f));
    bool used = false;
    for (size_t i = 0; i < hs.size(); ++i) {
      const int g = hes[static_cast<size_t>(hes[static_cast<size_t>(hs[i])].twin)].face;
      if (g != pf.parent) continue;
      if (used) {
        pf.edge_class[i] = EdgeClass::kGlueTab;
        const int j = edge_index(patch, g, hes[static_cast<size_t>(hs[i])].twin);
        net.faces[static_cast<size_t>(g)].edge_class[static_cast<size_t>(j)] = EdgeClass::kGlueTab;
      }
      used = true;
    }
  }

  for (size_t f = 0; f < nf; ++f) {
    PlacedFace& pf = net.faces[f];
    const std::vector<int> hs = patch.face_half_edges(static_cast<int>(f));
    const int n = static_cast<int>(hs.size());
    for (int i = 0; i < n; ++i) {
      if (pf.edge_class[static_cast<size_t>(i)] != EdgeClass::kGlueTab) continue;
      const int twin = hes[static_cast<size_t>(hs[static_cast<size_t>(i)])].twin;
      const int g = hes[static_cast<size_t>(twin)].face;
      if (g < static_cast<int>(f)) continue;
      GlueTab tab;
      tab.id = static_cast<int>(net.tabs.size());
      tab.face = static_cast<int>(f);
      tab.edge = i;
      tab.partner_face = g;
      tab.partner_edge = edge_index(patch, g, twin);
      const Point2 a = pf.corners[static_cast<size_t>(i)];
      const Point2 b = pf.corners[static_cast<size_t>((i + 1) % n)];
      const Point2 d = (1.0 / edge_mm) * (b - a);
      const Point2 out{d.y, -d.x};
      const double inset = std::min(tab_depth_mm, 0.45 * edge_mm);
      tab.outline = {a, b, b + tab_depth_mm * out - inset * d, a + tab_depth_mm * out + inset * d};
      pf.tab_id[static_cast<size_t>(i)] = tab.id;
      net.faces[static_cast<size_t>(g)].tab_id[static_cast<size_t>(tab.partner_edge)] = tab.id;
      net.tabs.push_back(tab);
    }
  }

  std::vector<Box> boxes;
  boxes.reserve(nf);
  for (const PlacedFace& pf : net.faces) boxes.push_back(bounds(pf.corners));
  for (size_t i = 0; i < nf; ++i) {
    for (size_t j = i + 1; j < nf; ++j) {
      const Box& a = boxes[i];
      const Box& b = boxes[j];
      if (a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0) continue;
      if (interiors_overlap(net.faces[i].corners, net.faces[j].corners)) {
        net.overlaps.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return net;
}

}  // namespace curvlab::tiling
