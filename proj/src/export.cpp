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

#include "curvlab/export.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "curvlab/curvature.hpp"
#include "curvlab/svg.hpp"

namespace curvlab::io {

using nlohmann::json;
using tiling::EdgeClass;
using tiling::Point2;

namespace {

constexpr double kPi = std::numbers::pi;

std::string stroke(double width, const std::string& extra = "") {
  std::string css = "fill: none; stroke: #000; stroke-width: " + svg::fixed(width) + ";";
  if (!extra.empty()) css += " " + extra;
  return css;
}

const char* edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::kFold:
      return "fold";
    case EdgeClass::kGlueTab:
      return "glue-tab";
    case EdgeClass::kCut:
      return "cut";
  }
  return "?";
}

// Maps disk coordinates to page millimetres, y up to y down.
struct DiskFrame {
  double cx;
  double cy;
  double r;

  explicit DiskFrame(const RenderConfig& cfg)
      : cx(0.5 * cfg.page_width_mm),
        cy(0.5 * cfg.page_height_mm),
        r(0.5 * std::min(cfg.page_width_mm, cfg.page_height_mm) - cfg.margin_mm) {}

  double x(disk::Complex z) const { return cx + r * z.real(); }
  double y(disk::Complex z) const { return cy - r * z.imag(); }
  std::string at(disk::Complex z) const { return svg::fixed(x(z)) + " " + svg::fixed(y(z)); }
};

svg::Document disk_document(const RenderConfig& cfg) {
  svg::Document doc(cfg.page_width_mm, cfg.page_height_mm);
  doc.declare_class("boundary", stroke(cfg.stroke_cut_mm));
  doc.declare_class("baseline", stroke(cfg.stroke_geodesic_mm, "stroke-dasharray: 4 2;"));
  doc.declare_class("geodesic", stroke(cfg.stroke_geodesic_mm));
  doc.declare_class("circle", stroke(cfg.stroke_circle_mm));
  doc.declare_class("point", "fill: #000; stroke: none;");
  const DiskFrame f(cfg);
  doc.circle("boundary", f.cx, f.cy, f.r);
  return doc;
}

// Path data for the piece of geodesic g between p and q (either may be an
// ideal point).
std::string geodesic_path(const disk::DiskGeodesic& g, disk::Complex p, disk::Complex q,
                          const DiskFrame& f) {
  if (g.kind() == disk::DiskGeodesic::Kind::kDiameter) {
    return "M " + f.at(p) + " L " + f.at(q);
  }
  const disk::Complex a = p - g.center();
  const disk::Complex b = q - g.center();
  // The in-disk piece of an orthogonal circle is less than a half circle,
  // so the minor arc is always the right one. The y flip keeps visual
  // orientation, and SVG sweep 1 is visually clockwise.
  const int sweep = a.real() * b.imag() - a.imag() * b.real() < 0.0 ? 1 : 0;
  const std::string rr = svg::fixed(g.radius() * f.r);
  return "M " + f.at(p) + " A " + rr + " " + rr + " 0 0 " + std::to_string(sweep) + " " + f.at(q);
}

std::string full_geodesic_path(const disk::DiskGeodesic& g, const DiskFrame& f) {
  const auto [a, b] = g.ideal_endpoints();
  return geodesic_path(g, a, b, f);
}

std::string point_text(disk::Complex z) {
  return svg::fixed(z.real()) + "," + svg::fixed(z.imag());
}

}  // namespace

double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

std::string strategy_name(tiling::NetStrategy s) {
  return s == tiling::NetStrategy::kBfsTree ? "bfs" : "dfs";
}

json tiling_report(const tiling::TilingPatch& patch, const tiling::Net& net) {
  const auto& config = patch.config();
  json j;
  j["config"] = config.str();
  j["central_polygon"] = config.gons().front();
  j["rings_grown"] = patch.rings();
  j["closed"] = patch.closed();
  j["vertex_angle_sum"] = tiling::vertex_angle_sum(config).str();
  j["vertex_angle_sum_mixed"] = tiling::vertex_angle_sum(config).mixed();
  j["angle_defect"] = tiling::angle_defect(config).str();
  j["classification"] = to_string(tiling::classify_vertex(config));
  j["faces"] = patch.face_count();
  j["vertices"] = patch.vertex_count();
  j["edges"] = patch.edge_count();
  j["faces_per_ring"] = patch.ring_sizes();
  std::map<std::string, int> by_sides;
  for (const auto& f : patch.faces()) ++by_sides[std::to_string(f.sides)];
  j["faces_by_sides"] = by_sides;
  if (patch.closed()) {
    j["euler_characteristic"] = patch.vertex_count() - patch.edge_count() + patch.face_count();
    j["total_defect"] = tiling::total_defect(patch).str();
  } else {
    j["euler_characteristic"] = nullptr;
    j["total_defect"] = nullptr;
  }

  json verts = json::array();
  for (int v = 0; v < patch.vertex_count(); ++v) {
    std::vector<int> faces;
    for (int f : patch.vertex_faces(v)) {
      if (f >= 0) faces.push_back(f);
    }
    verts.push_back({{"id", v},
                     {"faces", faces},
                     {"complete", patch.complete(v)},
                     {"angle_sum", patch.vertex_angle_sum(v).str()}});
  }
  j["vertex_list"] = verts;

  json jn;
  jn["edge_mm"] = net.edge_mm;
  jn["tab_depth_mm"] = net.tab_depth_mm;
  jn["strategy"] = strategy_name(net.strategy);
  json faces = json::array();
  for (const auto& pf : net.faces) {
    json corners = json::array();
    for (const Point2& p : pf.corners) corners.push_back({round6(p.x), round6(p.y)});
    json classes = json::array();
    for (EdgeClass c : pf.edge_class) classes.push_back(edge_class_name(c));
    const auto& face = patch.faces()[static_cast<size_t>(pf.face)];
    faces.push_back({{"id", pf.face},
                     {"sides", face.sides},
                     {"ring", face.ring},
                     {"parent", pf.parent},
                     {"corners_mm", corners},
                     {"edge_classes", classes},
                     {"tab_ids", pf.tab_id}});
  }
  jn["faces"] = faces;
  json tabs = json::array();
  for (const auto& t : net.tabs) {
    tabs.push_back({{"id", t.id},
                    {"face", t.face},
                    {"edge", t.edge},
                    {"partner_face", t.partner_face},
                    {"partner_edge", t.partner_edge}});
  }
  jn["tabs"] = tabs;
  jn["fold_edges"] = net.fold_edge_count();
  json overlaps = json::array();
  for (const auto& [a, b] : net.overlaps) overlaps.push_back({a, b});
  jn["overlaps"] = overlaps;
  jn["overlap_count"] = net.overlaps.size();
  j["net"] = jn;
  return j;
}

std::string net_svg(const tiling::Net& net, const tiling::TilingPatch& patch,
                    const RenderConfig& cfg) {
  double x0 = std::numeric_limits<double>::max();
  double y0 = x0;
  double x1 = std::numeric_limits<double>::lowest();
  double y1 = x1;
  auto grow = [&](Point2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  };
  for (const auto& pf : net.faces) std::for_each(pf.corners.begin(), pf.corners.end(), grow);
  for (const auto& t : net.tabs) std::for_each(t.outline.begin(), t.outline.end(), grow);
  const double m = cfg.margin_mm;
  const double width = std::max(cfg.page_width_mm, x1 - x0 + 2.0 * m);
  const double height = std::max(cfg.page_height_mm, y1 - y0 + 2.0 * m);
  auto map = [&](Point2 p) { return std::pair{p.x - x0 + m, y1 - p.y + m}; };

  svg::Document doc(width, height);
  doc.set_title("curvlab tiling net " + patch.config().str() + " rings=" +
                std::to_string(patch.rings()) + " edge_mm=" + svg::fixed(net.edge_mm) +
                " strategy=" + strategy_name(net.strategy));
  doc.add_param("config", patch.config().str());
  doc.add_param("rings", std::to_string(patch.rings()));
  doc.add_param("edge_mm", svg::fixed(net.edge_mm));
  doc.add_param("strategy", strategy_name(net.strategy));
  doc.add_param("tab_depth_mm", svg::fixed(net.tab_depth_mm));
  doc.declare_class("cut", stroke(cfg.stroke_cut_mm));
  doc.declare_class("fold", stroke(cfg.stroke_fold_mm, "stroke-dasharray: 2 1;"));
  doc.declare_class("tab", stroke(cfg.stroke_tab_mm));
  doc.declare_class("overlap", "fill: #f4a6a6; stroke: none;");
  doc.declare_class("label", "font: 3px sans-serif; fill: #000; stroke: none;");

  std::vector<char> overlapping(net.faces.size(), 0);
  for (const auto& [a, b] : net.overlaps) {
    overlapping[static_cast<size_t>(a)] = 1;
    overlapping[static_cast<size_t>(b)] = 1;
  }
  for (size_t f = 0; f < net.faces.size(); ++f) {
    if (!overlapping[f]) continue;
    std::vector<std::pair<double, double>> pts;
    for (const Point2& p : net.faces[f].corners) pts.push_back(map(p));
    doc.polygon("overlap", pts, "overlap-" + std::to_string(f));
  }
  for (const auto& t : net.tabs) {
    std::vector<std::pair<double, double>> pts{map(t.outline[1]), map(t.outline[2]),
                                               map(t.outline[3]), map(t.outline[0])};
    doc.polyline("tab", pts);
  }
  for (const auto& pf : net.faces) {
    const size_t n = pf.corners.size();
    for (size_t i = 0; i < n; ++i) {
      const auto [ax, ay] = map(pf.corners[i]);
      const auto [bx, by] = map(pf.corners[(i + 1) % n]);
      switch (pf.edge_class[i]) {
        case EdgeClass::kFold:
          // Drawn once, by the parent.
          if (pf.parent >= 0) {
            const auto& hs = patch.half_edges();
            const int h = patch.face_half_edges(pf.face)[i];
            if (hs[static_cast<size_t>(hs[static_cast<size_t>(h)].twin)].face == pf.parent) break;
          }
          doc.line("fold", ax, ay, bx, by);
          break;
        case EdgeClass::kGlueTab: {
          const bool holds_tab = net.tabs[static_cast<size_t>(pf.tab_id[i])].face == pf.face;
          doc.line(holds_tab ? "fold" : "cut", ax, ay, bx, by);
          break;
        }
        case EdgeClass::kCut:
          doc.line("cut", ax, ay, bx, by);
          break;
      }
    }
  }
  for (const auto& pf : net.faces) {
    const size_t n = pf.corners.size();
    double cx = 0.0;
    double cy = 0.0;
    for (const Point2& p : pf.corners) {
      cx += p.x / static_cast<double>(n);
      cy += p.y / static_cast<double>(n);
    }
    for (size_t i = 0; i < n; ++i) {
      if (pf.tab_id[i] < 0) continue;
      const Point2 a = pf.corners[i];
      const Point2 b = pf.corners[(i + 1) % n];
      // Label a fifth of the way from the edge midpoint to the centre.
      const Point2 at{0.5 * (a.x + b.x) * 0.8 + 0.2 * cx, 0.5 * (a.y + b.y) * 0.8 + 0.2 * cy};
      const auto [lx, ly] = map(at);
      doc.text("label", lx, ly, "T" + std::to_string(pf.tab_id[i]));
    }
  }
  return doc.str();
}

std::string template_svg(const fold::AnnulusTemplate& t, const FoldRequest& req,
                         const RenderConfig& cfg) {
  const double m = cfg.margin_mm;
  const double width = std::max(cfg.page_width_mm, 2.0 * t.r_out() + 2.0 * m);
  const double height = std::max(cfg.page_height_mm, 2.0 * t.r_out() + 2.0 * m);
  svg::Document doc(width, height);
  doc.set_title("curvlab curved-folding annulus");
  doc.add_param("inner_mm", svg::fixed(t.r_in()));
  doc.add_param("outer_mm", svg::fixed(t.r_out()));
  doc.add_param("creases", std::to_string(t.creases().size()));
  doc.add_param("spacing", req.spacing_text);
  doc.add_param("fold_angle_deg", svg::fixed(req.fold_angle_deg));
  doc.declare_class("cut", stroke(cfg.stroke_cut_mm));
  doc.declare_class("mountain", stroke(cfg.stroke_mountain_mm, "stroke-dasharray: 4 2;"));
  doc.declare_class("valley", stroke(cfg.stroke_valley_mm, "stroke-dasharray: 1 2 4 2;"));
  const double cx = 0.5 * width;
  const double cy = 0.5 * height;
  doc.circle("cut", cx, cy, t.r_out());
  doc.circle("cut", cx, cy, t.r_in());
  for (const auto& c : t.creases()) doc.circle(fold::to_string(c.kind), cx, cy, c.radius_mm);
  return doc.str();
}

json fold_report(const fold::AnnulusTemplate& t, const fold::FoldProfile& profile,
                 const FoldRequest& req) {
  json j;
  json creases = json::array();
  const auto lengths = fold::crease_lengths(t);
  for (size_t i = 0; i < t.creases().size(); ++i) {
    creases.push_back({{"radius_mm", round6(t.creases()[i].radius_mm)},
                       {"kind", fold::to_string(t.creases()[i].kind)},
                       {"length_mm", round6(lengths[i])}});
  }
  j["template"] = {{"inner_mm", t.r_in()},
                   {"outer_mm", t.r_out()},
                   {"spacing", req.spacing_text},
                   {"creases", creases}};
  j["fold_angle_deg"] = req.fold_angle_deg;
  const double surplus = fold::apex_angle_surplus(profile.fold_angle());
  j["apex_surplus_rad"] = round6(surplus);
  j["apex_surplus_deg"] = round6(surplus * 180.0 / kPi);

  json material = json::array();
  json effective = json::array();
  json circumference = json::array();
  json estimate = json::array();
  const auto& rec = profile.records();
  std::vector<double> k;
  if (rec.size() >= 3) k = fold::estimate_effective_curvature(profile);
  for (size_t i = 0; i < rec.size(); ++i) {
    material.push_back(round6(rec[i].material_radius_mm));
    effective.push_back(round6(rec[i].effective_radius_mm));
    circumference.push_back(round6(rec[i].circumference_mm));
    if (i == 0 || i + 1 >= rec.size()) {
      estimate.push_back(nullptr);
    } else {
      // Estimates are differences of nearly equal slopes; anything below
      // 1e-12 is rounding noise in a model whose exact value is zero.
      const double v = k[i - 1];
      estimate.push_back(std::abs(v) < 1e-12 ? 0.0 : v);
    }
  }
  j["profile"] = {{"material_radius", material},
                  {"effective_radius", effective},
                  {"circumference", circumference},
                  {"K_estimate", estimate}};
  return j;
}

json crochet_report(const crochet::CrochetSpec& spec, const crochet::CrochetSchedule& schedule) {
  json j;
  j["foundation"] = spec.foundation;
  j["increase_every"] = spec.increase_every;
  j["rows"] = spec.rows;
  j["gauge"] = {{"stitch_width_mm", spec.gauge.stitch_width_mm},
                {"row_height_mm", spec.gauge.row_height_mm}};
  j["counts"] = schedule.counts;
  j["increases"] = schedule.increases;
  j["estimated_K_per_mm2"] = crochet::estimate_curvature(spec).value();
  j["instructions"] = crochet::instructions(schedule);
  return j;
}

std::string disk_triangle_svg(const disk::DiskTriangle& t, const RenderConfig& cfg) {
  svg::Document doc = disk_document(cfg);
  const DiskFrame f(cfg);
  doc.set_title("curvlab disk triangle points=" + point_text(t.a.z()) + " " +
                point_text(t.b.z()) + " " + point_text(t.c.z()));
  const std::array<disk::Complex, 3> v{t.a.z(), t.b.z(), t.c.z()};
  for (size_t i = 0; i < 3; ++i) {
    const disk::Complex p = v[i];
    const disk::Complex q = v[(i + 1) % 3];
    const auto g = disk::geodesic_through(disk::DiskPoint(p), disk::DiskPoint(q));
    doc.path("geodesic", geodesic_path(g, p, q, f));
  }
  for (const auto& z : v) doc.circle("point", f.x(z), f.y(z), 0.8);
  return doc.str();
}

std::string disk_parallels_svg(const disk::DiskGeodesic& g, const disk::DiskPoint& p,
                               const std::vector<disk::DiskGeodesic>& parallels,
                               const std::string& title, const RenderConfig& cfg) {
  svg::Document doc = disk_document(cfg);
  const DiskFrame f(cfg);
  doc.set_title(title);
  doc.path("baseline", full_geodesic_path(g, f));
  for (const auto& q : parallels) doc.path("geodesic", full_geodesic_path(q, f));
  doc.circle("point", f.x(p.z()), f.y(p.z()), 0.8);
  return doc.str();
}

std::string disk_circle_svg(const disk::HyperbolicCircle& c, const RenderConfig& cfg) {
  svg::Document doc = disk_document(cfg);
  const DiskFrame f(cfg);
  doc.set_title("curvlab disk circle center=" + point_text(c.center.z()) +
                " radius=" + svg::fixed(c.radius));
  doc.circle("circle", f.x(c.euclidean_center), f.y(c.euclidean_center),
             c.euclidean_radius * f.r);
  doc.circle("point", f.x(c.center.z()), f.y(c.center.z()), 0.8);
  return doc.str();
}

std::string sphere_triangle_svg(const sphere::SphericalTriangle& t, const std::string& title,
                                const RenderConfig& cfg) {
  // Orthographic view down the direction of the vertex centroid.
  const Vec3 sum = t.a.v() + t.b.v() + t.c.v();
  const Vec3 view = sphere::SpherePoint(norm(sum) > 1e-9 ? sum : t.a.v()).v();
  const Vec3 helper = std::abs(view.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  const Vec3 e1 = sphere::SpherePoint(cross(helper, view)).v();
  const Vec3 e2 = cross(view, e1);
  const double cx = 0.5 * cfg.page_width_mm;
  const double cy = 0.5 * cfg.page_height_mm;
  const double r = 0.5 * std::min(cfg.page_width_mm, cfg.page_height_mm) - cfg.margin_mm;
  auto project = [&](const Vec3& v) { return std::pair{cx + r * dot(v, e1), cy - r * dot(v, e2)}; };

  svg::Document doc(cfg.page_width_mm, cfg.page_height_mm);
  doc.set_title(title);
  doc.declare_class("boundary", stroke(cfg.stroke_cut_mm));
  doc.declare_class("geodesic", stroke(cfg.stroke_geodesic_mm));
  doc.declare_class("point", "fill: #000; stroke: none;");
  doc.circle("boundary", cx, cy, r);
  const std::array<const sphere::SpherePoint*, 3> v{&t.a, &t.b, &t.c};
  for (size_t i = 0; i < 3; ++i) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : sphere::sample_geodesic(*v[i], *v[(i + 1) % 3], 65)) {
      pts.push_back(project(s.v()));
    }
    doc.polyline("geodesic", pts);
  }
  for (const auto* p : v) {
    const auto [x, y] = project(p->v());
    doc.circle("point", x, y, 0.8);
  }
  return doc.str();
}

}  // namespace curvlab::io
