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

#include "curvlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>

#include "curvlab/crochet.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/disk.hpp"
#include "curvlab/error.hpp"
#include "curvlab/export.hpp"
#include "curvlab/fold.hpp"
#include "curvlab/net.hpp"
#include "curvlab/render_config.hpp"
#include "curvlab/sphere.hpp"
#include "curvlab/svg.hpp"
#include "curvlab/tiling.hpp"

namespace curvlab {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = 180.0 / kPi;

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  std::string s(buf);
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::vector<double> parse_numbers(const std::string& text, size_t count, const std::string& what) {
  std::vector<double> out;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? comma : comma - start);
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size() || !std::isfinite(v)) {
      throw DomainError(what + " '" + text + "' is not a comma-separated list of numbers");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != count) {
    throw DomainError(what + " '" + text + "' needs " + std::to_string(count) + " numbers");
  }
  return out;
}

disk::Complex parse_xy(const std::string& text) {
  const auto v = parse_numbers(text, 2, "point");
  return {v[0], v[1]};
}

// "lat,lon" in degrees, or "x,y,z".
sphere::SpherePoint parse_sphere_point(const std::string& text) {
  const size_t commas = static_cast<size_t>(std::count(text.begin(), text.end(), ','));
  if (commas == 2) {
    const auto v = parse_numbers(text, 3, "sphere point");
    return sphere::SpherePoint(Vec3{v[0], v[1], v[2]});
  }
  const auto v = parse_numbers(text, 2, "sphere point");
  if (std::abs(v[0]) > 90.0) throw DomainError("latitude must lie in [-90, 90]");
  return sphere::SpherePoint::from_lat_lon(v[0], v[1]);
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << body;
  if (!f.flush()) throw Error("failed writing " + path);
}

// Writes to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << body;
  } else {
    write_file(path, body);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

struct Globals {
  std::string config_file;
  std::vector<std::string> settings;

  RenderConfig resolve() const {
    RenderConfig cfg = resolve_config(
        config_file.empty() ? std::nullopt : std::optional<std::filesystem::path>(config_file));
    for (const std::string& s : settings) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw DomainError("--set expects key=value, got '" + s + "'");
      cfg.set(s.substr(0, eq), s.substr(eq + 1));
    }
    cfg.validate();
    return cfg;
  }
};

std::string lat_lon_text(const sphere::SpherePoint& p) {
  const Vec3& v = p.v();
  const double lat = std::asin(std::clamp(v.z, -1.0, 1.0)) * kDeg;
  const double lon = std::atan2(v.y, v.x) * kDeg;
  return fmt("%.6f", lat) + "," + fmt("%.6f", lon);
}

std::string xyz_text(const Vec3& v) {
  return fmt("%.9f", v.x) + "," + fmt("%.9f", v.y) + "," + fmt("%.9f", v.z);
}

// ---- geometry ----

struct GeometryArgs {
  double curvature = 0.0;
  std::optional<double> radius;
  std::optional<double> area;
  bool json = false;
};

void run_geometry(const GeometryArgs& a, std::ostream& out) {
  const Curvature k(a.curvature);
  if (!a.radius && !a.area) throw DomainError("geometry needs --radius and/or --area");
  json j;
  j["curvature"] = k.value();
  j["classification"] = to_string(k.sign());
  std::string text = "curvature K = " + fmt("%.12g", k.value()) + " (" + to_string(k.sign()) + ")\n";
  if (a.radius) {
    const double r = *a.radius;
    const double c = circle_circumference(k, r);
    const double area = circle_area(k, r);
    const char* cmp = k.sign() == CurvatureSign::kNegative   ? ">"
                      : k.sign() == CurvatureSign::kPositive ? "<"
                                                             : "=";
    j["radius"] = r;
    j["circumference"] = c;
    j["flat_circumference"] = 2.0 * kPi * r;
    j["circumference_vs_flat"] = cmp;
    j["area"] = area;
    j["flat_area"] = kPi * r * r;
    text += "radius r = " + fmt("%.12g", r) + "\n";
    text += "circumference = " + fmt("%.9f", c) + " (" + cmp + " 2πr = " +
            fmt("%.9f", 2.0 * kPi * r) + ")\n";
    text += "area = " + fmt("%.9f", area) + " (" + cmp + " πr² = " + fmt("%.9f", kPi * r * r) +
            ")\n";
  }
  if (a.area) {
    const AngleSum s = triangle_angle_sum(k, *a.area);
    const char* cmp = k.sign() == CurvatureSign::kNegative   ? "<"
                      : k.sign() == CurvatureSign::kPositive ? ">"
                                                             : "=";
    j["triangle_area"] = *a.area;
    j["angle_sum_rad"] = s.radians;
    j["angle_sum_deg"] = s.degrees();
    j["angle_sum_vs_flat"] = cmp;
    text += "triangle area A = " + fmt("%.12g", *a.area) + "\n";
    text += "angle sum = " + fmt("%.9f", s.degrees()) + "° = " + fmt("%.12f", s.radians) +
            " rad (" + cmp + " 180°)\n";
  }
  out << (a.json ? dump(j) : text);
}

// ---- disk ----

disk::DiskGeodesic parse_line(const std::vector<std::string>& ends) {
  const disk::Complex a = parse_xy(ends.at(0));
  const disk::Complex b = parse_xy(ends.at(1));
  auto ideal = [](disk::Complex z) { return std::abs(std::abs(z) - 1.0) <= 1e-9; };
  if (ideal(a) && ideal(b)) {
    return disk::DiskGeodesic::from_ideal_points(a / std::abs(a), b / std::abs(b));
  }
  return disk::geodesic_through(disk::DiskPoint(a), disk::DiskPoint(b));
}

std::string point_text(disk::Complex z) {
  return "(" + svg::fixed(z.real()) + "," + svg::fixed(z.imag()) + ")";
}

// ---- fold ----

fold::Spacing parse_spacing(const std::string& text) {
  if (text == "uniform") return fold::Spacing::uniform();
  if (text == "geometric") return fold::Spacing::geometric();
  if (text.starts_with("geometric:")) {
    const auto v = parse_numbers(text.substr(10), 1, "spacing ratio");
    return fold::Spacing::geometric(v[0]);
  }
  throw DomainError("spacing must be uniform, geometric, or geometric:RATIO");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"curvlab: models of curved space for workshops", "curvlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "curvlab 0.1.0");

  Globals globals;
  app.add_option("--config-file", globals.config_file,
                 "Config file of key = value lines (default: $CURVLAB_CONFIG or "
                 "~/.config/curvlab/config)");
  app.add_option("--set", globals.settings, "Override one config value, key=value");

  std::function<void()> action;

  // geometry
  GeometryArgs geo;
  double geo_radius = 0.0;
  double geo_area = 0.0;
  auto* geometry = app.add_subcommand("geometry", "Circle and triangle laws at curvature K");
  geometry->add_option("--curvature", geo.curvature, "Gaussian curvature K")->required();
  auto* geo_r = geometry->add_option("--radius", geo_radius, "Geodesic radius");
  auto* geo_a = geometry->add_option("--area", geo_area, "Geodesic triangle area");
  geometry->add_flag("--json", geo.json, "Emit JSON");
  geometry->callback([&] {
    action = [&] {
      if (*geo_r) geo.radius = geo_radius;
      if (*geo_a) geo.area = geo_area;
      run_geometry(geo, out);
    };
  });

  // disk
  auto* diskc = app.add_subcommand("disk", "Poincare disk figures (SVG)");
  diskc->require_subcommand(1);
  std::string disk_out;
  diskc->add_option("--out", disk_out, "SVG output path")->required();

  std::vector<std::string> tri_points;
  auto* disk_tri = diskc->add_subcommand("triangle", "Geodesic triangle");
  disk_tri->add_option("--points", tri_points, "Three points x,y")->expected(3)->required();
  disk_tri->callback([&] {
    action = [&] {
      const RenderConfig cfg = globals.resolve();
      const disk::DiskTriangle t{disk::DiskPoint(parse_xy(tri_points[0])),
                                 disk::DiskPoint(parse_xy(tri_points[1])),
                                 disk::DiskPoint(parse_xy(tri_points[2]))};
      disk::validate(t);
      const auto ang = disk::triangle_angles(t);
      const double sum = ang[0] + ang[1] + ang[2];
      write_file(disk_out, io::disk_triangle_svg(t, cfg));
      err << "angle sum " << fmt("%.1f", sum * kDeg) << "° < 180°, area " << fmt("%.6f", kPi - sum)
          << "\n";
    };
  });

  std::vector<std::string> par_line;
  std::string par_point;
  int par_count = 3;
  auto* disk_par = diskc->add_subcommand("parallels", "Geodesics through a point missing a line");
  disk_par->add_option("--line", par_line, "Two points x,y on the base geodesic")
      ->expected(2)
      ->required();
  disk_par->add_option("--point", par_point, "Point x,y off the line")->required();
  disk_par->add_option("--count", par_count, "Number of parallels");
  disk_par->callback([&] {
    action = [&] {
      const RenderConfig cfg = globals.resolve();
      const disk::DiskGeodesic g = parse_line(par_line);
      const disk::DiskPoint p(parse_xy(par_point));
      const auto parallels = disk::parallels_through(g, p, par_count);
      const std::string title = "curvlab disk parallels line=" + par_line[0] + " " + par_line[1] +
                                " point=" + par_point + " count=" + std::to_string(par_count);
      write_file(disk_out, io::disk_parallels_svg(g, p, parallels, title, cfg));
      err << parallels.size() << " parallels through " << point_text(p.z())
          << " miss the base line\n";
    };
  });

  std::string circ_center;
  double circ_radius = 1.0;
  auto* disk_circ = diskc->add_subcommand("circle", "Hyperbolic circle");
  disk_circ->add_option("--center", circ_center, "Center x,y")->required();
  disk_circ->add_option("--radius", circ_radius, "Hyperbolic radius")->required();
  disk_circ->callback([&] {
    action = [&] {
      const RenderConfig cfg = globals.resolve();
      const auto c = disk::hyperbolic_circle(disk::DiskPoint(parse_xy(circ_center)), circ_radius);
      write_file(disk_out, io::disk_circle_svg(c, cfg));
      err << "euclidean radius " << fmt("%.6f", c.euclidean_radius) << " of the disk radius\n";
    };
  });

  // tiling
  std::string til_config;
  int til_rings = 1;
  std::optional<double> til_edge;
  std::optional<double> til_tab;
  std::string til_strategy = "bfs";
  std::string til_out;
  std::string til_report;
  auto* tilingc = app.add_subcommand("tiling", "Polygon tiling patch and paper net");
  tilingc->add_option("--config", til_config, "Vertex configuration, e.g. 7,6,6")->required();
  tilingc->add_option("--rings", til_rings, "Rings grown around the centre polygon");
  tilingc->add_option("--edge-mm", til_edge, "Printed edge length in mm");
  tilingc->add_option("--tab-depth", til_tab, "Glue tab depth in mm");
  tilingc->add_option("--strategy", til_strategy, "Spanning tree: bfs or dfs")
      ->check(CLI::IsMember({"bfs", "dfs"}));
  tilingc->add_option("--out", til_out, "Net SVG output path")->required();
  tilingc->add_option("--report", til_report, "JSON report path (default stdout)");
  tilingc->callback([&] {
    action = [&] {
      RenderConfig cfg = globals.resolve();
      if (til_edge) cfg.edge_mm = *til_edge;
      if (til_tab) cfg.tab_depth_mm = *til_tab;
      cfg.validate();
      if (til_rings < 0) throw DomainError("--rings must be non-negative");
      const auto config = tiling::VertexConfig::parse(til_config);
      const auto patch = tiling::generate_patch(config, til_rings);
      const auto strategy =
          til_strategy == "dfs" ? tiling::NetStrategy::kDfsTree : tiling::NetStrategy::kBfsTree;
      const auto net = tiling::unfold_net(patch, cfg.edge_mm, strategy, cfg.tab_depth_mm);
      write_file(til_out, io::net_svg(net, patch, cfg));
      emit(til_report, dump(io::tiling_report(patch, net)), out);
    };
  });

  // fold
  double fold_inner = 0.0;
  double fold_outer = 0.0;
  int fold_creases = 0;
  std::string fold_spacing = "uniform";
  double fold_angle = 0.0;
  std::string fold_out;
  std::string fold_report;
  auto* foldc = app.add_subcommand("fold", "Concentric-crease annulus template");
  foldc->add_option("--inner", fold_inner, "Inner radius in mm")->required();
  foldc->add_option("--outer", fold_outer, "Outer radius in mm")->required();
  foldc->add_option("--creases", fold_creases, "Number of creases")->required();
  foldc->add_option("--spacing", fold_spacing, "uniform, geometric, or geometric:RATIO");
  foldc->add_option("--fold-angle", fold_angle, "Fold angle in degrees");
  foldc->add_option("--out", fold_out, "Template SVG output path")->required();
  foldc->add_option("--report", fold_report, "JSON profile path (default stdout)");
  foldc->callback([&] {
    action = [&] {
      const RenderConfig cfg = globals.resolve();
      const auto spacing = parse_spacing(fold_spacing);
      const auto t = fold::make_annulus_template(fold_inner, fold_outer, fold_creases, spacing);
      const auto profile = fold::effective_profile(t, fold_angle / kDeg);
      const io::FoldRequest req{fold_spacing, fold_angle};
      write_file(fold_out, io::template_svg(t, req, cfg));
      emit(fold_report, dump(io::fold_report(t, profile, req)), out);
    };
  });

  // crochet
  crochet::CrochetSpec spec;
  std::string cro_gauge;
  std::string cro_out;
  std::string cro_json;
  auto* crochetc = app.add_subcommand("crochet", "Hyperbolic crochet stitch schedule");
  crochetc->add_option("--foundation", spec.foundation, "Stitches in the foundation ring");
  crochetc->add_option("--ratio-n", spec.increase_every, "One increase per n stitches");
  crochetc->add_option("--rows", spec.rows, "Rows after the foundation");
  crochetc->add_option("--gauge", cro_gauge, "Stitch width and row height in mm, W,H");
  crochetc->add_option("--out", cro_out, "Handout text path (default stdout)");
  crochetc->add_option("--json", cro_json, "JSON schedule path ('-' for stdout)");
  crochetc->callback([&] {
    action = [&] {
      const RenderConfig cfg = globals.resolve();
      spec.gauge = cfg.gauge;
      if (!cro_gauge.empty()) {
        const auto g = parse_numbers(cro_gauge, 2, "gauge");
        spec.gauge = {g[0], g[1]};
      }
      spec.validate();
      const auto schedule = crochet::stitch_schedule(spec);
      const double k = crochet::estimate_curvature(spec).value();
      std::string text = "Hyperbolic crochet: foundation " + std::to_string(spec.foundation) +
                         ", one increase per " + std::to_string(spec.increase_every) +
                         " stitches, " + std::to_string(spec.rows) + " rows\n";
      text += "Gauge " + svg::fixed(spec.gauge.stitch_width_mm) + " x " +
              svg::fixed(spec.gauge.row_height_mm) + " mm, estimated K = " + fmt("%.6e", k) +
              " per mm²\n";
      for (const auto& line : crochet::instructions(schedule)) text += line + "\n";
      const std::string report = dump(io::crochet_report(spec, schedule));
      if (cro_json == "-") {
        if (!cro_out.empty() && cro_out != "-") write_file(cro_out, text);
        out << report;
      } else {
        emit(cro_out, text, out);
        if (!cro_json.empty()) write_file(cro_json, report);
      }
    };
  });

  // sphere
  auto* spherec = app.add_subcommand("sphere", "Unit-sphere geometry");
  spherec->require_subcommand(1);
  std::vector<std::string> sph_points;
  bool sph_json = false;
  std::string sph_svg;
  auto* sph_tri = spherec->add_subcommand("triangle", "Geodesic triangle on the unit sphere");
  sph_tri->add_option("--points", sph_points, "Three points lat,lon (degrees) or x,y,z")
      ->expected(3)
      ->required();
  sph_tri->add_flag("--json", sph_json, "Emit JSON");
  sph_tri->add_option("--svg", sph_svg, "Orthographic SVG output path");
  sph_tri->callback([&] {
    action = [&] {
      const RenderConfig cfg = globals.resolve();
      const sphere::SphericalTriangle t{parse_sphere_point(sph_points[0]),
                                        parse_sphere_point(sph_points[1]),
                                        parse_sphere_point(sph_points[2])};
      sphere::validate(t);
      const auto ang = sphere::triangle_angles(t);
      const double excess = sphere::triangle_area_excess(ang);
      const double lhuilier = sphere::triangle_area_lhuilier(t);
      const std::array<double, 3> sides{sphere::arc_length(t.b, t.c),
                                        sphere::arc_length(t.c, t.a),
                                        sphere::arc_length(t.a, t.b)};
      if (!sph_svg.empty()) {
        const std::string title = "curvlab sphere triangle points=" + sph_points[0] + " " +
                                  sph_points[1] + " " + sph_points[2];
        write_file(sph_svg, io::sphere_triangle_svg(t, title, cfg));
      }
      if (sph_json) {
        json j;
        j["angles_deg"] = {ang[0] * kDeg, ang[1] * kDeg, ang[2] * kDeg};
        j["angle_sum_deg"] = (ang[0] + ang[1] + ang[2]) * kDeg;
        j["sides_rad"] = sides;
        j["area_excess"] = excess;
        j["area_lhuilier"] = lhuilier;
        out << dump(j);
        return;
      }
      out << "angles: " << fmt("%.9f", ang[0] * kDeg) << "° " << fmt("%.9f", ang[1] * kDeg)
          << "° " << fmt("%.9f", ang[2] * kDeg) << "°\n";
      out << "angle sum: " << fmt("%.9f", (ang[0] + ang[1] + ang[2]) * kDeg) << "°\n";
      out << "sides: " << fmt("%.12f", sides[0]) << " " << fmt("%.12f", sides[1]) << " "
          << fmt("%.12f", sides[2]) << " rad\n";
      out << "area (angle excess): " << fmt("%.12f", excess) << "\n";
      out << "area (L'Huilier): " << fmt("%.12f", lhuilier) << "\n";
    };
  });

  std::vector<std::string> line1;
  std::vector<std::string> line2;
  auto* sph_int = spherec->add_subcommand("intersect", "Intersection of two great circles");
  sph_int->add_option("--line1", line1, "Two points on the first great circle")
      ->expected(2)
      ->required();
  sph_int->add_option("--line2", line2, "Two points on the second great circle")
      ->expected(2)
      ->required();
  sph_int->callback([&] {
    action = [&] {
      const auto c1 =
          sphere::great_circle_through(parse_sphere_point(line1[0]), parse_sphere_point(line1[1]));
      const auto c2 =
          sphere::great_circle_through(parse_sphere_point(line2[0]), parse_sphere_point(line2[1]));
      const auto [p, q] = sphere::intersect_great_circles(c1, c2);
      out << "point 1: lat,lon " << lat_lon_text(p) << "  xyz " << xyz_text(p.v()) << "\n";
      out << "point 2: lat,lon " << lat_lon_text(q) << "  xyz " << xyz_text(q.v()) << "\n";
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (action) action();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "curvlab: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const Error& e) {
    err << "curvlab: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "curvlab: internal error: " << one_line(e.what()) << "\n";
    return 1;
  }
}

}  // namespace curvlab
