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

#include "curvlab/render_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>

#include "curvlab/error.hpp"

namespace curvlab {

namespace {

double parse_positive(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size() && v > 0.0 && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("config key '" + key + "' needs a positive number, got '" + value + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void RenderConfig::validate() const {
  for (double v : {page_width_mm, page_height_mm, margin_mm, stroke_cut_mm, stroke_fold_mm,
                   stroke_tab_mm, stroke_mountain_mm, stroke_valley_mm, stroke_geodesic_mm,
                   stroke_circle_mm, edge_mm, tab_depth_mm, gauge.stitch_width_mm,
                   gauge.row_height_mm}) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("render settings must be positive");
  }
  if (!(margin_mm < 0.5 * std::min(page_width_mm, page_height_mm))) {
    throw DomainError("margin must be less than half the smaller page side");
  }
}

void RenderConfig::set(const std::string& key, const std::string& value) {
  static const std::map<std::string, std::function<double&(RenderConfig&)>> fields = {
      {"page_width_mm", [](RenderConfig& c) -> double& { return c.page_width_mm; }},
      {"page_height_mm", [](RenderConfig& c) -> double& { return c.page_height_mm; }},
      {"margin_mm", [](RenderConfig& c) -> double& { return c.margin_mm; }},
      {"stroke_cut_mm", [](RenderConfig& c) -> double& { return c.stroke_cut_mm; }},
      {"stroke_fold_mm", [](RenderConfig& c) -> double& { return c.stroke_fold_mm; }},
      {"stroke_tab_mm", [](RenderConfig& c) -> double& { return c.stroke_tab_mm; }},
      {"stroke_mountain_mm", [](RenderConfig& c) -> double& { return c.stroke_mountain_mm; }},
      {"stroke_valley_mm", [](RenderConfig& c) -> double& { return c.stroke_valley_mm; }},
      {"stroke_geodesic_mm", [](RenderConfig& c) -> double& { return c.stroke_geodesic_mm; }},
      {"stroke_circle_mm", [](RenderConfig& c) -> double& { return c.stroke_circle_mm; }},
      {"edge_mm", [](RenderConfig& c) -> double& { return c.edge_mm; }},
      {"tab_depth_mm", [](RenderConfig& c) -> double& { return c.tab_depth_mm; }},
      {"gauge_stitch_width_mm",
       [](RenderConfig& c) -> double& { return c.gauge.stitch_width_mm; }},
      {"gauge_row_height_mm", [](RenderConfig& c) -> double& { return c.gauge.row_height_mm; }},
  };
  const auto it = fields.find(key);
  if (it == fields.end()) throw DomainError("unknown config key '" + key + "'");
  it->second(*this) = parse_positive(key, value);
}

RenderConfig load_config_file(const std::filesystem::path& path, RenderConfig base) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    }
    base.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  base.validate();
  return base;
}

RenderConfig resolve_config(const std::optional<std::filesystem::path>& explicit_path) {
  if (explicit_path) return load_config_file(*explicit_path);
  if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
    return load_config_file(env);
  }
  std::filesystem::path fallback;
  if (const char* xdg = std::getenv("XDG_CONFIG_HOME"); xdg && *xdg) {
    fallback = std::filesystem::path(xdg) / "curvlab" / "config";
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    fallback = std::filesystem::path(home) / ".config" / "curvlab" / "config";
  }
  std::error_code ec;
  if (!fallback.empty() && std::filesystem::exists(fallback, ec)) {
    return load_config_file(fallback);
  }
  return RenderConfig{};
}

}  // namespace curvlab
