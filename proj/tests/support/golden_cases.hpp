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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "curvlab/cli.hpp"

// Fixed CLI invocations whose outputs are committed under tests/golden.
// Every run pins the config to golden.conf so that a user config file
// cannot leak into the bytes.
namespace curvlab::testing {

struct GoldenCase {
  std::string name;
  // "{svg}" is replaced by a scratch SVG path.
  std::vector<std::string> args;
  // Extension of the stdout artifact: "json" or "txt".
  std::string stdout_ext;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"sphere_right_angles",
       {"sphere", "triangle", "--points", "90,0", "0,0", "0,90", "--svg", "{svg}"},
       "txt"},
      {"sphere_right_angles_json",
       {"sphere", "triangle", "--points", "90,0", "0,0", "0,90", "--json"},
       "json"},
      {"geometry_right_angles", {"geometry", "--curvature", "1", "--area", "1.570796"}, "txt"},
      {"geometry_right_angles_json",
       {"geometry", "--curvature", "1", "--area", "1.570796", "--json"},
       "json"},
      {"tiling_soccer_ball", {"tiling", "--config", "5,6,6", "--rings", "99", "--out", "{svg}"},
       "json"},
      {"tiling_heptagon_ring",
       {"tiling", "--config", "7,6,6", "--rings", "1", "--edge-mm", "30", "--out", "{svg}"},
       "json"},
      {"fold_sixty",
       {"fold", "--inner", "30", "--outer", "120", "--creases", "2", "--fold-angle", "60", "--out",
        "{svg}"},
       "json"},
      {"fold_flat",
       {"fold", "--inner", "30", "--outer", "120", "--creases", "6", "--fold-angle", "0", "--out",
        "{svg}"},
       "json"},
  };
  return cases;
}

struct GoldenRun {
  int code = -1;
  std::string out;
  std::string err;
  std::string svg;  // empty when the case writes no SVG
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline bool writes_svg(const GoldenCase& c) {
  for (const auto& a : c.args) {
    if (a == "{svg}") return true;
  }
  return false;
}

inline GoldenRun run_golden_case(const GoldenCase& c, const std::filesystem::path& golden_dir,
                                 const std::filesystem::path& scratch) {
  const auto svg_path = scratch / (c.name + ".svg");
  std::vector<std::string> args{"--config-file", (golden_dir / "golden.conf").string()};
  for (const auto& a : c.args) args.push_back(a == "{svg}" ? svg_path.string() : a);
  std::ostringstream out, err;
  GoldenRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (writes_svg(c)) r.svg = read_file(svg_path);
  return r;
}

}  // namespace curvlab::testing
