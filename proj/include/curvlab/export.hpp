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
#include <string>
#include <vector>

#include <json.hpp>

#include "curvlab/crochet.hpp"
#include "curvlab/disk.hpp"
#include "curvlab/fold.hpp"
#include "curvlab/net.hpp"
#include "curvlab/render_config.hpp"
#include "curvlab/sphere.hpp"
#include "curvlab/tiling.hpp"

// SVG and JSON renderings of the library's artifacts. Every emitter is a
// pure function of its inputs so identical calls give identical bytes.
namespace curvlab::io {

/// Rounds to 6 decimals for JSON coordinates; maps -0 to 0.
double round6(double v);

std::string strategy_name(tiling::NetStrategy s);

// Tiling nets.
nlohmann::json tiling_report(const tiling::TilingPatch& patch, const tiling::Net& net);
std::string net_svg(const tiling::Net& net, const tiling::TilingPatch& patch,
                    const RenderConfig& cfg);

// Curved-folding templates.
struct FoldRequest {
  std::string spacing_text;  // as given on the command line
  double fold_angle_deg = 0.0;
};
std::string template_svg(const fold::AnnulusTemplate& t, const FoldRequest& req,
                         const RenderConfig& cfg);
nlohmann::json fold_report(const fold::AnnulusTemplate& t, const fold::FoldProfile& profile,
                           const FoldRequest& req);

// Crochet.
nlohmann::json crochet_report(const crochet::CrochetSpec& spec,
                              const crochet::CrochetSchedule& schedule);

// Poincare disk figures.
std::string disk_triangle_svg(const disk::DiskTriangle& t, const RenderConfig& cfg);
std::string disk_parallels_svg(const disk::DiskGeodesic& g, const disk::DiskPoint& p,
                               const std::vector<disk::DiskGeodesic>& parallels,
                               const std::string& title, const RenderConfig& cfg);
std::string disk_circle_svg(const disk::HyperbolicCircle& c, const RenderConfig& cfg);

// Sphere figures.
std::string sphere_triangle_svg(const sphere::SphericalTriangle& t, const std::string& title,
                                const RenderConfig& cfg);

}  // namespace curvlab::io
