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
#include <optional>
#include <string>

#include "curvlab/crochet.hpp"

namespace curvlab {

/// Page, stroke, and fabrication defaults shared by the CLI commands.
struct RenderConfig {
  double page_width_mm = 210.0;
  double page_height_mm = 297.0;
  double margin_mm = 10.0;

  double stroke_cut_mm = 0.3;
  double stroke_fold_mm = 0.2;
  double stroke_tab_mm = 0.2;
  double stroke_mountain_mm = 0.3;
  double stroke_valley_mm = 0.3;
  double stroke_geodesic_mm = 0.4;
  double stroke_circle_mm = 0.4;

  double edge_mm = 30.0;
  double tab_depth_mm = 8.0;
  crochet::Gauge gauge;

  /// Throws DomainError for non-positive dimensions or a margin of half the
  /// smaller page side or more.
  void validate() const;

  /// Applies one `key = value` setting. Throws DomainError for unknown keys
  /// or unparsable values.
  void set(const std::string& key, const std::string& value);
};

/// Environment variable naming the config file when --config-file is absent.
inline constexpr const char* kConfigEnvVar = "CURVLAB_CONFIG";

/// Reads `key = value` lines; '#' starts a comment. Throws DomainError if
/// the file cannot be read or a line is malformed.
RenderConfig load_config_file(const std::filesystem::path& path, RenderConfig base = {});

/// Resolves the config: an explicit path or $CURVLAB_CONFIG must name a
/// readable file; otherwise $XDG_CONFIG_HOME/curvlab/config (with
/// XDG_CONFIG_HOME defaulting to ~/.config) is used when it exists, and the
/// built-in defaults when it does not.
RenderConfig resolve_config(const std::optional<std::filesystem::path>& explicit_path);

}  // namespace curvlab
