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
#include <span>
#include <utility>
#include <vector>

#include "curvlab/tiling.hpp"

namespace curvlab::tiling {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(Point2, Point2) = default;
};

enum class NetStrategy { kBfsTree, kDfsTree };

/// How one side of a placed polygon is treated when the net is cut out.
enum class EdgeClass {
  kFold,     // spanning-tree edge; the neighbour is attached here
  kGlueTab,  // shared with a face elsewhere on the sheet; glued with a tab
  kCut,      // patch boundary
};

struct PlacedFace {
  int face = -1;
  /// Regular polygon corners in mm, counterclockwise, in the patch's
  /// face_vertices() order.
  std::vector<Point2> corners;
  /// Class of edge i, from corners[i] to corners[i + 1].
  std::vector<EdgeClass> edge_class;
  /// Tab id for kGlueTab edges, -1 otherwise. Both sides of a glued pair
  /// carry the same id.
  std::vector<int> tab_id;
  /// Parent in the spanning tree, -1 for the root.
  int parent = -1;
};

struct GlueTab {
  int id = -1;
  int face = -1;  // the smaller of the two face ids; the tab is drawn here
  int edge = -1;
  int partner_face = -1;
  int partner_edge = -1;
  std::array<Point2, 4> outline{};
};

struct Net {
  double edge_mm = 0.0;
  double tab_depth_mm = 0.0;
  NetStrategy strategy = NetStrategy::kBfsTree;
  std::vector<PlacedFace> faces;  // indexed by face id
  std::vector<GlueTab> tabs;      // ordered by id
  /// Face pairs (i < j) whose interiors overlap once flattened, sorted.
  std::vector<std::pair<int, int>> overlaps;

  int fold_edge_count() const;
};

/// Lays the patch out flat. Spanning-tree edges of the face adjacency graph
/// become shared fold edges, the other shared edges become glue-tab pairs,
/// and overlapping polygons are flagged rather than moved.
Net unfold_net(const TilingPatch& patch, double edge_mm,
               NetStrategy strategy = NetStrategy::kBfsTree, double tab_depth_mm = 8.0);

/// Separating-axis test for convex polygons. Interiors overlap when every
/// axis shows a penetration deeper than tol; touching along an edge or a
/// corner does not count.
bool interiors_overlap(std::span<const Point2> a, std::span<const Point2> b,
                       double tol = 1e-9);

}  // namespace curvlab::tiling
