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

#include <span>
#include <string>
#include <vector>

#include "curvlab/curvature.hpp"
#include "curvlab/exact_angle.hpp"

// Polygon tilings built from one p-gon and two hexagons at every vertex:
// (6,6,6) is the flat honeycomb, (5,6,6) closes into the soccer ball, and
// (7,6,6) is the hyperbolic football.
namespace curvlab::tiling {

/// Cyclic list of polygon side counts around a vertex.
class VertexConfig {
 public:
  /// Throws DomainError for fewer than three entries or an entry below 3.
  explicit VertexConfig(std::vector<int> gons);
  /// Parses "7,6,6".
  static VertexConfig parse(const std::string& text);

  const std::vector<int>& gons() const { return gons_; }
  std::string str() const;

  /// True when `cycle` equals this config up to rotation and reflection.
  bool matches_cyclic(std::span<const int> cycle) const;

 private:
  std::vector<int> gons_;
};

/// (n - 2) * 180 / n degrees. Throws DomainError for n < 3.
ExactAngle interior_angle(int n);
ExactAngle vertex_angle_sum(const VertexConfig& config);
/// 360 minus the vertex angle sum.
ExactAngle angle_defect(const VertexConfig& config);
CurvatureSign classify_vertex(const VertexConfig& config);

/// Half-edge of a patch. Face half-edges run counterclockwise around their
/// face. Boundary half-edges have face == -1; their next/prev pointers walk
/// the outer boundary with the exterior on the left.
struct HalfEdge {
  int origin = -1;
  int twin = -1;
  int next = -1;
  int prev = -1;
  int face = -1;
};

struct Face {
  int sides = 0;
  int ring = 0;
  int half_edge = -1;  // first half-edge; vertex order starts at its origin
};

/// A combinatorial tiling patch stored as a rotation system.
class TilingPatch {
 public:
  const VertexConfig& config() const { return config_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  int vertex_count() const { return static_cast<int>(vertex_out_.size()); }
  int edge_count() const { return static_cast<int>(half_edges_.size() / 2); }
  bool closed() const { return closed_; }
  /// Number of rings actually grown (stops early once the patch closes).
  int rings() const { return rings_; }

  int destination(int h) const;
  /// Outgoing half-edges of v in counterclockwise order.
  std::vector<int> outgoing(int v) const;
  /// Faces around v in counterclockwise order; -1 marks the open gap of a
  /// boundary vertex.
  std::vector<int> vertex_faces(int v) const;
  /// A vertex is complete when it has no boundary gap.
  bool complete(int v) const;
  /// Vertex indices of face f in counterclockwise order.
  std::vector<int> face_vertices(int f) const;
  /// Half-edges of face f in counterclockwise order.
  std::vector<int> face_half_edges(int f) const;
  /// Face count per ring, ring 0 first.
  std::vector<int> ring_sizes() const;

  /// Sum of the interior angles of the faces present at v.
  ExactAngle vertex_angle_sum(int v) const;

  /// Same patch with face i renamed to permutation[i]. Face-ordering
  /// dependent outputs change; every combinatorial quantity does not.
  TilingPatch relabeled(std::span<const int> permutation) const;

 private:
  friend class PatchBuilder;

  explicit TilingPatch(VertexConfig config) : config_(std::move(config)) {}

  VertexConfig config_;
  std::vector<Face> faces_;
  std::vector<HalfEdge> half_edges_;
  std::vector<int> vertex_out_;
  bool closed_ = false;
  int rings_ = 0;
};

/// Grows a patch around a central p-gon, one ring of faces at a time, for
/// configs equivalent to (p,6,6) with p in {5,6,7}. Ring r holds the faces
/// at face-graph distance r from the center. Growth stops early when the
/// surface closes, which happens only for p = 5. Throws DomainError for
/// other configs or negative ring counts.
TilingPatch generate_patch(const VertexConfig& config, int rings);

/// Sum of the vertex defects of a closed patch. Throws StateError for a
/// patch with boundary.
ExactAngle total_defect(const TilingPatch& patch);

}  // namespace curvlab::tiling
