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

#include "curvlab/tiling.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <utility>

#include "curvlab/error.hpp"

namespace curvlab::tiling {

VertexConfig::VertexConfig(std::vector<int> gons) : gons_(std::move(gons)) {
  if (gons_.size() < 3) throw DomainError("vertex config needs at least three polygons");
  for (int n : gons_) {
    if (n < 3) throw DomainError("polygon side count must be at least 3");
  }
}

VertexConfig VertexConfig::parse(const std::string& text) {
  std::vector<int> gons;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      gons.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("bad vertex config '" + text + "'");
    }
  }
  return VertexConfig(std::move(gons));
}

std::string VertexConfig::str() const {
  std::string out;
  for (size_t i = 0; i < gons_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gons_[i]);
  }
  return out;
}

bool VertexConfig::matches_cyclic(std::span<const int> cycle) const {
  const size_t n = gons_.size();
  if (cycle.size() != n) return false;
  for (size_t shift = 0; shift < n; ++shift) {
    bool fwd = true;
    bool rev = true;
    for (size_t i = 0; i < n; ++i) {
      fwd = fwd && cycle[(shift + i) % n] == gons_[i];
      rev = rev && cycle[(shift + n - i) % n] == gons_[i];
    }
    if (fwd || rev) return true;
  }
  return false;
}

ExactAngle interior_angle(int n) {
  if (n < 3) throw DomainError("polygon needs at least 3 sides, got " + std::to_string(n));
  return ExactAngle(180 * (static_cast<std::int64_t>(n) - 2), n);
}

ExactAngle vertex_angle_sum(const VertexConfig& config) {
  ExactAngle sum;
  for (int n : config.gons()) sum += interior_angle(n);
  return sum;
}

ExactAngle angle_defect(const VertexConfig& config) {
  return ExactAngle(360) - vertex_angle_sum(config);
}

CurvatureSign classify_vertex(const VertexConfig& config) {
  const int s = angle_defect(config).sign();
  if (s > 0) return CurvatureSign::kPositive;
  if (s < 0) return CurvatureSign::kNegative;
  return CurvatureSign::kZero;
}

int TilingPatch::destination(int h) const {
  const HalfEdge& e = half_edges_[static_cast<size_t>(h)];
  return half_edges_[static_cast<size_t>(e.twin)].origin;
}

std::vector<int> TilingPatch::outgoing(int v) const {
  std::vector<int> out;
  const int start = vertex_out_[static_cast<size_t>(v)];
  int h = start;
  do {
    out.push_back(h);
    h = half_edges_[static_cast<size_t>(half_edges_[static_cast<size_t>(h)].prev)].twin;
  } while (h != start);
  return out;
}

std::vector<int> TilingPatch::vertex_faces(int v) const {
  std::vector<int> out;
  for (int h : outgoing(v)) out.push_back(half_edges_[static_cast<size_t>(h)].face);
  // Rotate so a boundary gap, if any, comes last.
  const auto gap = std::find(out.begin(), out.end(), -1);
  if (gap != out.end()) std::rotate(out.begin(), gap + 1, out.end());
  return out;
}

bool TilingPatch::complete(int v) const {
  for (int h : outgoing(v)) {
    if (half_edges_[static_cast<size_t>(h)].face < 0) return false;
  }
  return true;
}

std::vector<int> TilingPatch::face_half_edges(int f) const {
  std::vector<int> out;
  const int start = faces_[static_cast<size_t>(f)].half_edge;
  int h = start;
  do {
    out.push_back(h);
    h = half_edges_[static_cast<size_t>(h)].next;
  } while (h != start);
  return out;
}

std::vector<int> TilingPatch::face_vertices(int f) const {
  std::vector<int> out;
  for (int h : face_half_edges(f)) out.push_back(half_edges_[static_cast<size_t>(h)].origin);
  return out;
}

std::vector<int> TilingPatch::ring_sizes() const {
  std::vector<int> sizes(static_cast<size_t>(rings_) + 1, 0);
  for (const Face& f : faces_) ++sizes[static_cast<size_t>(f.ring)];
  return sizes;
}

ExactAngle TilingPatch::vertex_angle_sum(int v) const {
  ExactAngle sum;
  for (int f : vertex_faces(v)) {
    if (f >= 0) sum += interior_angle(faces_[static_cast<size_t>(f)].sides);
  }
  return sum;
}

TilingPatch TilingPatch::relabeled(std::span<const int> permutation) const {
  const size_t n = faces_.size();
  if (permutation.size() != n) throw DomainError("permutation size does not match faces");
  std::vector<char> seen(n, 0);
  for (int id : permutation) {
    if (id < 0 || static_cast<size_t>(id) >= n || seen[static_cast<size_t>(id)]) {
      throw DomainError("not a permutation of face ids");
    }
    seen[static_cast<size_t>(id)] = 1;
  }
  TilingPatch out = *this;
  for (size_t i = 0; i < n; ++i) {
    out.faces_[static_cast<size_t>(permutation[i])] = faces_[i];
  }
  for (HalfEdge& h : out.half_edges_) {
    if (h.face >= 0) h.face = permutation[static_cast<size_t>(h.face)];
  }
  return out;
}

// Builds (p,6,6) patches. Faces come in two classes: "centre" faces (the
// p-gons) whose neighbours are all hexagons, and hexagons whose neighbours
// alternate between centre faces and hexagons. Each face half-edge records
// the class expected across it, which fixes the size of every face added
// later.
class PatchBuilder {
 public:
  enum Kind : char { kCentre = 0, kHexagon = 1 };

  PatchBuilder(VertexConfig config, int p) : patch_(std::move(config)), p_(p) {}

  TilingPatch build(int rings) {
    seed();
    for (int r = 1; r <= rings; ++r) {
      const std::vector<int> frontier = open_vertices();
      if (frontier.empty()) break;
      ring_ = r;
      patch_.rings_ = r;
      for (int v : frontier) complete_vertex(v);
    }
    patch_.closed_ = std::none_of(patch_.half_edges_.begin(), patch_.half_edges_.end(),
                                  [](const HalfEdge& h) { return h.face < 0; });
    return std::move(patch_);
  }

 private:
  HalfEdge& he(int h) { return patch_.half_edges_[static_cast<size_t>(h)]; }
  int dest(int h) { return he(he(h).twin).origin; }
  int sides(Kind k) const { return k == kCentre ? p_ : 6; }
  static Kind other(Kind k) { return k == kCentre ? kHexagon : kCentre; }

  int new_vertex() {
    patch_.vertex_out_.push_back(-1);
    return static_cast<int>(patch_.vertex_out_.size()) - 1;
  }

  // Creates the edge from -> to; returns the from -> to half-edge, whose
  // twin is the next index.
  int new_edge(int from, int to) {
    const int h = static_cast<int>(patch_.half_edges_.size());
    patch_.half_edges_.push_back(HalfEdge{from, h + 1, -1, -1, -1});
    patch_.half_edges_.push_back(HalfEdge{to, h, -1, -1, -1});
    across_.push_back(kCentre);
    across_.push_back(kCentre);
    if (patch_.vertex_out_[static_cast<size_t>(from)] < 0) {
      patch_.vertex_out_[static_cast<size_t>(from)] = h;
    }
    if (patch_.vertex_out_[static_cast<size_t>(to)] < 0) {
      patch_.vertex_out_[static_cast<size_t>(to)] = h + 1;
    }
    return h;
  }

  void link(int a, int b) {
    he(a).next = b;
    he(b).prev = a;
  }

  int face_count(int v) {
    int n = 0;
    for (int h : patch_.outgoing(v)) n += he(h).face >= 0;
    return n;
  }

  int boundary_out(int v) {
    for (int h : patch_.outgoing(v)) {
      if (he(h).face < 0) return h;
    }
    throw StateError("vertex " + std::to_string(v) + " is not on the boundary");
  }

  void seed() {
    std::vector<int> verts;
    for (int i = 0; i < p_; ++i) verts.push_back(new_vertex());
    std::vector<int> inner;
    for (int i = 0; i < p_; ++i) inner.push_back(new_edge(verts[i], verts[(i + 1) % p_]));
    for (int i = 0; i < p_; ++i) {
      link(inner[i], inner[(i + 1) % p_]);
      // Boundary twins run the other way round.
      link(he(inner[(i + 1) % p_]).twin, he(inner[i]).twin);
      he(inner[i]).face = 0;
      across_[static_cast<size_t>(inner[i])] = kHexagon;
    }
    patch_.faces_.push_back(Face{p_, 0, inner[0]});
    kinds_.push_back(kCentre);
  }

  // Incomplete vertices in counterclockwise boundary order, starting from
  // the smallest vertex id.
  std::vector<int> open_vertices() {
    int first = -1;
    for (int v = 0; v < patch_.vertex_count(); ++v) {
      if (!patch_.complete(v)) {
        first = v;
        break;
      }
    }
    if (first < 0) return {};
    std::vector<int> out;
    const int start = boundary_out(first);
    int h = start;
    do {
      out.push_back(he(h).origin);
      h = he(h).prev;
    } while (h != start);
    return out;
  }

  void complete_vertex(int v) {
    while (face_count(v) < 3) {
      const int hout = boundary_out(v);
      std::deque<int> chain{hout};
      if (face_count(v) == 2) {
        chain.push_front(he(hout).prev);
        // A boundary vertex with two faces has one gap, so the face filling
        // it owns both of its boundary edges.
        while (he(chain.front()).prev != chain.back() &&
               face_count(he(chain.front()).origin) == 2) {
          chain.push_front(he(chain.front()).prev);
        }
      }
      while (he(chain.back()).next != chain.front() && face_count(dest(chain.back())) == 2) {
        chain.push_back(he(chain.back()).next);
      }
      add_face(std::vector<int>(chain.begin(), chain.end()));
    }
  }

  // Adds the face lying outside the run of boundary half-edges `chain`.
  void add_face(const std::vector<int>& chain) {
    const Kind kind = across_[static_cast<size_t>(he(chain.front()).twin)];
    const int n = sides(kind);
    const int k = static_cast<int>(chain.size());
    const bool fills_hole = he(chain.back()).next == chain.front();
    if (k > n || (fills_hole && k != n)) {
      throw StateError("boundary run of " + std::to_string(k) + " edges cannot host a " +
                       std::to_string(n) + "-gon");
    }
    // Class expected across edge i of the new face, counterclockwise from
    // the first chain edge.
    auto expected = [&](int i) {
      if (kind == kCentre) return kHexagon;
      return i % 2 == 0 ? kinds_[static_cast<size_t>(he(he(chain.front()).twin).face)]
                        : other(kinds_[static_cast<size_t>(he(he(chain.front()).twin).face)]);
    };
    const int f = static_cast<int>(patch_.faces_.size());
    for (int i = 0; i < k; ++i) {
      const int h = chain[static_cast<size_t>(i)];
      const Kind neighbour = kinds_[static_cast<size_t>(he(he(h).twin).face)];
      if (neighbour != expected(i)) {
        throw StateError("vertex configuration cannot be completed consistently");
      }
      he(h).face = f;
      across_[static_cast<size_t>(h)] = neighbour;
    }
    patch_.faces_.push_back(Face{n, ring_, chain.front()});
    kinds_.push_back(kind);
    if (fills_hole) return;

    const int before = he(chain.front()).prev;
    const int after = he(chain.back()).next;
    const int m = n - k;
    std::vector<int> path{dest(chain.back())};
    for (int j = 1; j < m; ++j) path.push_back(new_vertex());
    path.push_back(he(chain.front()).origin);

    std::vector<int> fresh;
    for (int j = 0; j < m; ++j) {
      const int h = new_edge(path[static_cast<size_t>(j)], path[static_cast<size_t>(j) + 1]);
      he(h).face = f;
      across_[static_cast<size_t>(h)] = expected(k + j);
      fresh.push_back(h);
    }
    for (int i = 0; i + 1 < k; ++i) link(chain[static_cast<size_t>(i)], chain[static_cast<size_t>(i) + 1]);
    link(chain.back(), fresh.front());
    for (int j = 0; j + 1 < m; ++j) link(fresh[static_cast<size_t>(j)], fresh[static_cast<size_t>(j) + 1]);
    link(fresh.back(), chain.front());

    link(before, he(fresh.back()).twin);
    for (int j = m - 1; j > 0; --j) {
      link(he(fresh[static_cast<size_t>(j)]).twin, he(fresh[static_cast<size_t>(j) - 1]).twin);
    }
    link(he(fresh.front()).twin, after);
  }

  TilingPatch patch_;
  int p_;
  int ring_ = 0;
  std::vector<Kind> across_;
  std::vector<Kind> kinds_;
};

TilingPatch generate_patch(const VertexConfig& config, int rings) {
  if (rings < 0) throw DomainError("ring count must be non-negative");
  std::vector<int> sorted = config.gons();
  std::sort(sorted.begin(), sorted.end());
  int p = 0;
  if (sorted.size() == 3) {
    if (sorted == std::vector<int>{5, 6, 6}) p = 5;
    if (sorted == std::vector<int>{6, 6, 6}) p = 6;
    if (sorted == std::vector<int>{6, 6, 7}) p = 7;
  }
  if (p == 0) {
    throw DomainError("unsupported config " + config.str() +
                      "; expected 5,6,6 or 6,6,6 or 7,6,6");
  }
  return PatchBuilder(VertexConfig({p, 6, 6}), p).build(rings);
}

ExactAngle total_defect(const TilingPatch& patch) {
  if (!patch.closed()) throw StateError("total defect needs a closed patch");
  ExactAngle sum;
  for (int v = 0; v < patch.vertex_count(); ++v) {
    sum += ExactAngle(360) - patch.vertex_angle_sum(v);
  }
  return sum;
}

}  // namespace curvlab::tiling
