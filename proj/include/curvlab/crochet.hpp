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

#include <string>
#include <vector>

#include "curvlab/curvature.hpp"

// Hyperbolic crochet: worked in the round, each row increases the stitch
// count by the factor (n + 1) / n, so row circumference grows
// exponentially with distance from the foundation chain.
namespace curvlab::crochet {

struct Gauge {
  double stitch_width_mm = 5.0;
  double row_height_mm = 4.0;
};

struct CrochetSpec {
  int foundation = 20;      // >= 4
  int increase_every = 5;   // n >= 1: one increase per n stitches
  int rows = 10;            // >= 1
  Gauge gauge;

  /// Throws DomainError when a bound is violated.
  void validate() const;
};

struct CrochetSchedule {
  int increase_every = 0;
  /// counts[0] is the foundation; counts[k] the stitches in row k.
  std::vector<long long> counts;
  /// increases[k]: indices of the row k - 1 stitches that receive a second
  /// stitch while row k is worked. increases[0] is empty.
  std::vector<std::vector<long long>> increases;
};

/// Integer row counts tracking foundation * ((n + 1) / n)^k to within one
/// stitch, carrying the fractional remainder from row to row. Increases
/// are spread as evenly as possible along each row.
CrochetSchedule stitch_schedule(const CrochetSpec& spec);

/// One handout line per row, e.g.
///   "Row 0: chain 20, join — 20 sts"
///   "Row 1: (sc 5, inc) × 4 — 24 sts"
/// "sc N" works one single crochet into each of the next N stitches; "inc"
/// works one more single crochet into the stitch just used.
std::vector<std::string> instructions(const CrochetSchedule& s);

/// Consumed and produced stitch counts of one parsed row pattern.
struct RowTally {
  long long consumed = 0;
  long long produced = 0;
};

/// Parses the pattern part of a non-foundation row line (the text between
/// "Row k: " and " — "). Throws DomainError on malformed text.
RowTally parse_row_pattern(const std::string& pattern);

/// Reads a whole handout back into row counts.
std::vector<long long> parse_instructions(const std::vector<std::string>& lines);

/// K = -(ln((n + 1) / n) / row_height)^2 in 1/mm^2, from matching the
/// fabric's growth per row to the e^{r sqrt|K|} growth of hyperbolic
/// circles.
Curvature estimate_curvature(const CrochetSpec& spec);

}  // namespace curvlab::crochet
