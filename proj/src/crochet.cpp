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

#include "curvlab/crochet.hpp"

#include <cmath>
#include <string_view>

#include "curvlab/error.hpp"

namespace curvlab::crochet {

namespace {

constexpr long long kMaxStitches = 1'000'000'000;
constexpr std::string_view kDash = " — ";
constexpr std::string_view kTimes = " × ";

long long parse_count(std::string_view text) {
  if (text.empty()) throw DomainError("missing stitch count");
  long long v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw DomainError("bad stitch count '" + std::string(text) + "'");
    v = v * 10 + (ch - '0');
    if (v > kMaxStitches) throw DomainError("stitch count too large");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Splits on ", " outside parentheses.
std::vector<std::string_view> split_items(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw DomainError("unbalanced parentheses in row pattern");
    if (depth == 0 && s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw DomainError("unbalanced parentheses in row pattern");
  out.push_back(trim(s.substr(start)));
  return out;
}

RowTally tally_item(std::string_view item) {
  if (item == "inc") return {0, 1};
  if (item.starts_with("sc ")) {
    const long long n = parse_count(item.substr(3));
    return {n, n};
  }
  if (item.starts_with("(")) {
    const size_t close = item.rfind(')');
    if (close == std::string_view::npos) throw DomainError("unclosed group in row pattern");
    const std::string_view rest = item.substr(close + 1);
    if (!rest.starts_with(kTimes)) throw DomainError("group without repeat count");
    const long long times = parse_count(rest.substr(kTimes.size()));
    const RowTally inner = parse_row_pattern(std::string(item.substr(1, close - 1)));
    return {inner.consumed * times, inner.produced * times};
  }
  throw DomainError("unknown stitch token '" + std::string(item) + "'");
}

}  // namespace

void CrochetSpec::validate() const {
  if (foundation < 4) throw DomainError("foundation must be at least 4 stitches");
  if (increase_every < 1) throw DomainError("increase interval n must be at least 1");
  if (rows < 1) throw DomainError("row count must be at least 1");
  if (!(gauge.stitch_width_mm > 0.0) || !(gauge.row_height_mm > 0.0)) {
    throw DomainError("gauge stitch width and row height must be positive");
  }
}

CrochetSchedule stitch_schedule(const CrochetSpec& spec) {
  spec.validate();
  const long double n = spec.increase_every;
  CrochetSchedule s;
  s.increase_every = spec.increase_every;
  s.counts.push_back(spec.foundation);
  s.increases.emplace_back();
  long double carry = 0.0L;
  for (int k = 1; k <= spec.rows; ++k) {
    const long long prev = s.counts.back();
    const long double held = static_cast<long double>(prev) + carry;
    const long double ideal = held + held / n;
    // The small bias keeps exact integer targets from rounding down.
    const long long count = static_cast<long long>(std::floor(ideal + 1e-9L));
    if (count > kMaxStitches) {
      throw DomainError("row " + std::to_string(k) + " would exceed " +
                        std::to_string(kMaxStitches) + " stitches");
    }
    carry = ideal - static_cast<long double>(count);
    const long long m = count - prev;
    if (m > prev) throw DomainError("more increases than stitches in row " + std::to_string(k));
    std::vector<long long> at;
    at.reserve(static_cast<size_t>(m));
    for (long long j = 0; j < m; ++j) at.push_back((j + 1) * prev / m - 1);
    s.counts.push_back(count);
    s.increases.push_back(std::move(at));
  }
  return s;
}

std::vector<std::string> instructions(const CrochetSchedule& s) {
  std::vector<std::string> lines;
  if (s.counts.empty()) return lines;
  lines.push_back("Row 0: chain " + std::to_string(s.counts[0]) + ", join" + std::string(kDash) +
                  std::to_string(s.counts[0]) + " sts");
  for (size_t k = 1; k < s.counts.size(); ++k) {
    const long long worked = s.counts[k - 1];
    std::vector<long long> runs;
    long long last = -1;
    for (long long p : s.increases[k]) {
      runs.push_back(p - last);
      last = p;
    }
    const long long tail = worked - 1 - last;
    std::string pattern;
    auto append = [&pattern](const std::string& item) {
      if (!pattern.empty()) pattern += ", ";
      pattern += item;
    };
    for (size_t i = 0; i < runs.size();) {
      size_t j = i;
      while (j < runs.size() && runs[j] == runs[i]) ++j;
      const std::string unit = "sc " + std::to_string(runs[i]) + ", inc";
      if (j - i == 1) {
        append(unit);
      } else {
        append("(" + unit + ")" + std::string(kTimes) + std::to_string(j - i));
      }
      i = j;
    }
    if (tail > 0) append("sc " + std::to_string(tail));
    lines.push_back("Row " + std::to_string(k) + ": " + pattern + std::string(kDash) +
                    std::to_string(s.counts[k]) + " sts");
  }
  return lines;
}

RowTally parse_row_pattern(const std::string& pattern) {
  RowTally total;
  for (std::string_view item : split_items(pattern)) {
    const RowTally t = tally_item(item);
    total.consumed += t.consumed;
    total.produced += t.produced;
  }
  return total;
}

std::vector<long long> parse_instructions(const std::vector<std::string>& lines) {
  std::vector<long long> counts;
  for (size_t k = 0; k < lines.size(); ++k) {
    std::string_view line = lines[k];
    const std::string prefix = "Row " + std::to_string(k) + ": ";
    if (!line.starts_with(prefix)) throw DomainError("expected '" + prefix + "'");
    line.remove_prefix(prefix.size());
    const size_t dash = line.rfind(kDash);
    if (dash == std::string_view::npos) throw DomainError("missing stitch total");
    const std::string_view body = line.substr(0, dash);
    std::string_view total = line.substr(dash + kDash.size());
    if (!total.ends_with(" sts")) throw DomainError("missing 'sts' suffix");
    const long long stated = parse_count(total.substr(0, total.size() - 4));
    if (k == 0) {
      if (!body.starts_with("chain ") || !body.ends_with(", join")) {
        throw DomainError("foundation row must read 'chain N, join'");
      }
      const long long chain = parse_count(body.substr(6, body.size() - 6 - 6));
      if (chain != stated) throw DomainError("foundation total disagrees with chain");
      counts.push_back(chain);
      continue;
    }
    const RowTally t = parse_row_pattern(std::string(body));
    if (t.consumed != counts.back()) {
      throw DomainError("row " + std::to_string(k) + " works " + std::to_string(t.consumed) +
                        " stitches but the previous row has " + std::to_string(counts.back()));
    }
    if (t.produced != stated) {
      throw DomainError("row " + std::to_string(k) + " pattern makes " +
                        std::to_string(t.produced) + " stitches, line says " +
                        std::to_string(stated));
    }
    counts.push_back(t.produced);
  }
  return counts;
}

Curvature estimate_curvature(const CrochetSpec& spec) {
  spec.validate();
  const double growth = std::log1p(1.0 / spec.increase_every) / spec.gauge.row_height_mm;
  return Curvature(-growth * growth);
}

}  // namespace curvlab::crochet
