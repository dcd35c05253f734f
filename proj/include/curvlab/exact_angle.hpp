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

#include <compare>
#include <cstdint>
#include <string>

namespace curvlab::tiling {

/// An angle in degrees held as a reduced rational num/den, den > 0.
class ExactAngle {
 public:
  constexpr ExactAngle() = default;
  /// Throws DomainError for a zero denominator.
  ExactAngle(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double degrees() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  double radians() const;
  int sign() const { return (num_ > 0) - (num_ < 0); }

  /// "num/den", always with the slash: "360/1", "2580/7", "-60/7".
  std::string str() const;
  /// Mixed-number rendering for people: "128 4/7", "-8 4/7", "360".
  std::string mixed() const;

  /// Parses the str() form. Throws DomainError on malformed text.
  static ExactAngle parse(const std::string& text);

  friend ExactAngle operator+(ExactAngle a, ExactAngle b);
  friend ExactAngle operator-(ExactAngle a, ExactAngle b);
  friend ExactAngle operator*(std::int64_t k, ExactAngle a);
  ExactAngle& operator+=(ExactAngle b) { return *this = *this + b; }

  friend bool operator==(ExactAngle a, ExactAngle b) = default;
  friend std::strong_ordering operator<=>(ExactAngle a, ExactAngle b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace curvlab::tiling
