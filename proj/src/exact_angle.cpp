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

#include "curvlab/exact_angle.hpp"

#include <charconv>
#include <cstdlib>
#include <numbers>
#include <numeric>

#include "curvlab/error.hpp"

namespace curvlab::tiling {

namespace {

__extension__ using i128 = __int128;

std::int64_t checked(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("exact angle overflow");
  return static_cast<std::int64_t>(v);
}

ExactAngle make(i128 num, i128 den) {
  // Reduce in 128 bits before narrowing.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return ExactAngle(checked(num), checked(den));
}

}  // namespace

ExactAngle::ExactAngle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("exact angle with zero denominator");
  if (den < 0 && (num == INT64_MIN || den == INT64_MIN)) throw DomainError("exact angle overflow");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double ExactAngle::radians() const { return degrees() * std::numbers::pi / 180.0; }

std::string ExactAngle::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string ExactAngle::mixed() const {
  const std::int64_t whole = num_ / den_;
  const std::int64_t rest = std::abs(num_ % den_);
  if (rest == 0) return std::to_string(whole);
  std::string out = (num_ < 0 && whole == 0) ? "-" : "";
  if (whole != 0) out += std::to_string(whole) + " ";
  return out + std::to_string(rest) + "/" + std::to_string(den_);
}

ExactAngle ExactAngle::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw DomainError("expected num/den, got '" + text + "'");
  std::int64_t num = 0;
  std::int64_t den = 0;
  const char* begin = text.data();
  const char* mid = begin + slash;
  const char* end = begin + text.size();
  const auto r1 = std::from_chars(begin, mid, num);
  const auto r2 = std::from_chars(mid + 1, end, den);
  if (r1.ec != std::errc() || r1.ptr != mid || r2.ec != std::errc() || r2.ptr != end) {
    throw DomainError("expected num/den, got '" + text + "'");
  }
  return ExactAngle(num, den);
}

ExactAngle operator+(ExactAngle a, ExactAngle b) {
  return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

ExactAngle operator-(ExactAngle a, ExactAngle b) {
  return make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

ExactAngle operator*(std::int64_t k, ExactAngle a) {
  return make(static_cast<i128>(k) * a.num_, a.den_);
}

std::strong_ordering operator<=>(ExactAngle a, ExactAngle b) {
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace curvlab::tiling
