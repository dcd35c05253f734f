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

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

#include "curvlab/error.hpp"
#include "curvlab/exact_angle.hpp"

using curvlab::DomainError;
using curvlab::tiling::ExactAngle;

TEST(ExactAngle, ReducesToCanonicalForm) {
  const ExactAngle a(2580, 21);
  EXPECT_EQ(a.num(), 860);
  EXPECT_EQ(a.den(), 7);
  const ExactAngle b(6, -4);
  EXPECT_EQ(b.num(), -3);
  EXPECT_EQ(b.den(), 2);
  EXPECT_EQ(ExactAngle(0, -5), ExactAngle(0));
  EXPECT_THROW(ExactAngle(1, 0), DomainError);
}

TEST(ExactAngle, Formatting) {
  EXPECT_EQ(ExactAngle(360).str(), "360/1");
  EXPECT_EQ(ExactAngle(2580, 7).str(), "2580/7");
  EXPECT_EQ(ExactAngle(-60, 7).str(), "-60/7");
  EXPECT_EQ(ExactAngle(900, 7).mixed(), "128 4/7");
  EXPECT_EQ(ExactAngle(2580, 7).mixed(), "368 4/7");
  EXPECT_EQ(ExactAngle(-60, 7).mixed(), "-8 4/7");
  EXPECT_EQ(ExactAngle(-3, 7).mixed(), "-3/7");
  EXPECT_EQ(ExactAngle(360).mixed(), "360");
}

TEST(ExactAngle, ParseRoundTrip) {
  for (const char* s : {"360/1", "2580/7", "-60/7", "0/1"}) {
    EXPECT_EQ(ExactAngle::parse(s).str(), s);
  }
  EXPECT_EQ(ExactAngle::parse("4/6"), ExactAngle(2, 3));
  for (const char* bad : {"", "1/", "/2", "1/0", "a/b", "1/2/3", "1 /2", "12"}) {
    EXPECT_THROW(ExactAngle::parse(bad), DomainError) << bad;
  }
}

TEST(ExactAngle, ArithmeticMatchesRationalOracle) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const ExactAngle x(a, b), y(c, d);
    // Cross-multiplied equality avoids relying on reduction.
    const ExactAngle s = x + y;
    EXPECT_EQ(static_cast<__int128>(s.num()) * (b * d), static_cast<__int128>(a * d + c * b) * s.den());
    const ExactAngle t = x - y;
    EXPECT_EQ(static_cast<__int128>(t.num()) * (b * d), static_cast<__int128>(a * d - c * b) * t.den());
    EXPECT_EQ(x < y, static_cast<__int128>(a) * d < static_cast<__int128>(c) * b);
    EXPECT_EQ(3 * x, x + x + x);
  }
}

TEST(ExactAngle, OverflowIsReported) {
  const ExactAngle big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
  EXPECT_THROW(big + big, DomainError);
}

TEST(ExactAngle, Radians) {
  EXPECT_DOUBLE_EQ(ExactAngle(180).radians(), std::numbers::pi);
  EXPECT_DOUBLE_EQ(ExactAngle(900, 7).degrees(), 900.0 / 7.0);
}
