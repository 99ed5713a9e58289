// Copyright 2026 The trajcomply Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Checks on the test oracles themselves.
#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace trajcomply
{
namespace
{

TEST(Oracle, DenseSamplerClosedFormMatchesScan)
{
  testing::Rng rng(101);
  for (int k = 0; k < 10; ++k) {
    const Polygon poly = testing::random_star_polygon(rng, {0, 0}, 3, 8, 3, 24);
    const oracle::Rings rings{poly.vertices()};
    const oracle::DenseBoundarySampler sampler(rings, 20000);
    for (int q = 0; q < 50; ++q) {
      const Vec2 p{testing::uniform(rng, -10, 10), testing::uniform(rng, -10, 10)};
      EXPECT_EQ(sampler.distance(p), sampler.distance_by_scan(p));
    }
  }
}

TEST(Oracle, DenseSamplerConvergesToSegmentDistance)
{
  testing::Rng rng(102);
  const Polygon poly = testing::random_star_polygon(rng, {0, 0}, 3, 8, 3, 24);
  const oracle::Rings rings{poly.vertices()};
  const oracle::DenseBoundarySampler sampler(rings, 1000000);
  EXPECT_LT(sampler.max_spacing(), 1e-4);
  for (int q = 0; q < 200; ++q) {
    const Vec2 p{testing::uniform(rng, -10, 10), testing::uniform(rng, -10, 10)};
    const double exact = oracle::boundary_distance(p, rings);
    EXPECT_GE(sampler.distance(p), exact - 1e-12);
    EXPECT_LE(sampler.distance(p), exact + sampler.max_spacing());
  }
}

TEST(Oracle, WindingNumber)
{
  const oracle::Ring ccw{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const oracle::Ring cw{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  EXPECT_EQ(oracle::winding_number({0.5, 0.5}, ccw), 1);
  EXPECT_EQ(oracle::winding_number({0.5, 0.5}, cw), -1);
  EXPECT_EQ(oracle::winding_number({2, 0.5}, ccw), 0);
  // Hole: even-odd union of two nested rings.
  const oracle::Rings nested{{{-2, -2}, {3, -2}, {3, 3}, {-2, 3}}, ccw};
  EXPECT_FALSE(oracle::inside({0.5, 0.5}, nested));
  EXPECT_TRUE(oracle::inside({2, 2}, nested));
  EXPECT_DOUBLE_EQ(oracle::signed_distance({2.5, 0.5}, nested), -0.5);
  EXPECT_DOUBLE_EQ(oracle::signed_distance({0.5, 0.5}, nested), 0.5);
}

TEST(Oracle, WrappedAngle)
{
  constexpr double pi = std::numbers::pi;
  EXPECT_NEAR(oracle::wrapped_angle(0.1, 2 * pi - 0.1), 0.2, 1e-12);
  EXPECT_NEAR(oracle::wrapped_angle(pi, -pi), 0.0, 1e-12);
  EXPECT_NEAR(oracle::wrapped_angle(pi / 2, -pi / 2), pi, 1e-12);
}

}  // namespace
}  // namespace trajcomply
