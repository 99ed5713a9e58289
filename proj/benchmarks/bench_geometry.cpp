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
#include "trajcomply/geometry.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace
{

using trajcomply::DrivableArea;
using trajcomply::Polygon;
using trajcomply::Vec2;

// Star polygon with n vertices and jittered radius, centered at the origin.
DrivableArea star_area(int n)
{
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> radius(40.0, 60.0);
  std::vector<Vec2> ring;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    const double r = radius(rng);
    ring.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return DrivableArea({Polygon(ring)});
}

std::vector<Vec2> queries(std::size_t count)
{
  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> u(-70.0, 70.0);
  std::vector<Vec2> q(count);
  for (auto & p : q) {
    p = {u(rng), u(rng)};
  }
  return q;
}

void BM_SignedDistanceGrid(benchmark::State & state)
{
  const DrivableArea area = star_area(static_cast<int>(state.range(0)));
  const auto q = queries(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trajcomply::signed_distance(q[i++ & 1023], area));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_SignedDistanceBruteForce(benchmark::State & state)
{
  const DrivableArea area = star_area(static_cast<int>(state.range(0)));
  const auto q = queries(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trajcomply::signed_distance_brute_force(q[i++ & 1023], area));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_BuildArea(benchmark::State & state)
{
  for (auto _ : state) {
    benchmark::DoNotOptimize(star_area(static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_SignedDistanceGrid)->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK(BM_SignedDistanceBruteForce)->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK(BM_BuildArea)->RangeMultiplier(4)->Range(16, 4096);
