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
#ifndef TRAJCOMPLY__TESTS__FIXTURES_HPP_
#define TRAJCOMPLY__TESTS__FIXTURES_HPP_

#include "trajcomply/geometry.hpp"
#include "trajcomply/losses.hpp"
#include "trajcomply/map_model.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace trajcomply::testing
{

using Rng = std::mt19937_64;

double uniform(Rng & rng, double lo, double hi);
int uniform_int(Rng & rng, int lo, int hi);  // inclusive

Polygon unit_square();
Polygon rectangle(double x0, double y0, double x1, double y1);

// Simple polygon, star-shaped about `center`: sorted jittered angles, random radii.
Polygon random_star_polygon(Rng & rng, const Vec2 & center, double r_min, double r_max, int n_min, int n_max);

Trajectory make_trajectory(std::vector<Vec2> points, double dt = 0.1);
PredictionSet make_predictions(const std::vector<std::vector<Vec2>> & modes, double dt = 0.1);
CenterlineSet make_centerlines(const std::vector<std::vector<CenterlinePoint>> & segments);

Scene make_scene(
  std::string id, std::vector<Polygon> polygons, CenterlineSet centerlines, std::vector<Vec2> ego_history,
  std::vector<Vec2> ground_truth, double dt = 0.1);

// Minimal valid scene over the unit square with one centerline along +x.
Scene unit_square_scene(std::size_t horizon = 3);

// Random scene + predictions + margins for gradient and oracle checks.
struct RandomFixture
{
  Scene scene;
  PredictionSet preds;
  LossConfig cfg;
};

RandomFixture random_fixture(std::uint64_t seed);

// Random walk of `steps` points starting one step away from `start`.
std::vector<Vec2> random_walk(Rng & rng, Vec2 start, double heading, std::size_t steps, double step_len, double turn_sigma);

}  // namespace trajcomply::testing

#endif  // TRAJCOMPLY__TESTS__FIXTURES_HPP_
