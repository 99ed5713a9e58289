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
#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace trajcomply::testing
{

double uniform(Rng & rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng & rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Polygon unit_square() { return rectangle(0.0, 0.0, 1.0, 1.0); }

Polygon rectangle(double x0, double y0, double x1, double y1)
{
  return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

Polygon random_star_polygon(Rng & rng, const Vec2 & center, double r_min, double r_max, int n_min, int n_max)
{
  const int n = uniform_int(rng, n_min, n_max);
  const double slot = 2.0 * kPi / n;
  const double phase = uniform(rng, 0.0, 2.0 * kPi);
  std::vector<Vec2> verts;
  verts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Jitter stays inside the slot so angles remain strictly increasing.
    const double a = phase + slot * (i + uniform(rng, 0.1, 0.9));
    const double r = uniform(rng, r_min, r_max);
    verts.push_back(center + Vec2{r * std::cos(a), r * std::sin(a)});
  }
  return Polygon(std::move(verts));
}

Trajectory make_trajectory(std::vector<Vec2> points, double dt) { return Trajectory{std::move(points), dt}; }

PredictionSet make_predictions(const std::vector<std::vector<Vec2>> & modes, double dt)
{
  PredictionSet set;
  for (const auto & m : modes) {
    set.modes.push_back(make_trajectory(m, dt));
  }
  return set;
}

CenterlineSet make_centerlines(const std::vector<std::vector<CenterlinePoint>> & segments)
{
  return CenterlineSet{segments};
}

Scene make_scene(
  std::string id, std::vector<Polygon> polygons, CenterlineSet centerlines, std::vector<Vec2> ego_history,
  std::vector<Vec2> ground_truth, double dt)
{
  const std::size_t horizon = ground_truth.size();
  return Scene{
    std::move(id),
    dt,
    horizon,
    {make_trajectory(std::move(ego_history), dt)},
    DrivableArea(std::move(polygons)),
    std::move(centerlines),
    make_trajectory(std::move(ground_truth), dt)};
}

Scene unit_square_scene(std::size_t horizon)
{
  std::vector<Vec2> gt;
  for (std::size_t t = 0; t < horizon; ++t) {
    gt.push_back({0.2 + 0.2 * static_cast<double>(t), 0.5});
  }
  return make_scene(
    "unit_square", {unit_square()}, make_centerlines({{{0.0, 0.5, 0.0}, {0.5, 0.5, 0.0}, {1.0, 0.5, 0.0}}}),
    {{0.0, 0.5}, {0.1, 0.5}}, gt);
}

std::vector<Vec2> random_walk(Rng & rng, Vec2 start, double heading, std::size_t steps, double step_len, double turn_sigma)
{
  std::normal_distribution<double> turn(0.0, turn_sigma);
  std::vector<Vec2> pts;
  pts.reserve(steps);
  Vec2 p = start;
  for (std::size_t t = 0; t < steps; ++t) {
    heading += turn(rng);
    const double len = step_len * uniform(rng, 0.6, 1.4);
    p += Vec2{len * std::cos(heading), len * std::sin(heading)};
    pts.push_back(p);
  }
  return pts;
}

RandomFixture random_fixture(std::uint64_t seed)
{
  Rng rng(seed * 7919 + 17);
  std::vector<Polygon> polygons;
  polygons.push_back(random_star_polygon(rng, {0.0, 0.0}, 4.0, 8.0, 5, 14));
  if (uniform(rng, 0.0, 1.0) < 0.5) {
    polygons.push_back(random_star_polygon(rng, {20.0, 0.0}, 2.0, 5.0, 3, 9));
  }

  std::vector<std::vector<CenterlinePoint>> segments;
  const int s_count = uniform_int(rng, 1, 3);
  for (int s = 0; s < s_count; ++s) {
    const Vec2 start{uniform(rng, -6.0, 6.0), uniform(rng, -6.0, 6.0)};
    double heading = uniform(rng, -kPi, kPi);
    const auto pts = random_walk(rng, start, heading, static_cast<std::size_t>(uniform_int(rng, 2, 15)), 1.0, 0.1);
    std::vector<CenterlinePoint> seg;
    Vec2 prev = start;
    for (const auto & p : pts) {
      const Vec2 d = p - prev;
      seg.push_back({p.x, p.y, normalize_angle(std::atan2(d.y, d.x) + uniform(rng, -0.2, 0.2))});
      prev = p;
    }
    segments.push_back(std::move(seg));
  }

  const double ego_heading = uniform(rng, -kPi, kPi);
  const Vec2 ego_end{uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0)};
  const Vec2 back{std::cos(ego_heading), std::sin(ego_heading)};
  std::vector<Vec2> history{ego_end - back * 1.6, ego_end - back * 0.8, ego_end};

  const std::size_t horizon = static_cast<std::size_t>(uniform_int(rng, 3, 10));
  const int modes = uniform_int(rng, 2, 6);
  std::vector<std::vector<Vec2>> mode_points;
  for (int i = 0; i < modes; ++i) {
    const double h = ego_heading + uniform(rng, -1.2, 1.2);
    mode_points.push_back(random_walk(rng, ego_end, h, horizon, uniform(rng, 0.3, 1.1), 0.3));
  }
  auto gt = random_walk(rng, ego_end, ego_heading, horizon, 0.7, 0.2);

  LossConfig cfg;
  cfg.offroad_margin = uniform(rng, 0.0, 0.5);
  cfg.direction_dist_margin = uniform(rng, 0.0, 1.5);
  cfg.direction_angle_margin = uniform(rng, 0.05, 0.4);
  cfg.feasibility_uses_margin = uniform(rng, 0.0, 1.0) < 0.5;

  Scene scene = make_scene(
    "random_" + std::to_string(seed), std::move(polygons), make_centerlines(segments), std::move(history),
    std::move(gt));
  PredictionSet preds = make_predictions(mode_points);
  return {std::move(scene), std::move(preds), cfg};
}

}  // namespace trajcomply::testing
