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
#include "corridor.hpp"

#include "trajcomply/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

namespace trajcomply::corpus
{

namespace
{

constexpr double kCorridorStart = -40.0;
constexpr double kCorridorEnd = 130.0;

struct Frame
{
  double yaw;

  Vec2 to_world(const Vec2 & local) const { return rotate(local, yaw); }
};

double uniform(std::mt19937_64 & rng, double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Trajectory lateral_profile(
  const Frame & frame, std::size_t horizon, double dt, double speed, double y0, double y_end, double power)
{
  Trajectory traj;
  traj.dt = dt;
  for (std::size_t t = 1; t <= horizon; ++t) {
    const double s = static_cast<double>(t) / static_cast<double>(horizon);
    const Vec2 local{speed * dt * static_cast<double>(t), y0 + (y_end - y0) * std::pow(s, power)};
    traj.points.push_back(frame.to_world(local));
  }
  return traj;
}

Scene make_scene(std::size_t index, const CorridorOptions & opt, std::mt19937_64 & rng, PredictionSet & preds,
                 PredictionSet & straight)
{
  char id[32];
  std::snprintf(id, sizeof(id), "corridor_%02zu", index);
  const Frame frame{uniform(rng, -kPi, kPi)};
  const double half_width = uniform(rng, 3.3, 3.8);
  const double lane_y = -half_width / 2.0;
  const double speed = uniform(rng, 6.0, 10.0);

  std::vector<Vec2> ring;
  const int n = static_cast<int>(kCorridorEnd - kCorridorStart);
  for (int i = 0; i <= n; ++i) {
    ring.push_back(frame.to_world({kCorridorStart + i, -half_width}));
  }
  for (int i = n; i >= 0; --i) {
    ring.push_back(frame.to_world({kCorridorStart + i, half_width}));
  }

  CenterlineSet centerlines;
  CenterlineSegment forward;
  CenterlineSegment oncoming;
  for (int i = 0; i <= n; ++i) {
    const Vec2 f = frame.to_world({kCorridorStart + i, lane_y});
    forward.push_back({f.x, f.y, normalize_angle(frame.yaw)});
    const Vec2 o = frame.to_world({kCorridorEnd - i, -lane_y});
    oncoming.push_back({o.x, o.y, normalize_angle(frame.yaw + kPi)});
  }
  centerlines.segments = {std::move(forward), std::move(oncoming)};

  Trajectory history;
  history.dt = opt.dt;
  for (std::size_t j = 0; j < opt.history; ++j) {
    const double back = static_cast<double>(opt.history - 1 - j);
    history.points.push_back(frame.to_world({-speed * opt.dt * back, lane_y}));
  }

  const double sway = uniform(rng, -0.4, 0.4);
  const Trajectory gt = lateral_profile(frame, opt.horizon, opt.dt, speed, lane_y, lane_y + sway, 2.0);

  std::vector<Trajectory> modes;
  // Winner: hugs the ground truth.
  {
    const double bias = uniform(rng, -0.25, 0.25);
    const double factor = uniform(rng, 0.99, 1.01);
    modes.push_back(
      lateral_profile(frame, opt.horizon, opt.dt, speed * factor, lane_y, lane_y + sway + bias, 2.0));
  }
  const std::size_t max_off = opt.modes - 1;
  const std::size_t min_off = std::min<std::size_t>(3, max_off);
  const std::size_t n_off = std::uniform_int_distribution<std::size_t>(min_off, max_off)(rng);
  for (std::size_t k = 0; k < n_off; ++k) {
    const bool faster = uniform(rng, 0.0, 1.0) < 0.5;
    const double factor = faster ? uniform(rng, 1.1, 1.3) : uniform(rng, 0.75, 0.9);
    const double side = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    const double y_end = side * (half_width + uniform(rng, 3.0, 10.0));
    modes.push_back(
      lateral_profile(frame, opt.horizon, opt.dt, speed * factor, lane_y, y_end, uniform(rng, 1.0, 2.0)));
  }
  while (modes.size() < opt.modes) {
    const bool faster = uniform(rng, 0.0, 1.0) < 0.5;
    const double factor = faster ? uniform(rng, 1.3, 1.45) : uniform(rng, 0.6, 0.75);
    const double y_end = uniform(rng, -half_width + 0.5, half_width - 0.5);
    modes.push_back(lateral_profile(frame, opt.horizon, opt.dt, speed * factor, lane_y, y_end, 1.0));
  }
  std::shuffle(modes.begin(), modes.end(), rng);
  preds.modes = std::move(modes);

  straight.modes.clear();
  for (std::size_t k = 0; k < opt.modes; ++k) {
    const double factor = 0.8 + 0.1 * static_cast<double>(k);
    straight.modes.push_back(lateral_profile(frame, opt.horizon, opt.dt, speed * factor, lane_y, lane_y, 1.0));
  }

  Scene scene{id,          opt.dt, opt.horizon, {std::move(history)}, DrivableArea({Polygon(std::move(ring))}),
              std::move(centerlines), gt};
  validate(scene);
  return scene;
}

}  // namespace

CorridorCorpus make_corridor_corpus(const CorridorOptions & options)
{
  CorridorCorpus corpus;
  for (std::size_t i = 0; i < options.scene_count; ++i) {
    std::mt19937_64 rng(options.seed * 1000003ULL + i);
    PredictionSet preds;
    PredictionSet straight;
    Scene scene = make_scene(i, options, rng, preds, straight);
    corpus.predictions.emplace(scene.id, std::move(preds));
    corpus.straight_ahead.emplace(scene.id, std::move(straight));
    corpus.scenes.push_back(std::move(scene));
  }
  return corpus;
}

void write_corpus(const CorridorCorpus & corpus, const std::filesystem::path & dir)
{
  std::filesystem::create_directories(dir / "scenes");
  for (const auto & scene : corpus.scenes) {
    save_scene(scene, dir / "scenes" / (scene.id + ".json"));
  }
  save_predictions(corpus.predictions, dir / "predictions.json");
  save_predictions(corpus.straight_ahead, dir / "straight_ahead.json");
}

std::vector<Scene> load_scene_dir(const std::filesystem::path & dir)
{
  std::vector<std::filesystem::path> files;
  for (const auto & entry : std::filesystem::directory_iterator(dir)) {
    const auto & p = entry.path();
    if (entry.is_regular_file() && p.extension() == ".json" && p.filename().string().front() != '_') {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Scene> scenes;
  scenes.reserve(files.size());
  for (const auto & f : files) {
    scenes.push_back(load_scene(f));
  }
  return scenes;
}

}  // namespace trajcomply::corpus
