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
#ifndef TRAJCOMPLY__MAP_MODEL_HPP_
#define TRAJCOMPLY__MAP_MODEL_HPP_

#include "trajcomply/geometry.hpp"
#include "trajcomply/types.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace trajcomply
{

struct Trajectory
{
  std::vector<Vec2> points;
  double dt = 0.1;  // seconds per step

  std::size_t size() const noexcept { return points.size(); }

  friend bool operator==(const Trajectory &, const Trajectory &) = default;
};

// M candidate futures of identical length T.
struct PredictionSet
{
  std::vector<Trajectory> modes;

  std::size_t num_modes() const noexcept { return modes.size(); }
  std::size_t horizon() const noexcept { return modes.empty() ? 0 : modes.front().size(); }

  friend bool operator==(const PredictionSet &, const PredictionSet &) = default;
};

struct CenterlinePoint
{
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // radians, (-pi, pi]

  Vec2 position() const noexcept { return {x, y}; }

  friend bool operator==(const CenterlinePoint &, const CenterlinePoint &) = default;
};

using CenterlineSegment = std::vector<CenterlinePoint>;

struct CenterlineSet
{
  std::vector<CenterlineSegment> segments;

  std::size_t point_count() const noexcept;

  friend bool operator==(const CenterlineSet &, const CenterlineSet &) = default;
};

struct Scene
{
  std::string id;
  double dt = 0.1;
  std::size_t horizon = 0;
  // Agent 0 is the ego agent; neighbours are carried for completeness.
  std::vector<Trajectory> histories;
  DrivableArea drivable;
  CenterlineSet centerlines;
  Trajectory ground_truth;

  const Trajectory & ego_history() const { return histories.front(); }

  friend bool operator==(const Scene &, const Scene &) = default;
};

// Each throws ValidationError with a field path on the first violated invariant.
void validate(const Trajectory & traj, const std::string & field = "");
void validate(const PredictionSet & preds, const std::string & field = "");
void validate(const CenterlineSet & centerlines, const std::string & field = "centerlines");
void validate(const Scene & scene);

// Throws ValidationError unless preds has `horizon` steps per mode.
void validate_against_horizon(const PredictionSet & preds, std::size_t horizon, const std::string & field);

// Scenario files: UTF-8 JSON
//   {"id", "dt", "horizon", "histories", "drivable_area", "centerlines", "ground_truth"}
// Centerline theta values are normalized into (-pi, pi] on load.
Scene parse_scene(std::string_view json_text);
std::string serialize_scene(const Scene & scene);
Scene load_scene(const std::filesystem::path & path);
void save_scene(const Scene & scene, const std::filesystem::path & path);

using PredictionMap = std::map<std::string, PredictionSet>;

// Predictions files: {"scenes": [{"id", "modes": [[[x, y], ...], ...]}]}.
// Without a scene catalog the mode dt is left at its default; the catalog
// overloads enforce horizon agreement, copy dt and reject unknown ids.
PredictionMap parse_predictions(std::string_view json_text);
std::string serialize_predictions(const PredictionMap & predictions);
PredictionMap load_predictions(const std::filesystem::path & path);
PredictionMap load_predictions(
  const std::filesystem::path & path, const std::map<std::string, const Scene *> & scenes);
void bind_predictions(PredictionMap & predictions, const std::map<std::string, const Scene *> & scenes);
void save_predictions(const PredictionMap & predictions, const std::filesystem::path & path);

std::string read_text_file(const std::filesystem::path & path);
void write_text_file(const std::filesystem::path & path, std::string_view text);

}  // namespace trajcomply

#endif  // TRAJCOMPLY__MAP_MODEL_HPP_
