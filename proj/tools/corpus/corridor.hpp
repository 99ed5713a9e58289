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
#ifndef TRAJCOMPLY__TOOLS__CORRIDOR_HPP_
#define TRAJCOMPLY__TOOLS__CORRIDOR_HPP_

#include "trajcomply/map_model.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace trajcomply::corpus
{

struct CorridorOptions
{
  std::size_t scene_count = 20;
  std::uint64_t seed = 7;
  std::size_t modes = 6;
  std::size_t horizon = 30;
  std::size_t history = 10;
  double dt = 0.2;
};

// Straight two-lane corridors (right lane heads forward, left lane is oncoming),
// each rotated by a random yaw with the ego's last observed position at the origin.
// In every scene one mode tracks the ground truth on the road, between 3 and
// M - 1 modes drift off the road, and the rest stay on the road at a different
// speed.
struct CorridorCorpus
{
  std::vector<Scene> scenes;
  PredictionMap predictions;
  PredictionMap straight_ahead;  // modes along the ego heading at several speeds
};

CorridorCorpus make_corridor_corpus(const CorridorOptions & options = {});

// Writes scenes/<id>.json, predictions.json and straight_ahead.json under `dir`.
void write_corpus(const CorridorCorpus & corpus, const std::filesystem::path & dir);

// Loads every *.json scenario in `dir`, sorted by file name.
std::vector<Scene> load_scene_dir(const std::filesystem::path & dir);

}  // namespace trajcomply::corpus

#endif  // TRAJCOMPLY__TOOLS__CORRIDOR_HPP_
