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
#ifndef TRAJCOMPLY__METRICS_HPP_
#define TRAJCOMPLY__METRICS_HPP_

#include "trajcomply/losses.hpp"
#include "trajcomply/map_model.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace trajcomply
{

// A scene is a miss when its minFDE strictly exceeds this many meters.
inline constexpr double kMissThreshold = 2.0;

struct MetricsConfig
{
  LossConfig loss;
  // Reporting only: divide Offroad and Direction by T. The losses themselves
  // always sum over steps.
  bool per_step_average = false;
};

struct ModeScore
{
  double value = 0.0;
  std::size_t winner = 0;
};

// min over modes of the mean per-step displacement; ties to the lowest mode.
// Throws LengthMismatch when a mode's length differs from gt.
ModeScore min_ade(const PredictionSet & preds, const Trajectory & gt);
ModeScore min_fde(const PredictionSet & preds, const Trajectory & gt);

struct QualityMetrics
{
  double offroad = 0.0;
  double direction = 0.0;
  double diversity = 0.0;
};

QualityMetrics quality_metrics(const PredictionSet & preds, const Scene & scene, const MetricsConfig & cfg);

struct SceneReport
{
  std::string id;
  double min_ade = 0.0;
  std::size_t ade_winner = 0;
  double min_fde = 0.0;
  std::size_t fde_winner = 0;
  bool miss = false;
  double offroad = 0.0;
  double direction = 0.0;
  double diversity = 0.0;
};

SceneReport evaluate_scene(const PredictionSet & preds, const Scene & scene, const MetricsConfig & cfg);

// Fraction of scenes whose minFDE > kMissThreshold. Throws EmptyCorpus.
double miss_rate(std::span<const SceneReport> reports);

struct CorpusReport
{
  std::size_t scene_count = 0;
  double min_ade = 0.0;
  double min_fde = 0.0;
  double miss_rate = 0.0;
  double offroad = 0.0;
  double direction = 0.0;
  double diversity = 0.0;
  std::vector<SceneReport> scenes;  // sorted by id
};

// Equal-weight means over scenes, folded in scene-id order. Throws EmptyCorpus.
CorpusReport aggregate(std::vector<SceneReport> reports);

}  // namespace trajcomply

#endif  // TRAJCOMPLY__METRICS_HPP_
