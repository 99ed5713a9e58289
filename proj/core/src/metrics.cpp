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
#include "trajcomply/metrics.hpp"

#include "trajcomply/errors.hpp"

#include <algorithm>
#include <string>

namespace trajcomply
{

namespace
{
void check_lengths(const PredictionSet & preds, const Trajectory & gt)
{
  if (preds.modes.empty()) {
    throw LengthMismatch("prediction set has no modes");
  }
  for (std::size_t m = 0; m < preds.modes.size(); ++m) {
    if (preds.modes[m].size() != gt.size() || gt.size() == 0) {
      throw LengthMismatch(
        "mode " + std::to_string(m) + " has " + std::to_string(preds.modes[m].size()) +
        " steps, ground truth has " + std::to_string(gt.size()));
    }
  }
}
}  // namespace

ModeScore min_ade(const PredictionSet & preds, const Trajectory & gt)
{
  check_lengths(preds, gt);
  const double inv_t = 1.0 / static_cast<double>(gt.size());
  ModeScore best{0.0, 0};
  for (std::size_t m = 0; m < preds.modes.size(); ++m) {
    double sum = 0.0;
    for (std::size_t t = 0; t < gt.size(); ++t) {
      sum += distance(preds.modes[m].points[t], gt.points[t]);
    }
    const double ade = sum * inv_t;
    if (m == 0 || ade < best.value) {
      best = {ade, m};
    }
  }
  return best;
}

ModeScore min_fde(const PredictionSet & preds, const Trajectory & gt)
{
  check_lengths(preds, gt);
  ModeScore best{0.0, 0};
  for (std::size_t m = 0; m < preds.modes.size(); ++m) {
    const double fde = distance(preds.modes[m].points.back(), gt.points.back());
    if (m == 0 || fde < best.value) {
      best = {fde, m};
    }
  }
  return best;
}

QualityMetrics quality_metrics(const PredictionSet & preds, const Scene & scene, const MetricsConfig & cfg)
{
  const AuxEvaluation aux = evaluate_aux(preds, scene, cfg.loss);
  QualityMetrics q{aux.offroad.value, aux.direction.value, aux.diversity.value};
  if (cfg.per_step_average && preds.horizon() > 0) {
    const double t = static_cast<double>(preds.horizon());
    q.offroad /= t;
    q.direction /= t;
  }
  return q;
}

SceneReport evaluate_scene(const PredictionSet & preds, const Scene & scene, const MetricsConfig & cfg)
{
  SceneReport r;
  r.id = scene.id;
  const ModeScore ade = min_ade(preds, scene.ground_truth);
  const ModeScore fde = min_fde(preds, scene.ground_truth);
  r.min_ade = ade.value;
  r.ade_winner = ade.winner;
  r.min_fde = fde.value;
  r.fde_winner = fde.winner;
  r.miss = fde.value > kMissThreshold;
  const QualityMetrics q = quality_metrics(preds, scene, cfg);
  r.offroad = q.offroad;
  r.direction = q.direction;
  r.diversity = q.diversity;
  return r;
}

double miss_rate(std::span<const SceneReport> reports)
{
  if (reports.empty()) {
    throw EmptyCorpus();
  }
  std::size_t misses = 0;
  for (const auto & r : reports) {
    if (r.min_fde > kMissThreshold) {
      ++misses;
    }
  }
  return static_cast<double>(misses) / static_cast<double>(reports.size());
}

CorpusReport aggregate(std::vector<SceneReport> reports)
{
  if (reports.empty()) {
    throw EmptyCorpus();
  }
  std::stable_sort(reports.begin(), reports.end(), [](const SceneReport & a, const SceneReport & b) {
    return a.id < b.id;
  });
  CorpusReport c;
  c.scene_count = reports.size();
  for (const auto & r : reports) {
    c.min_ade += r.min_ade;
    c.min_fde += r.min_fde;
    c.offroad += r.offroad;
    c.direction += r.direction;
    c.diversity += r.diversity;
  }
  const double n = static_cast<double>(reports.size());
  c.min_ade /= n;
  c.min_fde /= n;
  c.offroad /= n;
  c.direction /= n;
  c.diversity /= n;
  c.miss_rate = miss_rate(reports);
  c.scenes = std::move(reports);
  return c;
}

}  // namespace trajcomply
