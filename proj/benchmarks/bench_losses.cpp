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

#include "trajcomply/batch.hpp"
#include "trajcomply/losses.hpp"
#include "trajcomply/metrics.hpp"
#include "trajcomply/refine.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace
{

using namespace trajcomply;

const corpus::CorridorCorpus & corridor()
{
  static const corpus::CorridorCorpus c = corpus::make_corridor_corpus();
  return c;
}

const Scene & first_scene() { return corridor().scenes.front(); }
const PredictionSet & first_predictions() { return corridor().predictions.at(first_scene().id); }

void BM_Offroad(benchmark::State & state)
{
  const LossConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(offroad_loss(first_predictions(), first_scene().drivable, cfg));
  }
}

void BM_Direction(benchmark::State & state)
{
  const LossConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(direction_consistency_loss(
      first_predictions(), first_scene().centerlines, cfg, first_scene().ego_history().points));
  }
}

void BM_Diversity(benchmark::State & state)
{
  const auto feasible = feasibility_indicator(first_predictions(), first_scene().drivable, LossConfig{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(diversity_loss(first_predictions(), feasible));
  }
}

void BM_EvaluateScene(benchmark::State & state)
{
  const MetricsConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_scene(first_predictions(), first_scene(), cfg));
  }
}

void BM_BatchLosses(benchmark::State & state)
{
  const auto & c = corridor();
  std::vector<const Scene *> scenes;
  std::vector<double> flat;
  for (const auto & s : c.scenes) {
    scenes.push_back(&s);
    for (const auto & m : c.predictions.at(s.id).modes) {
      for (const auto & p : m.points) {
        flat.push_back(p.x);
        flat.push_back(p.y);
      }
    }
  }
  const PredictionSet & p0 = first_predictions();
  const BatchShape shape{scenes.size(), p0.num_modes(), p0.horizon()};
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(batch_losses(scenes, flat, shape, LossConfig{}, AuxWeights{1, 1, 1}, jobs));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(scenes.size()));
}

void BM_RefineScene(benchmark::State & state)
{
  RefineConfig cfg;
  cfg.alpha = 10.0;
  cfg.max_iters = static_cast<int>(state.range(0));
  cfg.convergence_tol = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(refine(first_predictions(), first_scene(), LossConfig{}, cfg));
  }
}

}  // namespace

BENCHMARK(BM_Offroad);
BENCHMARK(BM_Direction);
BENCHMARK(BM_Diversity);
BENCHMARK(BM_EvaluateScene);
BENCHMARK(BM_BatchLosses)->Arg(1)->Arg(4)->UseRealTime();
BENCHMARK(BM_RefineScene)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
