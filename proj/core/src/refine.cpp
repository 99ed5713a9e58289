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
#include "trajcomply/refine.hpp"

#include "trajcomply/errors.hpp"
#include "trajcomply/parallel.hpp"

#include <cmath>
#include <random>
#include <string>

namespace trajcomply
{

void RefineConfig::validate() const
{
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw ValidationError("alpha", "must be finite and >= 0");
  }
  if (!std::isfinite(weights.offroad) || !std::isfinite(weights.direction) ||
      !std::isfinite(weights.diversity)) {
    throw ValidationError("weights", "must be finite");
  }
  if (!std::isfinite(step_size) || step_size <= 0.0) {
    throw ValidationError("step_size", "must be finite and > 0");
  }
  if (max_iters < 1) {
    throw ValidationError("max_iters", "must be >= 1");
  }
  if (!(step_decay > 0.0 && step_decay <= 1.0)) {
    throw ValidationError("step_decay", "must lie in (0, 1]");
  }
  if (!std::isfinite(convergence_tol) || convergence_tol < 0.0) {
    throw ValidationError("convergence_tol", "must be finite and >= 0");
  }
  if (!std::isfinite(init_noise) || init_noise < 0.0) {
    throw ValidationError("init_noise", "must be finite and >= 0");
  }
  if (diversity_warmup_iters < 0) {
    throw ValidationError("diversity_warmup_iters", "must be >= 0");
  }
}

AuxWeights RefineConfig::weights_at(int iteration) const noexcept
{
  AuxWeights w = weights;
  if (iteration < diversity_warmup_iters) {
    w.diversity = 0.0;
  }
  return w;
}

LossValueAndGrad original_loss(const PredictionSet & preds, const Trajectory & gt)
{
  const ModeScore ade = min_ade(preds, gt);
  LossValueAndGrad out{ade.value, zeros_like(preds)};
  const double inv_t = 1.0 / static_cast<double>(gt.size());
  const auto & pts = preds.modes[ade.winner].points;
  for (std::size_t t = 0; t < pts.size(); ++t) {
    const Vec2 d = pts[t] - gt.points[t];
    const double len = norm(d);
    if (len > 0.0) {
      out.grad[ade.winner][t] = d * (inv_t / len);
    }
  }
  return out;
}

namespace
{

struct State
{
  TraceRecord record;
  PointField grad;  // gradient of L_final
};

State evaluate_state(
  const PredictionSet & preds, const Scene & scene, const LossConfig & loss_cfg, const RefineConfig & cfg,
  int iteration)
{
  const LossValueAndGrad orig = original_loss(preds, scene.ground_truth);
  const AuxEvaluation aux = evaluate_aux(preds, scene, loss_cfg);
  const LossValueAndGrad combined = combine(aux, cfg.weights_at(iteration));

  State s;
  s.record.iteration = iteration;
  s.record.original = orig.value;
  s.record.offroad = aux.offroad.value;
  s.record.direction = aux.direction.value;
  s.record.diversity = aux.diversity.value;
  s.record.aux = combined.value;
  s.record.final_loss = orig.value + cfg.alpha * combined.value;

  const std::pair<const char *, double> checks[] = {
    {"original", s.record.original},   {"offroad", s.record.offroad},
    {"direction", s.record.direction}, {"diversity", s.record.diversity},
    {"auxiliary", s.record.aux},       {"final", s.record.final_loss}};
  for (const auto & [name, value] : checks) {
    if (!std::isfinite(value)) {
      throw NonFiniteLoss(name, iteration);
    }
  }

  s.grad = orig.grad;
  for (std::size_t i = 0; i < s.grad.size(); ++i) {
    for (std::size_t t = 0; t < s.grad[i].size(); ++t) {
      s.grad[i][t] += combined.grad[i][t] * cfg.alpha;
    }
  }
  return s;
}

}  // namespace

RefineTrace refine(
  PredictionSet preds, const Scene & scene, const LossConfig & loss_cfg, const RefineConfig & cfg)
{
  cfg.validate();
  loss_cfg.validate();
  validate_against_horizon(preds, scene.horizon, "predictions");

  if (cfg.init_noise > 0.0) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> noise(0.0, cfg.init_noise);
    for (auto & mode : preds.modes) {
      for (auto & p : mode.points) {
        p.x += noise(rng);
        p.y += noise(rng);
      }
    }
  }

  RefineTrace trace;
  trace.records.reserve(static_cast<std::size_t>(cfg.max_iters) + 1);
  State state = evaluate_state(preds, scene, loss_cfg, cfg, 0);
  trace.records.push_back(state.record);

  double step = cfg.step_size;
  for (int it = 1; it <= cfg.max_iters; ++it) {
    for (std::size_t i = 0; i < preds.modes.size(); ++i) {
      for (std::size_t t = 0; t < preds.modes[i].points.size(); ++t) {
        preds.modes[i].points[t] -= state.grad[i][t] * step;
      }
    }
    step *= cfg.step_decay;
    const double previous = state.record.final_loss;
    state = evaluate_state(preds, scene, loss_cfg, cfg, it);
    trace.records.push_back(state.record);
    if (std::abs(state.record.final_loss - previous) < cfg.convergence_tol) {
      break;
    }
  }
  trace.final_predictions = std::move(preds);
  return trace;
}

std::vector<SweepRow> alpha_sweep(
  std::span<const SweepCase> cases, const LossConfig & loss_cfg, const RefineConfig & cfg,
  std::span<const double> alphas, int jobs, bool per_step_average)
{
  if (alphas.empty()) {
    throw ValidationError("alphas", "at least one alpha is required");
  }
  for (double a : alphas) {
    if (!std::isfinite(a) || a < 0.0) {
      throw ValidationError("alphas", "every alpha must be finite and >= 0");
    }
  }
  if (cases.empty()) {
    throw EmptyCorpus();
  }

  const std::size_t n_cases = cases.size();
  const MetricsConfig metrics_cfg{loss_cfg, per_step_average};
  std::vector<SceneReport> reports(alphas.size() * n_cases);
  parallel_for(reports.size(), jobs, [&](std::size_t k) {
    const std::size_t a = k / n_cases;
    const SweepCase & c = cases[k % n_cases];
    RefineConfig run = cfg;
    run.alpha = alphas[a];
    const RefineTrace trace = refine(c.predictions, *c.scene, loss_cfg, run);
    reports[k] = evaluate_scene(trace.final_predictions, *c.scene, metrics_cfg);
  });

  std::vector<SweepRow> rows;
  rows.reserve(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const std::vector<SceneReport> slice(
      reports.begin() + static_cast<std::ptrdiff_t>(a * n_cases),
      reports.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_cases));
    const CorpusReport corpus = aggregate(slice);
    rows.push_back({alphas[a], corpus.min_ade, corpus.offroad, corpus.direction, corpus.diversity});
  }
  return rows;
}

}  // namespace trajcomply
