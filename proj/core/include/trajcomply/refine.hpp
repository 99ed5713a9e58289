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
#ifndef TRAJCOMPLY__REFINE_HPP_
#define TRAJCOMPLY__REFINE_HPP_

#include "trajcomply/losses.hpp"
#include "trajcomply/map_model.hpp"
#include "trajcomply/metrics.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace trajcomply
{

// Gradient descent on L_final = L_original + alpha * L_aux, where
// L_aux = w_off * offroad + w_dir * direction - w_div * diversity.
struct RefineConfig
{
  double alpha = 1.0;
  AuxWeights weights;
  double step_size = 0.05;  // meters per unit gradient
  int max_iters = 300;
  double step_decay = 0.99;  // multiplicative, per iteration, in (0, 1]
  double convergence_tol = 1e-9;
  std::uint64_t seed = 0;
  // Standard deviation (m) of Gaussian noise added to the initial modes; 0 disables it.
  double init_noise = 0.0;
  // Diversity weight is zero for iterations before this one (finetuning-style warm start).
  int diversity_warmup_iters = 0;

  // Throws ValidationError on an out-of-range field.
  void validate() const;
  AuxWeights weights_at(int iteration) const noexcept;
};

struct TraceRecord
{
  int iteration = 0;
  double original = 0.0;
  double offroad = 0.0;
  double direction = 0.0;
  double diversity = 0.0;
  double aux = 0.0;
  double final_loss = 0.0;
};

struct RefineTrace
{
  std::vector<TraceRecord> records;  // records[0] is the initial state
  PredictionSet final_predictions;
};

// Winner-takes-all minADE: value = minADE, gradient only on the winning mode,
// (1/T) (y_t - gt_t) / |y_t - gt_t| per step (0 where they coincide).
LossValueAndGrad original_loss(const PredictionSet & preds, const Trajectory & gt);

// Stops after max_iters updates or when |delta L_final| < convergence_tol.
// Throws NonFiniteLoss naming the component that went non-finite.
RefineTrace refine(
  PredictionSet preds, const Scene & scene, const LossConfig & loss_cfg, const RefineConfig & cfg);

struct SweepCase
{
  const Scene * scene = nullptr;
  PredictionSet predictions;
};

struct SweepRow
{
  double alpha = 0.0;
  double min_ade = 0.0;
  double offroad = 0.0;
  double direction = 0.0;
  double diversity = 0.0;
};

// One refine run per (alpha, case) from the same initial predictions; rows hold
// corpus-mean metrics of the refined sets, in the order of `alphas`.
// `per_step_average` applies the metrics reporting scale to the rows.
std::vector<SweepRow> alpha_sweep(
  std::span<const SweepCase> cases, const LossConfig & loss_cfg, const RefineConfig & cfg,
  std::span<const double> alphas, int jobs = 1, bool per_step_average = false);

}  // namespace trajcomply

#endif  // TRAJCOMPLY__REFINE_HPP_
