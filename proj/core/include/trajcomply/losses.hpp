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
#ifndef TRAJCOMPLY__LOSSES_HPP_
#define TRAJCOMPLY__LOSSES_HPP_

#include "trajcomply/geometry.hpp"
#include "trajcomply/map_model.hpp"
#include "trajcomply/types.hpp"

#include <span>
#include <vector>

namespace trajcomply
{

// Below this length a heading segment is treated as stationary.
inline constexpr double kMinHeadingSegment = 1e-6;

struct LossConfig
{
  double offroad_margin = 0.0;                   // m, meters
  double direction_dist_margin = 2.0;            // m_d, meters
  double direction_angle_margin = kPi / 12.0;    // m_theta, radians
  // Feasibility for the diversity filter requires phi + m <= 0 instead of phi <= 0.
  bool feasibility_uses_margin = false;

  // Throws ValidationError when a margin is negative or non-finite.
  void validate() const;
};

// Per-point field shaped like a PredictionSet: [mode][step].
using PointField = std::vector<std::vector<Vec2>>;

PointField zeros_like(const PredictionSet & preds);

struct LossValueAndGrad
{
  double value = 0.0;
  PointField grad;
};

struct AuxWeights
{
  double offroad = 1.0;
  double direction = 0.0;
  double diversity = 0.0;

  friend bool operator==(const AuxWeights &, const AuxWeights &) = default;
};

// Where a heading value comes from: the segment from point `from` to point `to`
// of the same trajectory, with -1 meaning "outside the trajectory" (a history
// point, or a constant heading when `to` is -1 as well).
struct HeadingSource
{
  double angle = 0.0;
  int from = -1;
  int to = -1;
};

// Heading of every step of `points`:
//  - gamma_t = atan2 of the segment (t-1 -> t) for t >= 2;
//  - gamma_1 uses the segment from the last history point when there is one,
//    otherwise gamma_1 = gamma_2;
//  - a segment shorter than kMinHeadingSegment carries the previous heading,
//    or 0 when there is none. A stationary first step with a history falls back
//    to the history's own last heading.
std::vector<HeadingSource> heading_sources(std::span<const Vec2> points, std::span<const Vec2> history = {});
std::vector<double> heading_of(std::span<const Vec2> points, std::span<const Vec2> history = {});

// Absolute angular difference wrapped into [0, pi].
double angle_difference(double a, double b) noexcept;

// (1/M) sum_i sum_t max(phi(y_t^i) + m, 0). Not averaged over t.
LossValueAndGrad offroad_loss(const PredictionSet & preds, const DrivableArea & area, const LossConfig & cfg);

// delta(c, y) = max(|c - y| - m_d, 0) + max(|theta_c - gamma| - m_theta, 0);
// value = (1/M) sum_i sum_t min over all centerline points of delta.
// Throws EmptyCenterlines when the set has no points.
LossValueAndGrad direction_consistency_loss(
  const PredictionSet & preds, const CenterlineSet & centerlines, const LossConfig & cfg,
  std::span<const Vec2> ego_history = {});

std::vector<bool> feasibility_indicator(
  const PredictionSet & preds, const DrivableArea & area, const LossConfig & cfg);

// Sum over unordered feasible pairs of the mean per-step distance. Grows as O(M^2).
LossValueAndGrad diversity_loss(const PredictionSet & preds, const std::vector<bool> & feasible);

struct AuxEvaluation
{
  LossValueAndGrad offroad;
  LossValueAndGrad direction;
  LossValueAndGrad diversity;
  std::vector<bool> feasible;
};

// All three auxiliary losses on the scene's map; feasibility is recomputed from preds.
AuxEvaluation evaluate_aux(const PredictionSet & preds, const Scene & scene, const LossConfig & cfg);

// w_off * offroad + w_dir * direction - w_div * diversity, and the matching gradient.
LossValueAndGrad combine(const AuxEvaluation & aux, const AuxWeights & weights);
LossValueAndGrad combined_aux_loss(
  const PredictionSet & preds, const Scene & scene, const LossConfig & cfg, const AuxWeights & weights);

}  // namespace trajcomply

#endif  // TRAJCOMPLY__LOSSES_HPP_
