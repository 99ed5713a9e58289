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
#include "trajcomply/losses.hpp"

#include "trajcomply/errors.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>

namespace trajcomply
{

void LossConfig::validate() const
{
  auto check = [](double v, const char * field) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError(field, "margin must be finite and non-negative");
    }
  };
  check(offroad_margin, "offroad_margin");
  check(direction_dist_margin, "direction_dist_margin");
  check(direction_angle_margin, "direction_angle_margin");
}

PointField zeros_like(const PredictionSet & preds)
{
  PointField field(preds.modes.size());
  for (std::size_t i = 0; i < preds.modes.size(); ++i) {
    field[i].assign(preds.modes[i].size(), Vec2{});
  }
  return field;
}

namespace
{

std::optional<double> segment_heading(const Vec2 & from, const Vec2 & to)
{
  const Vec2 d = to - from;
  if (norm(d) < kMinHeadingSegment) {
    return std::nullopt;
  }
  return std::atan2(d.y, d.x);
}

std::optional<double> history_heading(std::span<const Vec2> history)
{
  for (std::size_t i = history.size(); i >= 2; --i) {
    if (auto h = segment_heading(history[i - 2], history[i - 1])) {
      return h;
    }
  }
  return std::nullopt;
}

// d(atan2(dy, dx)) / d(to); the derivative w.r.t. `from` is its negation.
Vec2 heading_gradient(const Vec2 & from, const Vec2 & to)
{
  const Vec2 d = to - from;
  const double len2 = dot(d, d);
  return {-d.y / len2, d.x / len2};
}

}  // namespace

std::vector<HeadingSource> heading_sources(std::span<const Vec2> points, std::span<const Vec2> history)
{
  const int n = static_cast<int>(points.size());
  std::vector<HeadingSource> src(points.size());
  if (n == 0) {
    return src;
  }

  bool first_resolved = false;
  if (!history.empty()) {
    if (auto h = segment_heading(history.back(), points[0])) {
      src[0] = {*h, -1, 0};
      first_resolved = true;
    } else if (auto hh = history_heading(history)) {
      src[0] = {*hh, -1, -1};
      first_resolved = true;
    }
  }

  for (int t = 1; t < n; ++t) {
    if (auto h = segment_heading(points[static_cast<std::size_t>(t - 1)], points[static_cast<std::size_t>(t)])) {
      src[static_cast<std::size_t>(t)] = {*h, t - 1, t};
    } else if (t >= 2 || first_resolved) {
      src[static_cast<std::size_t>(t)] = src[static_cast<std::size_t>(t - 1)];
    } else {
      src[static_cast<std::size_t>(t)] = {0.0, -1, -1};
    }
  }

  if (!first_resolved) {
    src[0] = n >= 2 ? src[1] : HeadingSource{0.0, -1, -1};
  }
  return src;
}

std::vector<double> heading_of(std::span<const Vec2> points, std::span<const Vec2> history)
{
  const auto src = heading_sources(points, history);
  std::vector<double> out;
  out.reserve(src.size());
  for (const auto & s : src) {
    out.push_back(s.angle);
  }
  return out;
}

double angle_difference(double a, double b) noexcept { return std::abs(std::remainder(a - b, 2.0 * kPi)); }

LossValueAndGrad offroad_loss(const PredictionSet & preds, const DrivableArea & area, const LossConfig & cfg)
{
  LossValueAndGrad out{0.0, zeros_like(preds)};
  const double inv_m = 1.0 / static_cast<double>(preds.num_modes());
  double sum = 0.0;
  for (std::size_t i = 0; i < preds.modes.size(); ++i) {
    const auto & pts = preds.modes[i].points;
    for (std::size_t t = 0; t < pts.size(); ++t) {
      const SignedDistanceResult sd = signed_distance(pts[t], area);
      const double h = sd.distance + cfg.offroad_margin;
      if (h > 0.0) {
        sum += h;
        out.grad[i][t] = sd.gradient * inv_m;
      }
    }
  }
  out.value = sum * inv_m;
  return out;
}

LossValueAndGrad direction_consistency_loss(
  const PredictionSet & preds, const CenterlineSet & centerlines, const LossConfig & cfg,
  std::span<const Vec2> ego_history)
{
  if (centerlines.point_count() == 0) {
    throw EmptyCenterlines();
  }
  LossValueAndGrad out{0.0, zeros_like(preds)};
  const double inv_m = 1.0 / static_cast<double>(preds.num_modes());
  double sum = 0.0;

  for (std::size_t i = 0; i < preds.modes.size(); ++i) {
    const auto & pts = preds.modes[i].points;
    const auto headings = heading_sources(pts, ego_history);
    for (std::size_t t = 0; t < pts.size(); ++t) {
      const Vec2 y = pts[t];
      const double gamma = headings[t].angle;

      // Exhaustive min in (segment, point) order; strict < keeps the lowest index on ties.
      // The position term alone bounds delta from below, so candidates whose
      // bound already reaches the best cannot win.
      double best = std::numeric_limits<double>::infinity();
      const CenterlinePoint * best_c = nullptr;
      double best_dist = 0.0;
      for (const auto & seg : centerlines.segments) {
        for (const auto & c : seg) {
          const double dist = distance(c.position(), y);
          const double pos_term = std::max(dist - cfg.direction_dist_margin, 0.0);
          if (pos_term >= best) {
            continue;
          }
          const double ang_term =
            std::max(angle_difference(c.theta, gamma) - cfg.direction_angle_margin, 0.0);
          const double delta = pos_term + ang_term;
          if (delta < best) {
            best = delta;
            best_c = &c;
            best_dist = dist;
          }
        }
      }
      if (best_c == nullptr) {
        // Non-finite or overflowing input: no candidate compares below infinity.
        sum += std::isnan(y.x) || std::isnan(y.y) ? std::numeric_limits<double>::quiet_NaN() : best;
        continue;
      }
      sum += best;

      // Position hinge.
      if (best_dist - cfg.direction_dist_margin > 0.0 && best_dist > 0.0) {
        const Vec2 u = (y - best_c->position()) * (1.0 / best_dist);
        out.grad[i][t] += u * inv_m;
      }
      // Angle hinge, differentiated through atan2 of the heading segment.
      const HeadingSource & hs = headings[t];
      const double wrapped = std::remainder(best_c->theta - gamma, 2.0 * kPi);
      if (std::abs(wrapped) - cfg.direction_angle_margin > 0.0 && hs.to >= 0 && wrapped != 0.0) {
        // d|wrap(theta - gamma)| / d gamma = -sign(wrap(theta - gamma))
        const double d_gamma = wrapped > 0.0 ? -1.0 : 1.0;
        const Vec2 to = pts[static_cast<std::size_t>(hs.to)];
        const Vec2 from = hs.from >= 0 ? pts[static_cast<std::size_t>(hs.from)] : ego_history.back();
        const Vec2 g = heading_gradient(from, to) * (d_gamma * inv_m);
        out.grad[i][static_cast<std::size_t>(hs.to)] += g;
        if (hs.from >= 0) {
          out.grad[i][static_cast<std::size_t>(hs.from)] -= g;
        }
      }
    }
  }
  out.value = sum * inv_m;
  return out;
}

std::vector<bool> feasibility_indicator(
  const PredictionSet & preds, const DrivableArea & area, const LossConfig & cfg)
{
  const double margin = cfg.feasibility_uses_margin ? cfg.offroad_margin : 0.0;
  std::vector<bool> feasible(preds.modes.size(), true);
  for (std::size_t i = 0; i < preds.modes.size(); ++i) {
    for (const auto & p : preds.modes[i].points) {
      if (signed_distance(p, area).distance + margin > 0.0) {
        feasible[i] = false;
        break;
      }
    }
  }
  return feasible;
}

LossValueAndGrad diversity_loss(const PredictionSet & preds, const std::vector<bool> & feasible)
{
  if (feasible.size() != preds.modes.size()) {
    throw LengthMismatch(
      "feasibility indicator has " + std::to_string(feasible.size()) + " entries for " +
      std::to_string(preds.modes.size()) + " modes");
  }
  LossValueAndGrad out{0.0, zeros_like(preds)};
  const std::size_t horizon = preds.horizon();
  if (horizon == 0) {
    return out;
  }
  const double inv_t = 1.0 / static_cast<double>(horizon);
  double total = 0.0;
  for (std::size_t i = 0; i < preds.modes.size(); ++i) {
    if (!feasible[i]) {
      continue;
    }
    for (std::size_t j = i + 1; j < preds.modes.size(); ++j) {
      if (!feasible[j]) {
        continue;
      }
      double pair = 0.0;
      for (std::size_t t = 0; t < horizon; ++t) {
        const Vec2 d = preds.modes[i].points[t] - preds.modes[j].points[t];
        const double len = norm(d);
        pair += len;
        if (len > 0.0) {
          const Vec2 u = d * (inv_t / len);
          out.grad[i][t] += u;
          out.grad[j][t] -= u;
        }
      }
      total += pair * inv_t;
    }
  }
  out.value = total;
  return out;
}

AuxEvaluation evaluate_aux(const PredictionSet & preds, const Scene & scene, const LossConfig & cfg)
{
  AuxEvaluation aux;
  aux.offroad = offroad_loss(preds, scene.drivable, cfg);
  aux.direction =
    direction_consistency_loss(preds, scene.centerlines, cfg, scene.ego_history().points);
  aux.feasible = feasibility_indicator(preds, scene.drivable, cfg);
  aux.diversity = diversity_loss(preds, aux.feasible);
  return aux;
}

LossValueAndGrad combine(const AuxEvaluation & aux, const AuxWeights & weights)
{
  if (!std::isfinite(weights.offroad) || !std::isfinite(weights.direction) ||
      !std::isfinite(weights.diversity)) {
    throw ValidationError("weights", "auxiliary weights must be finite");
  }
  LossValueAndGrad out;
  out.value = weights.offroad * aux.offroad.value + weights.direction * aux.direction.value -
              weights.diversity * aux.diversity.value;
  out.grad = aux.offroad.grad;
  for (std::size_t i = 0; i < out.grad.size(); ++i) {
    for (std::size_t t = 0; t < out.grad[i].size(); ++t) {
      out.grad[i][t] = weights.offroad * aux.offroad.grad[i][t] +
                       weights.direction * aux.direction.grad[i][t] -
                       weights.diversity * aux.diversity.grad[i][t];
    }
  }
  return out;
}

LossValueAndGrad combined_aux_loss(
  const PredictionSet & preds, const Scene & scene, const LossConfig & cfg, const AuxWeights & weights)
{
  return combine(evaluate_aux(preds, scene, cfg), weights);
}

}  // namespace trajcomply
