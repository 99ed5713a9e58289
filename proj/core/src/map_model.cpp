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
#include "trajcomply/map_model.hpp"

#include "trajcomply/errors.hpp"

#include <cmath>
#include <string>

namespace trajcomply
{

namespace
{
std::string join(const std::string & parent, const std::string & child)
{
  if (parent.empty()) {
    return child;
  }
  if (!child.empty() && child.front() == '[') {
    return parent + child;
  }
  return parent + "." + child;
}

std::string index(std::size_t i) { return "[" + std::to_string(i) + "]"; }
}  // namespace

std::size_t CenterlineSet::point_count() const noexcept
{
  std::size_t n = 0;
  for (const auto & seg : segments) {
    n += seg.size();
  }
  return n;
}

void validate(const Trajectory & traj, const std::string & field)
{
  if (traj.points.empty()) {
    throw ValidationError(field, "trajectory needs at least one point");
  }
  if (!(traj.dt > 0.0) || !std::isfinite(traj.dt)) {
    throw ValidationError(join(field, "dt"), "time step must be finite and positive");
  }
  for (std::size_t t = 0; t < traj.points.size(); ++t) {
    if (!is_finite(traj.points[t])) {
      throw ValidationError(join(field, index(t)), "non-finite coordinate");
    }
  }
}

void validate(const PredictionSet & preds, const std::string & field)
{
  if (preds.modes.empty()) {
    throw ValidationError(join(field, "modes"), "prediction set needs at least one mode");
  }
  const std::size_t horizon = preds.modes.front().size();
  const double dt = preds.modes.front().dt;
  for (std::size_t m = 0; m < preds.modes.size(); ++m) {
    const std::string path = join(field, "modes" + index(m));
    validate(preds.modes[m], path);
    if (preds.modes[m].size() != horizon) {
      throw ValidationError(
        path, "mode has " + std::to_string(preds.modes[m].size()) + " steps, expected " +
                std::to_string(horizon));
    }
    if (preds.modes[m].dt != dt) {
      throw ValidationError(join(path, "dt"), "modes disagree on the time step");
    }
  }
}

void validate_against_horizon(const PredictionSet & preds, std::size_t horizon, const std::string & field)
{
  validate(preds, field);
  if (preds.horizon() != horizon) {
    throw ValidationError(
      join(field, "modes"), "modes have " + std::to_string(preds.horizon()) +
                              " steps but the scene horizon is " + std::to_string(horizon));
  }
}

void validate(const CenterlineSet & centerlines, const std::string & field)
{
  if (centerlines.segments.empty()) {
    throw ValidationError(field, "at least one centerline segment is required");
  }
  for (std::size_t s = 0; s < centerlines.segments.size(); ++s) {
    const auto & seg = centerlines.segments[s];
    if (seg.empty()) {
      throw ValidationError(join(field, index(s)), "centerline segment is empty");
    }
    for (std::size_t k = 0; k < seg.size(); ++k) {
      const auto & c = seg[k];
      if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.theta)) {
        throw ValidationError(join(field, index(s) + index(k)), "non-finite centerline value");
      }
      if (!(c.theta > -kPi && c.theta <= kPi)) {
        throw ValidationError(join(field, index(s) + index(k)), "theta outside (-pi, pi]");
      }
    }
  }
}

void validate(const Scene & scene)
{
  if (!(scene.dt > 0.0) || !std::isfinite(scene.dt)) {
    throw ValidationError("dt", "time step must be finite and positive");
  }
  if (scene.horizon == 0) {
    throw ValidationError("horizon", "horizon must be at least 1");
  }
  if (scene.histories.empty()) {
    throw ValidationError("histories", "the ego history (agent 0) is required");
  }
  for (std::size_t a = 0; a < scene.histories.size(); ++a) {
    validate(scene.histories[a], "histories" + index(a));
  }
  validate(scene.centerlines, "centerlines");
  validate(scene.ground_truth, "ground_truth");
  if (scene.ground_truth.size() != scene.horizon) {
    throw ValidationError(
      "ground_truth", "has " + std::to_string(scene.ground_truth.size()) +
                        " steps but the horizon is " + std::to_string(scene.horizon));
  }
}

}  // namespace trajcomply
