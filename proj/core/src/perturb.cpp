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
#include "trajcomply/perturb.hpp"

#include "trajcomply/errors.hpp"
#include "trajcomply/losses.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace trajcomply
{

void TurnSpec::validate() const
{
  if (!std::isfinite(trigger_distance) || trigger_distance <= 0.0) {
    throw ValidationError("trigger_distance", "must be finite and > 0");
  }
  if (!std::isfinite(arc_length) || arc_length <= 0.0) {
    throw ValidationError("arc_length", "must be finite and > 0");
  }
  if (!std::isfinite(turn_angle) || std::abs(turn_angle) > kPi) {
    throw ValidationError("turn_angle", "must satisfy |angle| <= pi");
  }
}

EgoFrame ego_frame(const Scene & scene)
{
  const auto & pts = scene.ego_history().points;
  for (std::size_t i = pts.size(); i >= 2; --i) {
    const Vec2 d = pts[i - 1] - pts[i - 2];
    const double len = norm(d);
    if (len >= kMinHeadingSegment) {
      return {pts.back(), d * (1.0 / len)};
    }
  }
  throw DegenerateHeading();
}

namespace
{

struct TurnMap
{
  EgoFrame frame;
  Vec2 pivot;
  TurnSpec spec;

  // Rotation angle at v; exactly 0 for vertices at or behind the trigger.
  double angle_at(const Vec2 & v) const noexcept
  {
    const double u = dot(v - frame.origin, frame.heading);
    if (!(u > spec.trigger_distance)) {
      return 0.0;
    }
    const double ramp = std::clamp((u - spec.trigger_distance) / spec.arc_length, 0.0, 1.0);
    return spec.turn_angle * ramp;
  }

  Vec2 apply(const Vec2 & v, double angle) const noexcept { return pivot + rotate(v - pivot, angle); }
};

}  // namespace

Scene apply_turn(const Scene & scene, const TurnSpec & spec)
{
  spec.validate();
  const EgoFrame frame = ego_frame(scene);
  const TurnMap map{frame, frame.origin + frame.heading * spec.trigger_distance, spec};

  std::vector<Polygon> polygons;
  polygons.reserve(scene.drivable.polygons().size());
  for (std::size_t p = 0; p < scene.drivable.polygons().size(); ++p) {
    std::vector<Vec2> verts = scene.drivable.polygons()[p].vertices();
    for (auto & v : verts) {
      const double a = map.angle_at(v);
      if (a != 0.0) {
        v = map.apply(v, a);
      }
    }
    try {
      polygons.emplace_back(std::move(verts));
    } catch (const ValidationError & e) {
      throw e.prefixed("drivable_area.polygons[" + std::to_string(p) + "]");
    }
  }

  CenterlineSet centerlines = scene.centerlines;
  for (auto & seg : centerlines.segments) {
    for (auto & c : seg) {
      const double a = map.angle_at(c.position());
      if (a != 0.0) {
        const Vec2 q = map.apply(c.position(), a);
        c = {q.x, q.y, normalize_angle(c.theta + a)};
      }
    }
  }

  Scene out{scene.id,          scene.dt, scene.horizon, scene.histories, DrivableArea(std::move(polygons)),
            std::move(centerlines), scene.ground_truth};
  validate(out);
  return out;
}

}  // namespace trajcomply
