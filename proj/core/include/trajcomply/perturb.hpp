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
#ifndef TRAJCOMPLY__PERTURB_HPP_
#define TRAJCOMPLY__PERTURB_HPP_

#include "trajcomply/map_model.hpp"
#include "trajcomply/types.hpp"

namespace trajcomply
{

// A bend injected into the road ahead of the ego agent.
struct TurnSpec
{
  double trigger_distance = 10.0;  // meters ahead of the ego along its heading
  double turn_angle = 0.0;         // radians, signed (positive = left)
  double arc_length = 10.0;        // meters over which the rotation ramps in

  // Throws ValidationError on out-of-range fields.
  void validate() const;
};

struct EgoFrame
{
  Vec2 origin;   // ego's last observed position
  Vec2 heading;  // unit vector
};

// Heading from the last non-stationary segment of the ego history.
// Throws DegenerateHeading when the history never moves.
EgoFrame ego_frame(const Scene & scene);

// Maps every map vertex at along-track coordinate u > trigger_distance by a
// rotation about the trigger point of turn_angle * clamp((u - trigger) / arc, 0, 1).
// Centerline yaw is rotated by the same angle. Histories and ground truth are
// left untouched. The result is re-validated.
Scene apply_turn(const Scene & scene, const TurnSpec & spec);

}  // namespace trajcomply

#endif  // TRAJCOMPLY__PERTURB_HPP_
