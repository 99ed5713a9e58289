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
#ifndef TRAJCOMPLY__PREDICATES_HPP_
#define TRAJCOMPLY__PREDICATES_HPP_

#include "trajcomply/types.hpp"

namespace trajcomply
{

// Exact sign of the orientation determinant (b - a) x (c - a):
// +1 if c lies left of the directed line a->b, -1 if right, 0 if collinear.
// A floating-point filter handles the common case; near-degenerate inputs fall
// back to exact expansion arithmetic.
int orient2d(const Vec2 & a, const Vec2 & b, const Vec2 & c) noexcept;

}  // namespace trajcomply

#endif  // TRAJCOMPLY__PREDICATES_HPP_
