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

#ifndef TRAJCOMPLY__TYPES_HPP_
#define TRAJCOMPLY__TYPES_HPP_

#include <cmath>
#include <numbers>

namespace trajcomply
{

inline constexpr double kPi = std::numbers::pi;

struct Vec2
{
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 & operator+=(const Vec2 & o) noexcept
  {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2 & operator-=(const Vec2 & o) noexcept
  {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2 & operator*=(double s) noexcept
  {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr bool operator==(const Vec2 &, const Vec2 &) = default;
};

constexpr Vec2 operator+(Vec2 a, const Vec2 & b) noexcept { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2 & b) noexcept { return a -= b; }
constexpr Vec2 operator-(const Vec2 & a) noexcept { return {-a.x, -a.y}; }
constexpr Vec2 operator*(Vec2 a, double s) noexcept { return a *= s; }
constexpr Vec2 operator*(double s, Vec2 a) noexcept { return a *= s; }

constexpr double dot(const Vec2 & a, const Vec2 & b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2 & a, const Vec2 & b) noexcept { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2 & a) noexcept { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double distance(const Vec2 & a, const Vec2 & b) noexcept { return norm(a - b); }
inline bool is_finite(const Vec2 & a) noexcept { return std::isfinite(a.x) && std::isfinite(a.y); }

// Wraps an angle into (-pi, pi].
inline double normalize_angle(double theta) noexcept
{
  double r = std::remainder(theta, 2.0 * kPi);
  if (r <= -kPi) {
    r = kPi;
  }
  return r;
}

inline Vec2 rotate(const Vec2 & v, double angle) noexcept
{
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace trajcomply

#endif  // TRAJCOMPLY__TYPES_HPP_
