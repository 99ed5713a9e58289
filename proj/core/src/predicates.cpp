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
#include "trajcomply/predicates.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace trajcomply
{
namespace
{

constexpr double kEpsilon = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
constexpr double kOrientErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;

struct TwoTerm
{
  double hi;
  double lo;
};

TwoTerm two_sum(double a, double b) noexcept
{
  const double s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  return {s, (a - av) + (b - bv)};
}

TwoTerm two_diff(double a, double b) noexcept { return two_sum(a, -b); }

TwoTerm two_product(double a, double b) noexcept
{
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Nonoverlapping expansion, components in increasing magnitude.
template <std::size_t N>
class Expansion
{
public:
  void grow(double b) noexcept
  {
    double q = b;
    std::size_t out = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      const TwoTerm t = two_sum(q, terms_[i]);
      q = t.hi;
      if (t.lo != 0.0) {
        terms_[out++] = t.lo;
      }
    }
    if (q != 0.0) {
      terms_[out++] = q;
    }
    size_ = out;
  }

  int sign() const noexcept
  {
    if (size_ == 0) {
      return 0;
    }
    const double top = terms_[size_ - 1];
    return top > 0.0 ? 1 : (top < 0.0 ? -1 : 0);
  }

private:
  std::array<double, N> terms_{};
  std::size_t size_ = 0;
};

int orient2d_exact(const Vec2 & a, const Vec2 & b, const Vec2 & c) noexcept
{
  const TwoTerm acx = two_diff(a.x, c.x);
  const TwoTerm bcx = two_diff(b.x, c.x);
  const TwoTerm acy = two_diff(a.y, c.y);
  const TwoTerm bcy = two_diff(b.y, c.y);

  const std::array<double, 2> ax{acx.hi, acx.lo};
  const std::array<double, 2> by{bcy.hi, bcy.lo};
  const std::array<double, 2> ay{acy.hi, acy.lo};
  const std::array<double, 2> bx{bcx.hi, bcx.lo};

  Expansion<16> det;
  for (double u : ax) {
    for (double v : by) {
      const TwoTerm p = two_product(u, v);
      det.grow(p.lo);
      det.grow(p.hi);
    }
  }
  for (double u : ay) {
    for (double v : bx) {
      const TwoTerm p = two_product(u, v);
      det.grow(-p.lo);
      det.grow(-p.hi);
    }
  }
  return det.sign();
}

}  // namespace

int orient2d(const Vec2 & a, const Vec2 & b, const Vec2 & c) noexcept
{
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  const double bound = kOrientErrBound * (std::abs(detleft) + std::abs(detright));
  if (det > bound) {
    return 1;
  }
  if (-det > bound) {
    return -1;
  }
  return orient2d_exact(a, b, c);
}

}  // namespace trajcomply
