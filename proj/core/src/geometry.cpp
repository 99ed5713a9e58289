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
#include "trajcomply/geometry.hpp"

#include "trajcomply/errors.hpp"
#include "trajcomply/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace trajcomply
{

Polygon::Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices))
{
  if (vertices_.size() < 3) {
    throw ValidationError(
      "", "polygon needs at least 3 vertices, got " + std::to_string(vertices_.size()));
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_finite(vertices_[i])) {
      throw ValidationError("[" + std::to_string(i) + "]", "non-finite vertex coordinate");
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec2 & a = vertices_[i];
    const Vec2 & b = vertices_[(i + 1) % vertices_.size()];
    if (distance(a, b) <= kVertexTolerance) {
      throw ValidationError(
        "[" + std::to_string(i) + "]", "consecutive vertices coincide (closing edge included)");
    }
  }
}

namespace detail
{

namespace
{
constexpr int kMaxGridDim = 1024;
}

EdgeGrid::EdgeGrid(const std::vector<EdgeRef> & edges)
{
  if (edges.empty()) {
    return;
  }
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto & e : edges) {
    min_x = std::min({min_x, e.a.x, e.b.x});
    min_y = std::min({min_y, e.a.y, e.b.y});
    max_x = std::max({max_x, e.a.x, e.b.x});
    max_y = std::max({max_y, e.a.y, e.b.y});
  }
  const double width = max_x - min_x;
  const double height = max_y - min_y;
  // Roughly one edge per cell.
  const double n = static_cast<double>(edges.size());
  double cell = std::sqrt(std::max(width * height, 1e-12) / n);
  cell = std::max({cell, width / kMaxGridDim, height / kMaxGridDim, 1e-9});
  cell_ = cell;
  origin_ = {min_x, min_y};
  cols_ = std::clamp(static_cast<int>(std::floor(width / cell)) + 1, 1, kMaxGridDim);
  rows_ = std::clamp(static_cast<int>(std::floor(height / cell)) + 1, 1, kMaxGridDim);
  cells_.assign(static_cast<std::size_t>(cols_) * static_cast<std::size_t>(rows_), {});
  row_edges_.assign(static_cast<std::size_t>(rows_), {});

  for (std::uint32_t idx = 0; idx < edges.size(); ++idx) {
    const auto & e = edges[idx];
    const int c0 = col_of(std::min(e.a.x, e.b.x));
    const int c1 = col_of(std::max(e.a.x, e.b.x));
    const int r0 = row_of(std::min(e.a.y, e.b.y));
    const int r1 = row_of(std::max(e.a.y, e.b.y));
    for (int r = r0; r <= r1; ++r) {
      row_edges_[static_cast<std::size_t>(r)].push_back(idx);
      for (int c = c0; c <= c1; ++c) {
        cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c)]
          .push_back(idx);
      }
    }
  }
}

int EdgeGrid::col_of(double x) const noexcept
{
  const double f = std::floor((x - origin_.x) / cell_);
  if (!(f >= 0.0)) {
    return 0;
  }
  return f >= cols_ - 1 ? cols_ - 1 : static_cast<int>(f);
}

int EdgeGrid::row_of(double y) const noexcept
{
  const double f = std::floor((y - origin_.y) / cell_);
  if (!(f >= 0.0)) {
    return 0;
  }
  return f >= rows_ - 1 ? rows_ - 1 : static_cast<int>(f);
}

}  // namespace detail

DrivableArea::DrivableArea(std::vector<Polygon> polygons) : polygons_(std::move(polygons))
{
  if (polygons_.empty()) {
    throw ValidationError("polygons", "drivable area needs at least one polygon");
  }
  struct Box
  {
    double min_x, min_y, max_x, max_y;
  };
  std::vector<Box> boxes;
  boxes.reserve(polygons_.size());
  for (std::uint32_t p = 0; p < polygons_.size(); ++p) {
    const Polygon & poly = polygons_[p];
    Box box{
      std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
      -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (std::uint32_t e = 0; e < poly.size(); ++e) {
      edges_.push_back({poly.edge_start(e), poly.edge_end(e), p, e});
      const Vec2 v = poly.edge_start(e);
      box = {std::min(box.min_x, v.x), std::min(box.min_y, v.y), std::max(box.max_x, v.x),
             std::max(box.max_y, v.y)};
    }
    boxes.push_back(box);
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      const bool overlap = boxes[i].min_x < boxes[j].max_x && boxes[j].min_x < boxes[i].max_x &&
                           boxes[i].min_y < boxes[j].max_y && boxes[j].min_y < boxes[i].max_y;
      if (overlap) {
        warnings_.push_back(
          "polygons[" + std::to_string(i) + "] and polygons[" + std::to_string(j) +
          "] have overlapping bounding boxes; interior uses even-odd parity");
      }
    }
  }
  grid_ = detail::EdgeGrid(edges_);
}

Vec2 closest_point_on_segment(const Vec2 & p, const Vec2 & a, const Vec2 & b) noexcept
{
  const Vec2 d = b - a;
  const double len2 = dot(d, d);
  if (len2 <= 0.0) {
    return a;
  }
  const double t = dot(p - a, d) / len2;
  if (t <= 0.0) {
    return a;
  }
  if (t >= 1.0) {
    return b;
  }
  return {a.x + t * d.x, a.y + t * d.y};
}

namespace
{

struct Candidate
{
  double distance;
  Vec2 foot;
  std::uint32_t index;
};

Candidate evaluate_edge(const Vec2 & p, const EdgeRef & e, std::uint32_t index) noexcept
{
  const Vec2 foot = closest_point_on_segment(p, e.a, e.b);
  return {distance(p, foot), foot, index};
}

// Strict ordering by distance, then by flattened (polygon, edge) index.
bool better(const Candidate & c, const Candidate & best) noexcept
{
  return c.distance < best.distance || (c.distance == best.distance && c.index < best.index);
}

NearestEdge to_result(const Candidate & c, const DrivableArea & area) noexcept
{
  const EdgeRef & e = area.edges()[c.index];
  return {c.distance, c.foot, e.polygon, e.edge};
}

SignedDistanceResult finish(const Vec2 & p, const NearestEdge & n, const DrivableArea & area) noexcept
{
  SignedDistanceResult r;
  r.nearest_point = n.foot;
  r.polygon = n.polygon;
  r.edge = n.edge;
  if (n.distance == 0.0) {
    r.distance = 0.0;
    r.gradient = {0.0, 0.0};
    return r;
  }
  const bool inside = point_in_area(p, area);
  const Vec2 away{(p.x - n.foot.x) / n.distance, (p.y - n.foot.y) / n.distance};
  r.distance = inside ? -n.distance : n.distance;
  r.gradient = inside ? -away : away;
  return r;
}

}  // namespace

bool point_in_area(const Vec2 & p, const DrivableArea & area) noexcept
{
  const auto & grid = area.grid();
  const auto & edges = area.edges();
  // Rows clamp at the grid border; an out-of-range p.y straddles no edge.
  bool inside = false;
  for (const std::uint32_t idx : grid.row_edges(grid.row_of(p.y))) {
    const EdgeRef & e = edges[idx];
    const bool a_above = e.a.y > p.y;
    const bool b_above = e.b.y > p.y;
    if (a_above == b_above) {
      continue;
    }
    const int side = orient2d(e.a, e.b, p);
    // Upward edge: the crossing lies right of p iff p is left of a->b.
    if (b_above ? side > 0 : side < 0) {
      inside = !inside;
    }
  }
  return inside;
}

NearestEdge nearest_edge_brute_force(const Vec2 & p, const DrivableArea & area) noexcept
{
  const auto & edges = area.edges();
  Candidate best = evaluate_edge(p, edges[0], 0);
  for (std::uint32_t i = 1; i < edges.size(); ++i) {
    const Candidate c = evaluate_edge(p, edges[i], i);
    if (better(c, best)) {
      best = c;
    }
  }
  return to_result(best, area);
}

NearestEdge nearest_edge(const Vec2 & p, const DrivableArea & area) noexcept
{
  const auto & grid = area.grid();
  const auto & edges = area.edges();
  const int cols = grid.cols();
  const int rows = grid.rows();
  const double h = grid.cell_size();
  const Vec2 o = grid.origin();
  const int pc = grid.col_of(p.x);
  const int pr = grid.row_of(p.y);

  // Absorbs rounding in the cell-index computation.
  const double slack = 1e-12 * (1.0 + std::abs(p.x) + std::abs(p.y) + std::abs(o.x) + std::abs(o.y) +
                                h * (cols + rows));

  Candidate best{std::numeric_limits<double>::infinity(), {}, std::numeric_limits<std::uint32_t>::max()};
  auto scan = [&](int c, int r) {
    for (const std::uint32_t idx : grid.cell(c, r)) {
      const Candidate cand = evaluate_edge(p, edges[idx], idx);
      if (better(cand, best)) {
        best = cand;
      }
    }
  };

  for (int ring = 0;; ++ring) {
    const int c0 = pc - ring;
    const int c1 = pc + ring;
    const int r0 = pr - ring;
    const int r1 = pr + ring;
    for (int r = std::max(r0, 0); r <= std::min(r1, rows - 1); ++r) {
      if (r == r0 || r == r1) {
        for (int c = std::max(c0, 0); c <= std::min(c1, cols - 1); ++c) {
          scan(c, r);
        }
      } else {
        if (c0 >= 0) {
          scan(c0, r);
        }
        if (c1 < cols) {
          scan(c1, r);
        }
      }
    }
    // Lower bound on the distance to any edge registered only in unvisited cells:
    // the gap between p and each side of the visited block that still has cells
    // beyond it.
    double bound = std::numeric_limits<double>::infinity();
    bool more = false;
    if (c0 > 0) {
      bound = std::min(bound, p.x - (o.x + h * c0));
      more = true;
    }
    if (c1 < cols - 1) {
      bound = std::min(bound, (o.x + h * (c1 + 1)) - p.x);
      more = true;
    }
    if (r0 > 0) {
      bound = std::min(bound, p.y - (o.y + h * r0));
      more = true;
    }
    if (r1 < rows - 1) {
      bound = std::min(bound, (o.y + h * (r1 + 1)) - p.y);
      more = true;
    }
    if (!more || best.distance < bound - slack) {
      break;
    }
  }
  if (best.index == std::numeric_limits<std::uint32_t>::max()) {
    // NaN or overflowing query: nothing compared below infinity. Same answer as the scan.
    best = evaluate_edge(p, edges[0], 0);
  }
  return to_result(best, area);
}

SignedDistanceResult signed_distance(const Vec2 & p, const DrivableArea & area) noexcept
{
  return finish(p, nearest_edge(p, area), area);
}

SignedDistanceResult signed_distance_brute_force(const Vec2 & p, const DrivableArea & area) noexcept
{
  return finish(p, nearest_edge_brute_force(p, area), area);
}

}  // namespace trajcomply
