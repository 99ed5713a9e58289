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
#ifndef TRAJCOMPLY__GEOMETRY_HPP_
#define TRAJCOMPLY__GEOMETRY_HPP_

#include "trajcomply/types.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace trajcomply
{

inline constexpr double kVertexTolerance = 1e-9;

// Closed ring of vertices; edge i runs from vertex i to vertex (i + 1) % size().
// Winding order is irrelevant to every consumer.
class Polygon
{
public:
  // Throws ValidationError if there are fewer than 3 vertices, a coordinate is
  // non-finite, or two consecutive vertices (including last/first) coincide.
  explicit Polygon(std::vector<Vec2> vertices);

  const std::vector<Vec2> & vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  Vec2 edge_start(std::size_t i) const noexcept { return vertices_[i]; }
  Vec2 edge_end(std::size_t i) const noexcept { return vertices_[(i + 1) % vertices_.size()]; }

  friend bool operator==(const Polygon &, const Polygon &) = default;

private:
  std::vector<Vec2> vertices_;
};

struct EdgeRef
{
  Vec2 a;
  Vec2 b;
  std::uint32_t polygon = 0;
  std::uint32_t edge = 0;
};

namespace detail
{

// Uniform grid over the bounding box of all edges. Each cell lists the edges whose
// bounding box overlaps it, in ascending (polygon, edge) order. Rows double as
// horizontal slabs for the crossing-parity test.
class EdgeGrid
{
public:
  EdgeGrid() = default;
  explicit EdgeGrid(const std::vector<EdgeRef> & edges);

  int cols() const noexcept { return cols_; }
  int rows() const noexcept { return rows_; }
  double cell_size() const noexcept { return cell_; }
  Vec2 origin() const noexcept { return origin_; }

  int col_of(double x) const noexcept;
  int row_of(double y) const noexcept;

  const std::vector<std::uint32_t> & cell(int col, int row) const noexcept
  {
    return cells_[static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(col)];
  }
  const std::vector<std::uint32_t> & row_edges(int row) const noexcept
  {
    return row_edges_[static_cast<std::size_t>(row)];
  }

private:
  Vec2 origin_;
  double cell_ = 1.0;
  int cols_ = 0;
  int rows_ = 0;
  std::vector<std::vector<std::uint32_t>> cells_;
  std::vector<std::vector<std::uint32_t>> row_edges_;
};

}  // namespace detail

// Union of closed polygons with even-odd interior semantics (the drivable area).
// Inputs are expected to be non-overlapping rings; overlapping bounding boxes
// produce a warning, not an error.
class DrivableArea
{
public:
  // Throws ValidationError("polygons", ...) when empty.
  explicit DrivableArea(std::vector<Polygon> polygons);

  const std::vector<Polygon> & polygons() const noexcept { return polygons_; }
  const std::vector<EdgeRef> & edges() const noexcept { return edges_; }
  const std::vector<std::string> & warnings() const noexcept { return warnings_; }
  const detail::EdgeGrid & grid() const noexcept { return grid_; }

  friend bool operator==(const DrivableArea & a, const DrivableArea & b)
  {
    return a.polygons_ == b.polygons_;
  }

private:
  std::vector<Polygon> polygons_;
  std::vector<EdgeRef> edges_;
  std::vector<std::string> warnings_;
  detail::EdgeGrid grid_;
};

struct SignedDistanceResult
{
  // Negative inside the area, positive outside, 0 on the boundary.
  double distance = 0.0;
  Vec2 nearest_point;
  // Unit direction of increasing distance; (0, 0) when the query is on the boundary.
  Vec2 gradient;
  std::uint32_t polygon = 0;
  std::uint32_t edge = 0;
};

struct NearestEdge
{
  double distance = 0.0;
  Vec2 foot;
  std::uint32_t polygon = 0;
  std::uint32_t edge = 0;
};

// Closest point on segment [a, b] to p.
Vec2 closest_point_on_segment(const Vec2 & p, const Vec2 & a, const Vec2 & b) noexcept;

// Even-odd crossing parity of the +x ray from p. An edge counts iff exactly one
// endpoint lies strictly above p.y; the side test is exact.
bool point_in_area(const Vec2 & p, const DrivableArea & area) noexcept;

// Nearest boundary edge, ties to the lowest (polygon, edge). Uses the edge grid;
// the result is bit-identical to nearest_edge_brute_force.
NearestEdge nearest_edge(const Vec2 & p, const DrivableArea & area) noexcept;
NearestEdge nearest_edge_brute_force(const Vec2 & p, const DrivableArea & area) noexcept;

SignedDistanceResult signed_distance(const Vec2 & p, const DrivableArea & area) noexcept;
SignedDistanceResult signed_distance_brute_force(const Vec2 & p, const DrivableArea & area) noexcept;

}  // namespace trajcomply

#endif  // TRAJCOMPLY__GEOMETRY_HPP_
