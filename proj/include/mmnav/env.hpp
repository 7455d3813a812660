// Copyright 2026 The mmnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MMNAV_ENV_HPP
#define MMNAV_ENV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mmnav/vec.hpp"

namespace mmnav {

/// Axis-aligned box. Construction enforces min < max on every axis.
class Aabb {
 public:
  Aabb(const Vec3& min, const Vec3& max);

  const Vec3& min() const { return min_; }
  const Vec3& max() const { return max_; }

  bool contains(const Vec3& p) const;
  /// Euclidean distance from p to the closed box; 0 inside.
  double distance(const Vec3& p) const;
  bool intersects(const Aabb& o) const;

 private:
  Vec3 min_;
  Vec3 max_;
};

struct Obstacle {
  Aabb box;
  std::string name;
};

struct ConstantGround {
  double z = 0.0;
};

/// Regular elevation grid. Sample (row, col) sits at origin + (col, row) * resolution,
/// so rows advance along y and columns along x. `data` is row-major.
struct Heightmap {
  Vec2 origin;
  double resolution = 1.0;
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  double at(int row, int col) const { return data[static_cast<std::size_t>(row) * cols + col]; }
  /// Bilinear interpolation, clamped to the sampled extent.
  double interpolate(double x, double y) const;
};

using GroundModel = std::variant<ConstantGround, Heightmap>;

/// Immutable 3D world: bounds, ground surface, box obstacles.
class Environment {
 public:
  Environment(Aabb bounds, GroundModel ground, std::vector<Obstacle> obstacles);

  const Aabb& bounds() const { return bounds_; }
  const GroundModel& ground() const { return ground_; }
  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  bool flat_ground() const { return std::holds_alternative<ConstantGround>(ground_); }

  bool in_footprint(double x, double y) const;

  /// Ground elevation at (x, y). Throws DomainError outside the bounds footprint.
  double ground_height(double x, double y) const;

  /// True iff the sphere of radius `clearance` around p touches an obstacle
  /// (distance <= clearance), the center is below ground, the sphere leaves the
  /// horizontal footprint, or the center leaves the vertical extent of bounds.
  bool point_in_collision(const Vec3& p, double clearance) const;

  /// Swept-sphere test. Exact against boxes, bounds and flat ground; heightmap
  /// ground is sampled at segment_sample_step(clearance), endpoints included.
  /// Reports a collision wherever the sampled test does. Symmetric in (a, b).
  bool segment_in_collision(const Vec3& a, const Vec3& b, double clearance) const;

 private:
  Aabb bounds_;
  GroundModel ground_;
  std::vector<Obstacle> obstacles_;
};

/// Exact minimum distance from segment [a, b] to a box.
double segment_box_distance(const Vec3& a, const Vec3& b, const Aabb& box);

/// Sampling step for segment checks: min(0.05, clearance / 2) when clearance > 0.
double segment_sample_step(double clearance);

/// Evenly spaced samples from a to b (both included) no further apart than step.
/// The endpoints are canonically ordered first so the result is independent of
/// argument order up to reversal.
std::vector<Vec3> sample_segment(const Vec3& a, const Vec3& b, double step);

// ---------------------------------------------------------------------------
// 2.5D occupancy grid

enum class Cell : std::uint8_t { Free = 0, Occupied = 1 };

struct GridIndex {
  int row = 0;
  int col = 0;
  constexpr bool operator==(const GridIndex&) const = default;
};

class OccupancyGrid {
 public:
  OccupancyGrid(double resolution, Vec2 origin, int width, int height);

  double resolution() const { return resolution_; }
  const Vec2& origin() const { return origin_; }
  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return cells_.size(); }

  bool in_grid(GridIndex c) const {
    return c.row >= 0 && c.col >= 0 && c.row < height_ && c.col < width_;
  }
  Cell at(GridIndex c) const { return cells_[index(c)]; }
  bool occupied(GridIndex c) const { return at(c) == Cell::Occupied; }
  void set(GridIndex c, Cell v) { cells_[index(c)] = v; }

  /// Cell containing world point (x, y); may lie outside the grid.
  GridIndex world_to_cell(double x, double y) const;
  Vec2 cell_center(GridIndex c) const;

  std::size_t index(GridIndex c) const {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.col);
  }
  GridIndex from_index(std::size_t i) const {
    return {static_cast<int>(i / static_cast<std::size_t>(width_)),
            static_cast<int>(i % static_cast<std::size_t>(width_))};
  }

  std::size_t occupied_count() const;
  const std::vector<Cell>& cells() const { return cells_; }
  std::vector<Cell>& mutable_cells() { return cells_; }

 private:
  double resolution_;
  Vec2 origin_;
  int width_;
  int height_;
  std::vector<Cell> cells_;
};

struct HeightBand {
  double low = 0.05;
  double high = 0.60;
};

struct GridProjection {
  double resolution = 0.1;
  double inflation = 0.35;
  HeightBand band;
};

/// Projects obstacles whose vertical extent meets [ground + low, ground + high]
/// onto the driving plane, dilated by `inflation`. OpenMP-parallel over rows.
OccupancyGrid project_to_grid(const Environment& env, const GridProjection& proj);

/// Single-threaded reference for project_to_grid; must agree cell for cell.
OccupancyGrid project_to_grid_serial(const Environment& env, const GridProjection& proj);

}  // namespace mmnav

#endif  // MMNAV_ENV_HPP
