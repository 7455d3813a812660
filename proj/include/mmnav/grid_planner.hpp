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

#ifndef MMNAV_GRID_PLANNER_HPP
#define MMNAV_GRID_PLANNER_HPP

#include <optional>
#include <vector>

#include "mmnav/env.hpp"

namespace mmnav {

struct GridPath {
  std::vector<GridIndex> cells;
  double length = 0.0;  // m
};

/// 8-connected A* with a Euclidean heuristic; diagonal steps cost sqrt(2) * res.
/// Returns nullopt when the goal is Occupied, outside the grid, or unreachable.
/// Throws InvalidStartError when the start is Occupied or outside the grid.
std::optional<GridPath> grid_plan(const OccupancyGrid& grid, GridIndex start, GridIndex goal);

/// Nearest Free cell to `c` by cell-center distance within `max_radius_cells`.
std::optional<GridIndex> nearest_free_cell(const OccupancyGrid& grid, GridIndex c,
                                           int max_radius_cells);

}  // namespace mmnav

#endif  // MMNAV_GRID_PLANNER_HPP
