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

#include "mmnav/grid_planner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

#include "mmnav/errors.hpp"

namespace mmnav {

namespace {

constexpr int kDr[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int kDc[8] = {-1, 0, 1, -1, 1, -1, 0, 1};

}  // namespace

std::optional<GridPath> grid_plan(const OccupancyGrid& grid, GridIndex start, GridIndex goal) {
  if (!grid.in_grid(start) || grid.occupied(start)) {
    throw InvalidStartError("grid_plan start cell is occupied or outside the grid");
  }
  if (!grid.in_grid(goal) || grid.occupied(goal)) return std::nullopt;

  const double res = grid.resolution();
  const double diag = std::sqrt(2.0) * res;
  auto h = [&](GridIndex c) {
    return res * std::hypot(static_cast<double>(c.row - goal.row),
                            static_cast<double>(c.col - goal.col));
  };

  const std::size_t n = grid.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> g(n, kInf);
  std::vector<std::size_t> parent(n, n);
  std::vector<char> closed(n, 0);
  using Entry = std::tuple<double, double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  const std::size_t s = grid.index(start);
  const std::size_t t = grid.index(goal);
  g[s] = 0.0;
  open.emplace(h(start), 0.0, s);
  while (!open.empty()) {
    const auto [f, gu, u] = open.top();
    open.pop();
    if (closed[u] || gu > g[u]) continue;
    closed[u] = 1;
    if (u == t) break;
    const GridIndex cu = grid.from_index(u);
    for (int k = 0; k < 8; ++k) {
      const GridIndex cv{cu.row + kDr[k], cu.col + kDc[k]};
      if (!grid.in_grid(cv) || grid.occupied(cv)) continue;
      const std::size_t v = grid.index(cv);
      if (closed[v]) continue;
      const double cand = gu + ((kDr[k] != 0 && kDc[k] != 0) ? diag : res);
      if (cand < g[v]) {
        g[v] = cand;
        parent[v] = u;
        open.emplace(cand + h(cv), cand, v);
      }
    }
  }
  if (!closed[t]) return std::nullopt;

  GridPath path;
  path.length = g[t];
  for (std::size_t v = t;; v = parent[v]) {
    path.cells.push_back(grid.from_index(v));
    if (v == s) break;
  }
  std::reverse(path.cells.begin(), path.cells.end());
  return path;
}

std::optional<GridIndex> nearest_free_cell(const OccupancyGrid& grid, GridIndex c,
                                           int max_radius_cells) {
  std::optional<GridIndex> best;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (int dr = -max_radius_cells; dr <= max_radius_cells; ++dr) {
    for (int dc = -max_radius_cells; dc <= max_radius_cells; ++dc) {
      const GridIndex q{c.row + dr, c.col + dc};
      if (!grid.in_grid(q) || grid.occupied(q)) continue;
      const double d2 = static_cast<double>(dr * dr + dc * dc);
      if (d2 < best_d2) {
        best_d2 = d2;
        best = q;
      }
    }
  }
  return best;
}

}  // namespace mmnav
