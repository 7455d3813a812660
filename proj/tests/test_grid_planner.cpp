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

#include <cstdlib>

#include "doctest.h"
#include "mmnav/errors.hpp"
#include "mmnav/grid_planner.hpp"
#include "test_support.hpp"

using namespace mmnav;
using mmnav::testing::flood_reachable;
using mmnav::testing::random_grid;

namespace {

void check_path(const OccupancyGrid& g, const GridPath& p, GridIndex s, GridIndex t) {
  REQUIRE_FALSE(p.cells.empty());
  CHECK(p.cells.front() == s);
  CHECK(p.cells.back() == t);
  double length = 0.0;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    CHECK(g.in_grid(p.cells[i]));
    CHECK_FALSE(g.occupied(p.cells[i]));
    if (i == 0) continue;
    const int dr = std::abs(p.cells[i].row - p.cells[i - 1].row);
    const int dc = std::abs(p.cells[i].col - p.cells[i - 1].col);
    CHECK(std::max(dr, dc) == 1);
    length += g.resolution() * std::hypot(dr, dc);
  }
  CHECK(p.length == doctest::Approx(length));
}

}  // namespace

TEST_CASE("grid plan examples") {
  OccupancyGrid g(0.25, {0, 0}, 10, 10);
  const auto same = grid_plan(g, {3, 4}, {3, 4});
  REQUIRE(same);
  CHECK(same->cells.size() == 1);
  CHECK(same->length == 0.0);

  const auto diag = grid_plan(g, {0, 0}, {9, 9});
  REQUIRE(diag);
  CHECK(diag->length == doctest::Approx(9 * std::sqrt(2.0) * 0.25));
  check_path(g, *diag, {0, 0}, {9, 9});

  g.set({5, 5}, Cell::Occupied);
  CHECK_FALSE(grid_plan(g, {0, 0}, {5, 5}));
  CHECK_THROWS_AS(grid_plan(g, {5, 5}, {0, 0}), InvalidStartError);
  CHECK_THROWS_AS(grid_plan(g, {-1, 0}, {0, 0}), InvalidStartError);
}

TEST_CASE("full-width wall blocks the projected arena") {
  const Environment env(Aabb({0, 0, 0}, {10, 6, 3}), ConstantGround{0.0},
                        {{Aabb({4.8, 0, 0}, {5.2, 6, 0.8}), "wall"}});
  const OccupancyGrid g = project_to_grid(env, GridProjection{});
  const GridIndex s = g.world_to_cell(3, 1.5);
  const GridIndex t = g.world_to_cell(8, 3);
  CHECK_FALSE(flood_reachable(g, s, t));
  CHECK_FALSE(grid_plan(g, s, t));
  CHECK(grid_plan(g, s, g.world_to_cell(1, 3)));
}

TEST_CASE("nearest free cell") {
  OccupancyGrid g(0.1, {0, 0}, 7, 7);
  for (int r = 2; r <= 4; ++r)
    for (int c = 2; c <= 4; ++c) g.set({r, c}, Cell::Occupied);
  const auto f = nearest_free_cell(g, {3, 3}, 5);
  REQUIRE(f);
  CHECK_FALSE(g.occupied(*f));
  CHECK(std::max(std::abs(f->row - 3), std::abs(f->col - 3)) == 2);
  CHECK_FALSE(nearest_free_cell(g, {3, 3}, 1));
}

TEST_CASE("property: verdicts agree with flood fill on random grids") {
  SplitMix64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const int w = 5 + static_cast<int>(rng.next() % 96);
    const int h = 5 + static_cast<int>(rng.next() % 96);
    OccupancyGrid g = random_grid(rng, w, h, 0.3);
    const GridIndex s{static_cast<int>(rng.next() % h), static_cast<int>(rng.next() % w)};
    const GridIndex t{static_cast<int>(rng.next() % h), static_cast<int>(rng.next() % w)};
    g.set(s, Cell::Free);
    const auto p = grid_plan(g, s, t);
    CHECK(p.has_value() == flood_reachable(g, s, t));
    if (p) check_path(g, *p, s, t);
  }
}
