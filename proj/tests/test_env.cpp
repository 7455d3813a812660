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

#include <algorithm>

#include "doctest.h"
#include "mmnav/env.hpp"
#include "mmnav/errors.hpp"
#include "test_support.hpp"

using namespace mmnav;
using mmnav::testing::flat_world;
using mmnav::testing::random_world;

namespace {

Environment box_world() {
  return flat_world(10, 10, 5, {{Aabb({4, 4, 0}, {6, 6, 2}), "block"}});
}

Environment heightmap_world(std::vector<double> data, int rows, int cols) {
  Heightmap hm{{0.0, 0.0}, 1.0, rows, cols, std::move(data)};
  return Environment(Aabb({0, 0, 0}, {cols - 1.0, rows - 1.0, 3.0}), hm, {});
}

// Closest sampled approach of a segment to a box.
double sampled_segment_distance(const Vec3& a, const Vec3& b, const Aabb& box, int n) {
  double best = box.distance(a);
  for (int i = 1; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    best = std::min(best, box.distance(a + (b - a) * t));
  }
  return best;
}

}  // namespace

TEST_CASE("ground height: constant and heightmap") {
  CHECK(flat_world(5, 5, 2).ground_height(1.0, 2.0) == 0.0);

  const Environment flat_hm = heightmap_world(std::vector<double>(9, 0.5), 3, 3);
  for (double x : {0.0, 0.3, 1.7, 2.0}) {
    for (double y : {0.0, 0.9, 2.0}) CHECK(flat_hm.ground_height(x, y) == doctest::Approx(0.5));
  }

  // Rows advance along y: row 0 at y = 0 is 0, row 1 at y = 1 is 1.
  const Environment ramp = heightmap_world({0.0, 0.0, 1.0, 1.0}, 2, 2);
  CHECK(ramp.ground_height(0.5, 0.5) == doctest::Approx(0.5));
  CHECK(ramp.ground_height(0.5, 0.25) == doctest::Approx(0.25));

  CHECK_THROWS_AS(flat_world(5, 5, 2).ground_height(6.0, 1.0), DomainError);
}

TEST_CASE("point collision examples") {
  const Environment env = box_world();
  CHECK(env.point_in_collision({5, 5, 1}, 0.0));
  CHECK_FALSE(env.point_in_collision({3.5, 5, 1}, 0.3));
  CHECK(env.point_in_collision({3.8, 5, 1}, 0.3));
  CHECK(env.point_in_collision({1, 1, -0.01}, 0.0));
  CHECK(env.point_in_collision({0.1, 5, 1}, 0.2));
  CHECK(env.point_in_collision({1, 1, 5.5}, 0.0));
}

TEST_CASE("segment collision examples") {
  const Environment env = box_world();
  CHECK_FALSE(env.segment_in_collision({2, 2, 1}, {2, 2, 1}, 0.3));
  CHECK(env.segment_in_collision({3, 5, 1}, {7, 5, 1}, 0.0));
  // Runs parallel to the y = 6 face at exactly the clearance.
  CHECK(env.segment_in_collision({3, 6.5, 1}, {7, 6.5, 1}, 0.5));
  CHECK_FALSE(env.segment_in_collision({3, 6.6, 1}, {7, 6.6, 1}, 0.5));
}

TEST_CASE("segment-box distance matches dense sampling") {
  SplitMix64 rng(7);
  const Aabb box({-1, -0.5, 0}, {1, 0.5, 2});
  for (int i = 0; i < 2000; ++i) {
    const Vec3 a{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-2, 4)};
    const Vec3 b{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-2, 4)};
    const int n = 4000;
    const double exact = segment_box_distance(a, b, box);
    const double sampled = sampled_segment_distance(a, b, box, n);
    CHECK(exact <= sampled + 1e-12);
    CHECK(sampled <= exact + distance(a, b) / n + 1e-12);
  }
}

TEST_CASE("property: clearance monotonicity") {
  SplitMix64 rng(11);
  for (int w = 0; w < 10; ++w) {
    const Environment env = random_world(rng, 12);
    for (int i = 0; i < 500; ++i) {
      const Vec3 p{rng.uniform(0, 20), rng.uniform(0, 20), rng.uniform(0, 5)};
      const double c1 = rng.uniform(0, 1);
      const double c2 = c1 + rng.uniform(0, 1);
      if (env.point_in_collision(p, c1)) CHECK(env.point_in_collision(p, c2));
    }
  }
}

TEST_CASE("property: segment symmetry and containment") {
  SplitMix64 rng(13);
  for (int w = 0; w < 10; ++w) {
    const Environment env = random_world(rng, 12);
    for (int i = 0; i < 300; ++i) {
      const Vec3 a{rng.uniform(0, 20), rng.uniform(0, 20), rng.uniform(0, 5)};
      const Vec3 b{rng.uniform(0, 20), rng.uniform(0, 20), rng.uniform(0, 5)};
      const double c = rng.uniform(0, 0.6);
      CHECK(env.segment_in_collision(a, b, c) == env.segment_in_collision(b, a, c));

      const Vec3 p = a + (b - a) * rng.uniform();
      if (env.point_in_collision(p, c)) {
        CHECK(env.segment_in_collision(a, b, c));
        CHECK(env.segment_in_collision(p, b, c));
        CHECK(env.segment_in_collision(a, p, c));
      }
    }
  }
}

TEST_CASE("property: segment test never frees a sampled collision") {
  SplitMix64 rng(17);
  for (int w = 0; w < 5; ++w) {
    const Environment env = random_world(rng, 15);
    for (int i = 0; i < 200; ++i) {
      const Vec3 a{rng.uniform(0, 20), rng.uniform(0, 20), rng.uniform(0, 5)};
      const Vec3 b = a + Vec3{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-1, 1)};
      const double c = rng.uniform(0, 0.5);
      bool sampled = false;
      for (const Vec3& s : sample_segment(a, b, segment_sample_step(c))) {
        sampled = sampled || env.point_in_collision(s, c);
      }
      if (sampled) CHECK(env.segment_in_collision(a, b, c));
    }
  }
}

TEST_CASE("grid projection examples") {
  GridProjection proj;
  proj.inflation = 0.0;
  const OccupancyGrid empty = project_to_grid(flat_world(4, 3, 2), proj);
  CHECK(empty.width() == 40);
  CHECK(empty.height() == 30);
  CHECK(empty.occupied_count() == 0);

  // Box footprint [1, 2] x [1, 2] overlaps cells 10..19 on both axes.
  const Environment one = flat_world(4, 4, 2, {{Aabb({1, 1, 0}, {2, 2, 1}), "b"}});
  const OccupancyGrid g0 = project_to_grid(one, proj);
  for (int r = 0; r < g0.height(); ++r) {
    for (int c = 0; c < g0.width(); ++c) {
      const bool inside = r >= 10 && r < 20 && c >= 10 && c < 20;
      CHECK(g0.occupied({r, c}) == inside);
    }
  }

  // Dilation by 0.35 against a per-cell sampled distance to the box.
  proj.inflation = 0.35;
  const OccupancyGrid g1 = project_to_grid(one, proj);
  const Aabb& box = one.obstacles().front().box;
  for (int r = 0; r < g1.height(); ++r) {
    for (int c = 0; c < g1.width(); ++c) {
      double best = 1e9;
      for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
          best = std::min(best, box.distance({0.1 * c + 0.005 * i, 0.1 * r + 0.005 * j, 0.5}));
        }
      }
      if (best <= 0.35) CHECK(g1.occupied({r, c}));
      if (best > 0.36) CHECK_FALSE(g1.occupied({r, c}));
    }
  }

  proj.resolution = 5.0;
  CHECK_THROWS_AS(project_to_grid(one, proj), ConfigError);
}

TEST_CASE("grid projection honours the height band") {
  GridProjection proj;
  proj.inflation = 0.0;
  const Environment env = flat_world(4, 4, 3, {{Aabb({1, 1, 0.0}, {2, 2, 0.04}), "floor"},
                                               {Aabb({2.5, 2.5, 1.0}, {3, 3, 2}), "shelf"}});
  CHECK(project_to_grid(env, proj).occupied_count() == 0);
}

TEST_CASE("property: projection agrees with brute force and serial reference") {
  SplitMix64 rng(19);
  for (int w = 0; w < 6; ++w) {
    const int boxes = 1 + static_cast<int>(rng.next() % 20);
    const Environment env = random_world(rng, boxes);
    GridProjection proj;
    proj.inflation = 0.0;
    const OccupancyGrid g = project_to_grid(env, proj);  // 200 x 200
    REQUIRE(g.width() == 200);
    int mismatches = 0;
    for (int r = 0; r < g.height(); ++r) {
      for (int c = 0; c < g.width(); ++c) {
        const double x0 = 0.1 * c, x1 = x0 + 0.1, y0 = 0.1 * r, y1 = y0 + 0.1;
        bool hit = false;
        for (const auto& ob : env.obstacles()) {
          const Vec3& lo = ob.box.min();
          const Vec3& hi = ob.box.max();
          hit = hit || (lo.x < x1 && hi.x > x0 && lo.y < y1 && hi.y > y0 && lo.z < 0.60 &&
                        hi.z > 0.05);
        }
        mismatches += hit != g.occupied({r, c});
      }
    }
    CHECK(mismatches == 0);

    proj.inflation = rng.uniform(0.0, 0.8);
    const OccupancyGrid par = project_to_grid(env, proj);
    CHECK(par.cells() == project_to_grid_serial(env, proj).cells());

    // Growing the inflation never frees a cell.
    proj.inflation += 0.2;
    const OccupancyGrid wider = project_to_grid(env, proj);
    for (std::size_t i = 0; i < par.size(); ++i) {
      if (par.cells()[i] == Cell::Occupied) CHECK(wider.cells()[i] == Cell::Occupied);
    }
  }
}
