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

#include "doctest.h"
#include "mmnav/costmodel.hpp"
#include "mmnav/errors.hpp"
#include "mmnav/splitmix.hpp"

using namespace mmnav;

TEST_CASE("ground edge cost") {
  const CostModel cm;
  CHECK(cm.ground_edge_cost(0.0) == 0.0);
  CHECK(cm.ground_edge_cost(3.0) == doctest::Approx(360.0));
  CHECK(cm.ground_edge_cost(1.25) + cm.ground_edge_cost(2.5) ==
        doctest::Approx(cm.ground_edge_cost(3.75)));
  CHECK_THROWS_AS(cm.ground_edge_cost(-0.1), DomainError);
}

TEST_CASE("flight edge cost") {
  const CostModel cm;
  CHECK(cm.flight_edge_cost(0.0, 1.0, 1.0) == 0.0);
  CHECK(cm.flight_edge_cost(2.0, 1.0, 1.0) == doctest::Approx(1200.0));
  CHECK(cm.flight_edge_cost(1.0, 0.0, 1.0) == doctest::Approx(658.86));
  CHECK_THROWS_AS(cm.flight_edge_cost(0.5, 0.0, 1.0), DomainError);

  // Steep descent with a heavy airframe would go negative; it clamps.
  CostParams heavy;
  heavy.mass = 200.0;
  CHECK(CostModel(heavy).flight_edge_cost(1.0, 1.0, 0.0) == 0.0);
}

TEST_CASE("transition cost") {
  CHECK(CostModel().transition_cost() == doctest::Approx(200.0));
  CostParams p;
  p.transition_time = 1e-12;
  CHECK(CostModel(p).transition_cost() < 1e-9);
  p = CostParams{};
  p.transition_power *= 2.0;
  CHECK(CostModel(p).transition_cost() == doctest::Approx(400.0));
}

TEST_CASE("construction validates parameters") {
  CostParams p;
  p.ground_speed = 0.0;
  CHECK_THROWS_AS(CostModel{p}, ConfigError);
  p = CostParams{};
  p.mass = -1.0;
  CHECK_THROWS_AS(CostModel{p}, ConfigError);
  p = CostParams{};
  p.ground_power = 700.0;  // 700 J/m driving vs 600 J/m flying
  CHECK_THROWS_AS(CostModel{p}, ConfigError);
}

TEST_CASE("heuristic examples") {
  const CostModel cm;
  CHECK(cm.heuristic({1, 2, 0}, {1, 2, 0}) == 0.0);
  CHECK(cm.heuristic({1, 2, 1}, {1, 2, 0}) == 0.0);
  CHECK(cm.heuristic({0, 0, 0}, {3, 4, 0}) == doctest::Approx(600.0));
  CHECK(cm.heuristic({0, 0, 0}, {0, 0, 1}) == doctest::Approx(58.86));
  CHECK(cm.heuristic({0, 0, 1}, {0, 0, 0}, HeuristicMode::Prose) == doctest::Approx(600.0));
}

TEST_CASE("property: heuristic is non-negative and bounded by direct edges") {
  const CostModel cm;
  SplitMix64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 a{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(0, 5)};
    const Vec3 b{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(0, 5)};
    const double h = cm.heuristic(a, b);
    CHECK(h >= 0.0);
    CHECK(cm.heuristic(a, a) == 0.0);
    // Any single flight edge from a to b costs at least the estimate.
    CHECK(h <= cm.flight_edge_cost(distance(a, b), a.z, b.z) + 1e-9);
  }
}

TEST_CASE("property: climb cost telescopes over sub-edges") {
  const CostModel cm;
  SplitMix64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 a{0, 0, rng.uniform(0, 2)};
    const Vec3 b{rng.uniform(-3, 3), rng.uniform(-3, 3), a.z + rng.uniform(0, 3)};
    const int k = 1 + static_cast<int>(rng.next() % 9);
    double split = 0.0;
    for (int j = 0; j < k; ++j) {
      const Vec3 p = a + (b - a) * (static_cast<double>(j) / k);
      const Vec3 q = a + (b - a) * (static_cast<double>(j + 1) / k);
      split += cm.flight_edge_cost(distance(p, q), p.z, q.z);
    }
    CHECK(split == doctest::Approx(cm.flight_edge_cost(distance(a, b), a.z, b.z)).epsilon(1e-12));
  }
}
