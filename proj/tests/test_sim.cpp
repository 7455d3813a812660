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

#include <cmath>

#include "doctest.h"
#include "mmnav/errors.hpp"
#include "mmnav/sim.hpp"
#include "test_support.hpp"

using namespace mmnav;
using mmnav::testing::flat_world;

namespace {

Environment walled_arena() {
  return flat_world(10, 6, 3, {{Aabb({4.8, 0, 0}, {5.2, 6, 0.8}), "wall"}});
}

const std::vector<Vec3> kArenaWaypoints{{3, 1.5, 0}, {8, 3, 0}, {9, 4.5, 0}};

std::vector<Phase> phase_sequence(const MissionResult& r) {
  std::vector<Phase> out;
  for (const auto& span : r.timeline) out.push_back(span.phase);
  return out;
}

void check_log_invariants(const Environment& env, const MissionResult& r, const CostModel& cm,
                          const SimConfig& cfg, bool fixed_height = true) {
  double last_total = 0.0;
  for (const auto& rec : r.log) {
    const RobotState& s = rec.state;
    if (s.mode == RobotMode::UGV) CHECK(s.z == env.ground_height(s.x, s.y));
    if (s.mode == RobotMode::Morphing) {
      CHECK(s.v == 0.0);
      CHECK(s.omega == 0.0);
    }
    if (fixed_height && rec.phase == Phase::Cruise) {
      CHECK(std::abs(s.z - cfg.cruise_altitude) <= cfg.climb_rate * cfg.dt + 1e-9);
    }
    CHECK_FALSE(env.point_in_collision(s.position(), 0.0));
    const EnergyLedger& e = rec.energy;
    CHECK(e.ground >= 0.0);
    CHECK(e.flight >= 0.0);
    CHECK(e.transition >= 0.0);
    CHECK(mmnav::testing::rel_diff(e.total, e.ground + e.flight + e.transition) < 1e-9);
    CHECK(e.total >= last_total);
    last_total = e.total;
  }
  CHECK(r.ledger.transition == r.morphs * cm.transition_cost());
  for (std::size_t i = 1; i < r.timeline.size(); ++i) {
    CHECK(legal_transition(r.timeline[i - 1].phase, r.timeline[i].phase));
  }
}

}  // namespace

TEST_CASE("ground step") {
  const Environment env = flat_world(10, 10, 3);
  RobotState s{2, 3, 0, 0};
  const RobotState same = step_ugv(s, {0, 0}, 0.1, env);
  CHECK(same.x == 2.0);
  CHECK(same.y == 3.0);
  CHECK(same.yaw == 0.0);
  CHECK(step_ugv(s, {1, 0}, 0.1, env).x == doctest::Approx(2.1));

  // Unit-radius arc about (2, 4) swept for 0.1 s.
  for (int i = 0; i < 100; ++i) s = step_ugv(s, {1, 1}, 0.001, env);
  CHECK(std::hypot(s.x - (2 + std::sin(0.1)), s.y - (4 - std::cos(0.1))) < 1e-3);

  s.mode = RobotMode::UAS;
  CHECK_THROWS_AS(step_ugv(s, {1, 0}, 0.1, env), StateMachineError);
}

TEST_CASE("flight step") {
  const SimConfig cfg;
  RobotState s{1, 1, 1.5, 0};
  s.mode = RobotMode::UAS;
  const RobotState held = step_uas(s, {1, 1, 1.5}, FlightMotion::Straight, cfg, 1.0, 0.1);
  CHECK(held.position() == s.position());

  RobotState low{1, 1, 0.5, 0};
  low.mode = RobotMode::UAS;
  CHECK(step_uas(low, {1, 1, 1.5}, FlightMotion::Vertical, cfg, 1.0, 0.1).z ==
        doctest::Approx(0.55));

  RobotState c{0, 0, 1.5, 0};
  c.mode = RobotMode::UAS;
  int ticks = 0;
  while (distance(c.position(), {10, 0, 1.5}) > 1e-12 && ticks < 1000) {
    const RobotState next = step_uas(c, {10, 0, 1.5}, FlightMotion::Horizontal, cfg, 1.0, 0.1);
    CHECK(next.x <= 10.0 + 1e-12);
    c = next;
    ++ticks;
  }
  CHECK(ticks * 0.1 == doctest::Approx(10.0).epsilon(0.011));

  CHECK_THROWS_AS(step_uas(RobotState{}, {1, 1, 1}, FlightMotion::Straight, cfg, 1.0, 0.1),
                  StateMachineError);
}

TEST_CASE("energy accumulation") {
  const CostModel cm;
  EnergyLedger e;
  RobotState s;
  s.v = 1.0;
  e = accumulate_energy(e, s, 0.5, cm);
  CHECK(e.ground == doctest::Approx(60.0));
  s.mode = RobotMode::UAS;
  s.vz = 0.5;
  e = accumulate_energy(e, s, 0.1, cm);
  CHECK(e.flight == doctest::Approx(60.0 + 6.0 * 9.81 * 0.05));
  s.vz = -0.5;
  e = accumulate_energy(e, s, 0.1, cm);
  CHECK(e.flight == doctest::Approx(120.0 + 6.0 * 9.81 * 0.05));
  s.mode = RobotMode::Morphing;
  e = accumulate_energy(e, s, 4.0, cm);
  CHECK(e.transition == doctest::Approx(200.0));
  CHECK(e.total == doctest::Approx(e.ground + e.flight + e.transition));
}

TEST_CASE("phase transition table") {
  CHECK(legal_transition(Phase::GroundNav, Phase::MorphToUas));
  CHECK(legal_transition(Phase::GroundNav, Phase::Done));
  CHECK(legal_transition(Phase::MorphToUas, Phase::Takeoff));
  CHECK(legal_transition(Phase::Takeoff, Phase::Cruise));
  CHECK(legal_transition(Phase::Cruise, Phase::Descend));
  CHECK(legal_transition(Phase::Descend, Phase::MorphToUgv));
  CHECK(legal_transition(Phase::MorphToUgv, Phase::GroundNav));
  CHECK(legal_transition(Phase::Cruise, Phase::Failed));
  CHECK_FALSE(legal_transition(Phase::GroundNav, Phase::Takeoff));
  CHECK_FALSE(legal_transition(Phase::Descend, Phase::Cruise));
  CHECK_FALSE(legal_transition(Phase::Done, Phase::Failed));
}

TEST_CASE("trivial missions") {
  const Environment env = flat_world(10, 10, 3);
  const CostModel cm;
  const MissionResult at_start = run_mission(env, {2, 2, 0}, {{2, 2, 0}}, cm, {}, {}, 1);
  CHECK(at_start.outcome == Phase::Done);
  CHECK(at_start.ledger.total == 0.0);

  CHECK_THROWS_AS(run_mission(env, {2, 2, 0}, {}, cm, {}, {}, 1), DomainError);

  const Environment boxed = flat_world(10, 10, 3, {{Aabb({1, 1, 0}, {3, 3, 1}), "b"}});
  const MissionResult inside = run_mission(boxed, {2, 2, 0}, {{8, 8, 0}}, cm, {}, {}, 1);
  CHECK(inside.outcome == Phase::Failed);
  CHECK_FALSE(inside.diagnostic.empty());
}

TEST_CASE("open arena mission stays on the ground") {
  const Environment env = flat_world(10, 6, 3);
  const CostModel cm;
  const SimConfig cfg;
  const MissionResult r = run_mission(env, {1, 3, 0}, kArenaWaypoints, cm, {}, cfg, 1);
  CHECK(r.outcome == Phase::Done);
  CHECK(r.morphs == 0);
  for (const auto& rec : r.log) CHECK(rec.phase == Phase::GroundNav);
  check_log_invariants(env, r, cm, cfg);
}

TEST_CASE("walled arena mission flies over the wall") {
  const Environment env = walled_arena();
  const CostModel cm;
  const SimConfig cfg;
  const MissionResult r = run_mission(env, {1, 3, 0}, kArenaWaypoints, cm, {}, cfg, 1);
  CHECK(r.outcome == Phase::Done);
  CHECK(r.morphs == 2);
  CHECK(phase_sequence(r) ==
        std::vector<Phase>{Phase::GroundNav, Phase::MorphToUas, Phase::Takeoff, Phase::Cruise,
                           Phase::Descend, Phase::MorphToUgv, Phase::GroundNav, Phase::Done});
  const RobotState& last = r.log.back().state;
  CHECK(std::hypot(last.x - 9.0, last.y - 4.5) <= cfg.goal_tolerance);
  CHECK(r.collision_records == 0);
  check_log_invariants(env, r, cm, cfg);

  const MissionResult again = run_mission(env, {1, 3, 0}, kArenaWaypoints, cm, {}, cfg, 1);
  REQUIRE(again.log.size() == r.log.size());
  bool identical = true;
  for (std::size_t i = 0; i < r.log.size(); ++i) {
    const RobotState& a = r.log[i].state;
    const RobotState& b = again.log[i].state;
    identical = identical && a.x == b.x && a.y == b.y && a.z == b.z && a.yaw == b.yaw &&
                r.log[i].energy.total == again.log[i].energy.total;
  }
  CHECK(identical);
}

TEST_CASE("waypoint inside an obstacle fails") {
  const Environment env = walled_arena();
  const CostModel cm;
  const MissionResult r = run_mission(env, {1, 3, 0}, {{5.0, 3.0, 0}}, cm, {}, {}, 1);
  CHECK(r.outcome == Phase::Failed);
}

TEST_CASE("flight disabled turns no-path into failure") {
  const Environment env = walled_arena();
  const CostModel cm;
  SimConfig cfg;
  cfg.assume_flyable = false;
  const MissionResult r = run_mission(env, {1, 3, 0}, kArenaWaypoints, cm, {}, cfg, 1);
  CHECK(r.outcome == Phase::Failed);
  CHECK(r.morphs == 0);
}

TEST_CASE("planned mission follows roadmap legs") {
  const Environment env = walled_arena();
  const CostModel cm;
  PrmParams prm;
  prm.min_air_clearance = 1.2;
  const Roadmap rm = build_roadmap(env, cm, prm);
  const auto chain = plan_chain(rm, {1, 3, 0}, kArenaWaypoints, env, cm, prm);
  const SimConfig cfg;
  const MissionResult r = run_legs(env, {1, 3, 0}, legs_from_plan(chain), cm, {}, cfg, 1);
  CHECK(r.outcome == Phase::Done);
  int transitions = 0;
  for (const auto& leg : chain) transitions += leg.plan.transitions;
  CHECK(r.morphs == transitions);
  check_log_invariants(env, r, cm, cfg, false);
}
