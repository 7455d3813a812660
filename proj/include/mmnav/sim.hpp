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

#ifndef MMNAV_SIM_HPP
#define MMNAV_SIM_HPP

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mmnav/costmodel.hpp"
#include "mmnav/env.hpp"
#include "mmnav/grid_planner.hpp"
#include "mmnav/localnav.hpp"
#include "mmnav/planner.hpp"

namespace mmnav {

enum class RobotMode : std::uint8_t { UGV, UAS, Morphing };

enum class Phase : std::uint8_t {
  GroundNav,
  MorphToUas,
  Takeoff,
  Cruise,
  Descend,
  MorphToUgv,
  Done,
  Failed,
};

std::string_view to_string(RobotMode m);
std::string_view to_string(Phase p);

/// GroundNav->{MorphToUas, Done}, MorphToUas->Takeoff, Takeoff->Cruise,
/// Cruise->Descend, Descend->MorphToUgv, MorphToUgv->GroundNav, any->Failed.
bool legal_transition(Phase from, Phase to);

struct RobotState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double yaw = 0.0;
  double v = 0.0;      // m/s, forward speed (UGV) or 3D speed (UAS)
  double omega = 0.0;  // rad/s
  double vz = 0.0;     // m/s, vertical rate applied during the last tick
  RobotMode mode = RobotMode::UGV;

  Vec3 position() const { return {x, y, z}; }
};

struct EnergyLedger {
  double ground = 0.0;
  double flight = 0.0;
  double transition = 0.0;
  double total = 0.0;
};

struct SimConfig {
  double dt = 0.1;                  // s
  double goal_tolerance = 0.15;     // m, final waypoint of a leg
  double flight_tolerance = 0.05;   // m, aerial waypoint arrival
  double landing_tolerance = 0.05;  // m above ground ends Descend
  double cruise_altitude = 1.5;     // m above ground at takeoff
  double climb_rate = 0.5;          // m/s
  double actuation_latency = 0.0;   // s, FIFO delay on velocity commands
  double max_mission_time = 300.0;  // s
  double replan_interval = 1.0;     // s
  double lookahead = 2.5;           // m, carrot distance along the ground path
  double pose_noise_sigma = 0.0;    // m, Gaussian noise on the controller's pose
  bool assume_flyable = true;
  GridProjection grid;

  void validate() const;
};

/// Unicycle step at the commanded velocity; z pinned to the ground.
/// Throws StateMachineError unless the robot is in UGV mode.
RobotState step_ugv(const RobotState& state, const VelocityCommand& cmd, double dt,
                    const Environment& env);

enum class FlightMotion {
  Vertical,    // climb/descend only, at most climb_rate
  Horizontal,  // level flight, at most v_f
  Straight,    // direct 3D line, at most v_f
};

/// Velocity that moves toward `target` without overshooting it within dt.
Vec3 uas_velocity(const RobotState& state, const Vec3& target, FlightMotion motion,
                  const SimConfig& cfg, double flight_speed, double dt);

/// Applies uas_velocity for one tick. Throws StateMachineError unless in UAS mode.
RobotState step_uas(const RobotState& state, const Vec3& target, FlightMotion motion,
                    const SimConfig& cfg, double flight_speed, double dt);

/// Moving UGV: P_m dt to ground. UAS: P_f dt + m g max(0, vz dt) to flight.
/// Morphing: P_t dt to transition. Stationary UGV: nothing.
EnergyLedger accumulate_energy(const EnergyLedger& ledger, const RobotState& state, double dt,
                               const CostModel& cm);

// ---------------------------------------------------------------------------
// Missions

/// Reach `goal` on the ground with grid A* + DWA; fly the fixed-height
/// profile when the grid planner reports no path.
struct GoalLeg {
  Vec3 goal;
};

/// Drive through roadmap ground waypoints with DWA.
struct DriveLeg {
  std::vector<Vec3> waypoints;
};

/// Morph, fly straight through the waypoints (last one on the ground), morph back.
struct FlyLeg {
  std::vector<Vec3> waypoints;
};

using MissionLeg = std::variant<GoalLeg, DriveLeg, FlyLeg>;

/// Converts a roadmap plan into Drive/Fly legs.
std::vector<MissionLeg> legs_from_segments(const std::vector<MissionSegment>& segments);
/// Concatenated legs_from_segments over a planned waypoint chain.
std::vector<MissionLeg> legs_from_plan(const std::vector<PlannedLeg>& chain);

struct TrajectoryRecord {
  double t = 0.0;
  RobotState state;
  Phase phase = Phase::GroundNav;
  EnergyLedger energy;
};

struct PhaseSpan {
  Phase phase = Phase::GroundNav;
  double t_start = 0.0;
  double t_end = 0.0;
};

struct MissionResult {
  Phase outcome = Phase::Failed;
  std::vector<TrajectoryRecord> log;
  EnergyLedger ledger;
  std::vector<PhaseSpan> timeline;
  int morphs = 0;
  double duration = 0.0;
  double takeoff_overshoot = 0.0;  // m above the fixed cruise altitude
  double descend_overshoot = 0.0;  // m of commanded descent past the landing altitude
  int collision_records = 0;
  std::string diagnostic;
};

/// Mission executor. One call to step() is one control tick.
class Mission {
 public:
  Mission(const Environment& env, const CostModel& cm, const DwaParams& dwa, const SimConfig& cfg,
          const Vec3& start, double start_yaw, std::vector<MissionLeg> legs, std::uint64_t seed);

  bool finished() const { return phase_ == Phase::Done || phase_ == Phase::Failed; }
  void step();

  Phase phase() const { return phase_; }
  const RobotState& state() const { return state_; }
  const EnergyLedger& ledger() const { return ledger_; }
  double time() const { return time_; }
  const ClearanceMap& clearance_map() const { return map_; }

  /// Moves the log and summary out; valid once finished().
  MissionResult take_result();

 private:
  void transition(Phase next);
  void fail(std::string why);
  // Each returns true once it has integrated motion over dt, false when it
  // only changed phase (the tick is then re-dispatched).
  bool ground_tick();
  bool flight_tick();
  bool morph_tick();
  void advance_leg();
  void begin_fixed_height_flight(const Vec3& target);
  enum class PlanStatus { Found, NoPath, Failed };
  PlanStatus plan_grid_path(const Vec3& target);
  struct Carrot {
    Vec2 point;
    double remaining = 0.0;  // path length left from the robot's projection
  };
  Carrot carrot(const Pose2& pose);
  void drive_toward();
  VelocityCommand escape_command(const Pose2& pose) const;
  std::optional<VelocityCommand> approach_command(const Vec2& goal, const Pose2& pose,
                                                  double v_now) const;
  Pose2 sensed_pose();
  // Sensed pose carried forward through the commands still queued by the
  // actuation delay; the ground controllers act on this.
  Pose2 control_pose();
  Vec3 predicted_position() const;
  void record();

  const Environment& env_;
  CostModel cm_;
  DwaParams dwa_;
  SimConfig cfg_;
  ClearanceMap map_;
  std::vector<MissionLeg> legs_;
  std::size_t leg_ = 0;

  RobotState state_;
  Phase phase_ = Phase::GroundNav;
  double time_ = 0.0;
  double phase_timer_ = 0.0;
  EnergyLedger ledger_;
  double morph_base_ = 0.0;
  int morphs_ = 0;

  std::optional<Vec2> approach_goal_;  // latched direct approach after a DWA stall

  std::vector<Vec2> path_;
  std::size_t path_cursor_ = 0;
  double last_plan_time_ = -1.0;

  std::vector<Vec3> flight_targets_;
  std::size_t flight_target_ = 0;
  bool fixed_height_ = true;
  bool resume_leg_after_landing_ = false;
  double cruise_z_ = 0.0;
  double descend_virtual_z_ = 0.0;

  std::deque<VelocityCommand> ground_delay_;
  std::deque<Vec3> flight_delay_;
  std::size_t delay_ticks_ = 0;

  std::mt19937_64 noise_rng_;
  MissionResult result_;
};

/// Grid + DWA pipeline: one GoalLeg per waypoint.
MissionResult run_mission(const Environment& env, const Vec3& start,
                          const std::vector<Vec3>& waypoints, const CostModel& cm,
                          const DwaParams& dwa, const SimConfig& cfg, std::uint64_t seed,
                          double start_yaw = 0.0);

/// Executes prebuilt legs (e.g. from a roadmap plan).
MissionResult run_legs(const Environment& env, const Vec3& start, std::vector<MissionLeg> legs,
                       const CostModel& cm, const DwaParams& dwa, const SimConfig& cfg,
                       std::uint64_t seed, double start_yaw = 0.0);

}  // namespace mmnav

#endif  // MMNAV_SIM_HPP
