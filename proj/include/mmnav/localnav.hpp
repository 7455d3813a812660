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

#ifndef MMNAV_LOCALNAV_HPP
#define MMNAV_LOCALNAV_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mmnav/env.hpp"
#include "mmnav/vec.hpp"

namespace mmnav {

struct DwaParams {
  double v_max = 1.0;        // m/s
  double omega_max = 1.5;    // rad/s
  double accel_v = 1.0;      // m/s^2
  double accel_omega = 2.0;  // rad/s^2
  double dt = 0.1;           // s
  double horizon = 2.0;      // s
  int samples_v = 11;
  int samples_omega = 21;
  double w_heading = 0.5;
  double w_clearance = 0.3;
  double w_velocity = 0.2;
  double d_sat = 1.0;  // m, clearance beyond this scores as 1
};

/// Validates and rescales the weights to sum to 1. Throws ConfigError.
DwaParams normalize(DwaParams p);

struct VelocityCommand {
  double v = 0.0;
  double omega = 0.0;
  constexpr bool operator==(const VelocityCommand&) const = default;
};

struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

std::pair<Range, Range> dynamic_window(const VelocityCommand& current, const DwaParams& p);

/// Unicycle rollout, ceil(horizon / dt) steps; includes the start pose.
std::vector<Pose2> rollout(const Pose2& pose, const VelocityCommand& cmd, const DwaParams& p);

/// Inflated grid plus per-cell distance to the nearest Occupied cell center,
/// capped at d_sat.
class ClearanceMap {
 public:
  ClearanceMap(OccupancyGrid grid, double d_sat);

  const OccupancyGrid& grid() const { return grid_; }
  double d_sat() const { return d_sat_; }
  /// nullopt outside the grid.
  std::optional<double> clearance_at(double x, double y) const;
  bool blocked(double x, double y) const;
  const std::vector<float>& field() const { return field_; }

 private:
  OccupancyGrid grid_;
  double d_sat_;
  std::vector<float> field_;
};

/// Brute-force windowed distance field. OpenMP-parallel over rows.
std::vector<float> clearance_field(const OccupancyGrid& grid, double d_sat);
/// Serial reference for clearance_field.
std::vector<float> clearance_field_serial(const OccupancyGrid& grid, double d_sat);

/// Weighted heading/clearance/velocity score in [0, 1], or nullopt (Rejected)
/// when any pose falls on an Occupied or out-of-grid cell.
std::optional<double> score_trajectory(const std::vector<Pose2>& traj, const VelocityCommand& cmd,
                                       const Vec2& goal, const ClearanceMap& map,
                                       const DwaParams& p);

struct DwaDecision {
  VelocityCommand cmd;
  double score = 0.0;
  bool recovery = false;
};

DwaDecision dwa_evaluate(const Pose2& pose, const VelocityCommand& current, const Vec2& goal,
                         const ClearanceMap& map, const DwaParams& p);

/// Best-scoring admissible command; rotate-in-place recovery when all are Rejected.
VelocityCommand dwa_step(const Pose2& pose, const VelocityCommand& current, const Vec2& goal,
                         const ClearanceMap& map, const DwaParams& p);

}  // namespace mmnav

#endif  // MMNAV_LOCALNAV_HPP
