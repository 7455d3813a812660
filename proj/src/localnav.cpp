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

#include "mmnav/localnav.hpp"

#include <algorithm>
#include <cmath>

#include "mmnav/errors.hpp"

namespace mmnav {

DwaParams normalize(DwaParams p) {
  if (!(p.v_max > 0 && p.omega_max > 0 && p.accel_v > 0 && p.accel_omega > 0 && p.dt > 0 &&
        p.horizon > 0 && p.d_sat > 0)) {
    throw ConfigError("DWA limits, dt, horizon and d_sat must be > 0");
  }
  if (p.samples_v < 2 || p.samples_omega < 2) throw ConfigError("DWA needs >= 2 samples per axis");
  if (!(p.w_heading > 0 && p.w_clearance > 0 && p.w_velocity > 0)) {
    throw ConfigError("DWA weights must be > 0");
  }
  const double sum = p.w_heading + p.w_clearance + p.w_velocity;
  p.w_heading /= sum;
  p.w_clearance /= sum;
  p.w_velocity /= sum;
  return p;
}

std::pair<Range, Range> dynamic_window(const VelocityCommand& current, const DwaParams& p) {
  const double dv = p.accel_v * p.dt;
  const double dw = p.accel_omega * p.dt;
  Range v{std::max(0.0, current.v - dv), std::min(p.v_max, current.v + dv)};
  Range w{std::max(-p.omega_max, current.omega - dw), std::min(p.omega_max, current.omega + dw)};
  return {v, w};
}

std::vector<Pose2> rollout(const Pose2& pose, const VelocityCommand& cmd, const DwaParams& p) {
  const auto steps = static_cast<std::size_t>(std::ceil(p.horizon / p.dt - 1e-9));
  std::vector<Pose2> out;
  out.reserve(steps + 1);
  out.push_back(pose);
  Pose2 s = pose;
  for (std::size_t i = 0; i < steps; ++i) {
    s.x += cmd.v * std::cos(s.yaw) * p.dt;
    s.y += cmd.v * std::sin(s.yaw) * p.dt;
    s.yaw += cmd.omega * p.dt;
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

float cell_clearance(const OccupancyGrid& grid, GridIndex c, int window, double d_sat) {
  if (grid.occupied(c)) return 0.0f;
  double best = d_sat;
  const double res = grid.resolution();
  for (int dr = -window; dr <= window; ++dr) {
    for (int dc = -window; dc <= window; ++dc) {
      const GridIndex q{c.row + dr, c.col + dc};
      if (!grid.in_grid(q) || !grid.occupied(q)) continue;
      best = std::min(best, res * std::hypot(static_cast<double>(dr), static_cast<double>(dc)));
    }
  }
  return static_cast<float>(best);
}

int window_cells(const OccupancyGrid& grid, double d_sat) {
  return static_cast<int>(std::ceil(d_sat / grid.resolution()));
}

}  // namespace

std::vector<float> clearance_field_serial(const OccupancyGrid& grid, double d_sat) {
  const int k = window_cells(grid, d_sat);
  std::vector<float> out(grid.size());
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      out[grid.index({r, c})] = cell_clearance(grid, {r, c}, k, d_sat);
    }
  }
  return out;
}

std::vector<float> clearance_field(const OccupancyGrid& grid, double d_sat) {
  const int k = window_cells(grid, d_sat);
  const int h = grid.height();
  const int w = grid.width();
  std::vector<float> out(grid.size());
#pragma omp parallel for schedule(static)
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      out[grid.index({r, c})] = cell_clearance(grid, {r, c}, k, d_sat);
    }
  }
  return out;
}

ClearanceMap::ClearanceMap(OccupancyGrid grid, double d_sat)
    : grid_(std::move(grid)), d_sat_(d_sat) {
  if (!(d_sat > 0.0)) throw ConfigError("d_sat must be > 0");
  field_ = clearance_field(grid_, d_sat_);
}

std::optional<double> ClearanceMap::clearance_at(double x, double y) const {
  const GridIndex c = grid_.world_to_cell(x, y);
  if (!grid_.in_grid(c)) return std::nullopt;
  return static_cast<double>(field_[grid_.index(c)]);
}

bool ClearanceMap::blocked(double x, double y) const {
  const GridIndex c = grid_.world_to_cell(x, y);
  return !grid_.in_grid(c) || grid_.occupied(c);
}

std::optional<double> score_trajectory(const std::vector<Pose2>& traj, const VelocityCommand& cmd,
                                       const Vec2& goal, const ClearanceMap& map,
                                       const DwaParams& p) {
  if (traj.empty()) throw DomainError("score_trajectory needs a nonempty trajectory");
  double d_min = map.d_sat();
  for (const Pose2& s : traj) {
    if (map.blocked(s.x, s.y)) return std::nullopt;
    d_min = std::min(d_min, *map.clearance_at(s.x, s.y));
  }
  const Pose2& end = traj.back();
  const double dx = goal.x - end.x;
  const double dy = goal.y - end.y;
  const double bearing_err =
      std::hypot(dx, dy) < 1e-9 ? 0.0 : std::abs(wrap_angle(std::atan2(dy, dx) - end.yaw));
  const double heading = 1.0 - bearing_err / M_PI;
  const double clearance = std::min(1.0, d_min / map.d_sat());
  const double velocity = std::clamp(cmd.v / p.v_max, 0.0, 1.0);
  return p.w_heading * heading + p.w_clearance * clearance + p.w_velocity * velocity;
}

DwaDecision dwa_evaluate(const Pose2& pose, const VelocityCommand& current, const Vec2& goal,
                         const ClearanceMap& map, const DwaParams& p) {
  const auto [vr, wr] = dynamic_window(current, p);
  const double w_mid = 0.5 * (wr.lo + wr.hi);
  const double w_half = 0.5 * (wr.hi - wr.lo);
  const int nv = p.samples_v;
  const int nw = p.samples_omega;

  DwaDecision best{{0.0, 0.5 * p.omega_max}, -1.0, true};
  for (int i = 0; i < nv; ++i) {
    const double v = vr.lo + (vr.hi - vr.lo) * static_cast<double>(i) / (nv - 1);
    for (int j = 0; j < nw; ++j) {
      // Symmetric about the window center so the middle sample is exact.
      const double w = w_mid + w_half * static_cast<double>(2 * j - (nw - 1)) / (nw - 1);
      const VelocityCommand cmd{v, w};
      const auto score = score_trajectory(rollout(pose, cmd, p), cmd, goal, map, p);
      if (!score) continue;
      // Strictly better wins; exact ties go to smaller |omega|, then the earlier sample.
      if (best.recovery || *score > best.score ||
          (*score == best.score && std::abs(w) < std::abs(best.cmd.omega))) {
        best = {cmd, *score, false};
      }
    }
  }
  return best;
}

VelocityCommand dwa_step(const Pose2& pose, const VelocityCommand& current, const Vec2& goal,
                         const ClearanceMap& map, const DwaParams& p) {
  return dwa_evaluate(pose, current, goal, map, p).cmd;
}

}  // namespace mmnav
