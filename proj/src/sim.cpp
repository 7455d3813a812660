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

#include "mmnav/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mmnav/errors.hpp"

namespace mmnav {

std::string_view to_string(RobotMode m) {
  switch (m) {
    case RobotMode::UGV: return "UGV";
    case RobotMode::UAS: return "UAS";
    case RobotMode::Morphing: return "Morphing";
  }
  return "?";
}

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::GroundNav: return "GroundNav";
    case Phase::MorphToUas: return "MorphToUas";
    case Phase::Takeoff: return "Takeoff";
    case Phase::Cruise: return "Cruise";
    case Phase::Descend: return "Descend";
    case Phase::MorphToUgv: return "MorphToUgv";
    case Phase::Done: return "Done";
    case Phase::Failed: return "Failed";
  }
  return "?";
}

bool legal_transition(Phase from, Phase to) {
  if (to == Phase::Failed) return from != Phase::Done && from != Phase::Failed;
  switch (from) {
    case Phase::GroundNav: return to == Phase::MorphToUas || to == Phase::Done;
    case Phase::MorphToUas: return to == Phase::Takeoff;
    case Phase::Takeoff: return to == Phase::Cruise;
    case Phase::Cruise: return to == Phase::Descend;
    case Phase::Descend: return to == Phase::MorphToUgv;
    case Phase::MorphToUgv: return to == Phase::GroundNav;
    case Phase::Done:
    case Phase::Failed: return false;
  }
  return false;
}

void SimConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("sim dt must be > 0");
  if (!(goal_tolerance > 0.0 && flight_tolerance > 0.0)) {
    throw ConfigError("arrival tolerances must be > 0");
  }
  if (!(landing_tolerance >= 0.0)) throw ConfigError("landing tolerance must be >= 0");
  if (!(cruise_altitude > 0.0 && climb_rate > 0.0)) {
    throw ConfigError("cruise altitude and climb rate must be > 0");
  }
  if (actuation_latency < 0.0) throw ConfigError("actuation latency must be >= 0");
  if (!(max_mission_time > 0.0 && replan_interval > 0.0 && lookahead > 0.0)) {
    throw ConfigError("mission time, replan interval and lookahead must be > 0");
  }
  if (pose_noise_sigma < 0.0) throw ConfigError("pose noise sigma must be >= 0");
}

namespace {

void clamp_to_footprint(const Environment& env, double& x, double& y) {
  x = std::clamp(x, env.bounds().min().x, env.bounds().max().x);
  y = std::clamp(y, env.bounds().min().y, env.bounds().max().y);
}

}  // namespace

RobotState step_ugv(const RobotState& state, const VelocityCommand& cmd, double dt,
                    const Environment& env) {
  if (state.mode != RobotMode::UGV) throw StateMachineError("step_ugv requires UGV mode");
  RobotState s = state;
  s.x += cmd.v * std::cos(state.yaw) * dt;
  s.y += cmd.v * std::sin(state.yaw) * dt;
  s.yaw = wrap_angle(state.yaw + cmd.omega * dt);
  clamp_to_footprint(env, s.x, s.y);
  s.z = env.ground_height(s.x, s.y);
  s.v = cmd.v;
  s.omega = cmd.omega;
  s.vz = 0.0;
  return s;
}

Vec3 uas_velocity(const RobotState& state, const Vec3& target, FlightMotion motion,
                  const SimConfig& cfg, double flight_speed, double dt) {
  Vec3 d = target - state.position();
  double cap = flight_speed;
  switch (motion) {
    case FlightMotion::Vertical:
      d.x = d.y = 0.0;
      cap = cfg.climb_rate;
      break;
    case FlightMotion::Horizontal:
      d.z = 0.0;
      break;
    case FlightMotion::Straight:
      break;
  }
  const double dist = d.norm();
  if (dist == 0.0) return {};
  const double speed = std::min(cap, dist / dt);
  return d * (speed / dist);
}

RobotState step_uas(const RobotState& state, const Vec3& target, FlightMotion motion,
                    const SimConfig& cfg, double flight_speed, double dt) {
  if (state.mode != RobotMode::UAS) throw StateMachineError("step_uas requires UAS mode");
  const Vec3 vel = uas_velocity(state, target, motion, cfg, flight_speed, dt);
  RobotState s = state;
  s.x += vel.x * dt;
  s.y += vel.y * dt;
  s.z += vel.z * dt;
  s.v = vel.norm();
  s.vz = vel.z;
  s.omega = 0.0;
  return s;
}

EnergyLedger accumulate_energy(const EnergyLedger& ledger, const RobotState& state, double dt,
                               const CostModel& cm) {
  if (!(dt > 0.0)) throw DomainError("accumulate_energy needs dt > 0");
  const CostParams& p = cm.params();
  EnergyLedger out = ledger;
  switch (state.mode) {
    case RobotMode::UGV:
      if (state.v > 0.0) out.ground += p.ground_power * dt;
      break;
    case RobotMode::UAS:
      out.flight += p.flight_power * dt + cm.weight() * std::max(0.0, state.vz * dt);
      break;
    case RobotMode::Morphing:
      out.transition += p.transition_power * dt;
      break;
  }
  out.total = out.ground + out.flight + out.transition;
  return out;
}

std::vector<MissionLeg> legs_from_segments(const std::vector<MissionSegment>& segments) {
  std::vector<MissionLeg> legs;
  for (const auto& seg : segments) {
    switch (seg.kind) {
      case SegmentKind::Drive:
        legs.emplace_back(DriveLeg{seg.waypoints});
        break;
      case SegmentKind::MorphThenFly:
        legs.emplace_back(FlyLeg{seg.waypoints});
        break;
      case SegmentKind::Fly:
      case SegmentKind::LandThenMorph: {
        if (legs.empty() || !std::holds_alternative<FlyLeg>(legs.back())) {
          throw DomainError("flight segment without a preceding morph");
        }
        auto& wps = std::get<FlyLeg>(legs.back()).waypoints;
        wps.insert(wps.end(), seg.waypoints.begin(), seg.waypoints.end());
        break;
      }
    }
  }
  return legs;
}

std::vector<MissionLeg> legs_from_plan(const std::vector<PlannedLeg>& chain) {
  std::vector<MissionLeg> legs;
  for (const PlannedLeg& l : chain) {
    if (l.plan.edge_indices.empty()) continue;
    auto part = legs_from_segments(path_to_waypoints(l.plan, l.query.roadmap));
    legs.insert(legs.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  return legs;
}

// ---------------------------------------------------------------------------

Mission::Mission(const Environment& env, const CostModel& cm, const DwaParams& dwa,
                 const SimConfig& cfg, const Vec3& start, double start_yaw,
                 std::vector<MissionLeg> legs, std::uint64_t seed)
    : env_(env),
      cm_(cm),
      dwa_(normalize(dwa)),
      cfg_((cfg.validate(), cfg)),
      map_(project_to_grid(env, cfg.grid), dwa_.d_sat),
      legs_(std::move(legs)),
      noise_rng_(seed) {
  if (legs_.empty()) throw DomainError("mission needs at least one waypoint");
  if (!env.in_footprint(start.x, start.y)) throw DomainError("start outside environment footprint");
  state_.x = start.x;
  state_.y = start.y;
  state_.z = env.ground_height(start.x, start.y);
  state_.yaw = wrap_angle(start_yaw);
  delay_ticks_ = static_cast<std::size_t>(std::lround(cfg_.actuation_latency / cfg_.dt));
  result_.timeline.push_back({Phase::GroundNav, 0.0, 0.0});
  record();
  if (env.point_in_collision(state_.position(), 0.0)) {
    fail("invalid start: robot inside obstacle");
  }
}

void Mission::transition(Phase next) {
  if (!legal_transition(phase_, next)) {
    throw StateMachineError(std::string("illegal phase change ") + std::string(to_string(phase_)) +
                            " -> " + std::string(to_string(next)));
  }
  result_.timeline.back().t_end = time_;
  result_.timeline.push_back({next, time_, time_});
  phase_ = next;
  phase_timer_ = 0.0;
}

void Mission::fail(std::string why) {
  result_.diagnostic = std::move(why);
  transition(Phase::Failed);
}

void Mission::record() {
  TrajectoryRecord rec{time_, state_, phase_, ledger_};
  if (env_.point_in_collision(state_.position(), 0.0)) ++result_.collision_records;
  result_.log.push_back(rec);
}

Pose2 Mission::sensed_pose() {
  Pose2 p{state_.x, state_.y, state_.yaw};
  if (cfg_.pose_noise_sigma > 0.0) {
    std::normal_distribution<double> n(0.0, cfg_.pose_noise_sigma);
    p.x += n(noise_rng_);
    p.y += n(noise_rng_);
  }
  return p;
}

Pose2 Mission::control_pose() {
  Pose2 p = sensed_pose();
  for (const VelocityCommand& c : ground_delay_) {
    p.x += c.v * std::cos(p.yaw) * cfg_.dt;
    p.y += c.v * std::sin(p.yaw) * cfg_.dt;
    p.yaw = wrap_angle(p.yaw + c.omega * cfg_.dt);
  }
  return p;
}

Vec3 Mission::predicted_position() const {
  Vec3 p = state_.position();
  for (const Vec3& v : flight_delay_) p = p + v * cfg_.dt;
  return p;
}

void Mission::step() {
  if (finished()) return;
  if (time_ >= cfg_.max_mission_time - 1e-9) {
    fail("mission time limit exceeded");
    return;
  }
  bool moved = false;
  for (int guard = 0; guard < 16 && !moved && !finished(); ++guard) {
    switch (phase_) {
      case Phase::GroundNav: moved = ground_tick(); break;
      case Phase::MorphToUas:
      case Phase::MorphToUgv: moved = morph_tick(); break;
      case Phase::Takeoff:
      case Phase::Cruise:
      case Phase::Descend: moved = flight_tick(); break;
      case Phase::Done:
      case Phase::Failed: break;
    }
  }
  if (!moved) return;
  time_ += cfg_.dt;
  if (state_.mode != RobotMode::Morphing) ledger_ = accumulate_energy(ledger_, state_, cfg_.dt, cm_);
  record();
}

// ---------------------------------------------------------------------------
// Ground navigation

void Mission::advance_leg() {
  ++leg_;
  path_.clear();
  approach_goal_.reset();
  last_plan_time_ = -1.0;
  if (leg_ >= legs_.size()) transition(Phase::Done);
}

Mission::PlanStatus Mission::plan_grid_path(const Vec3& target) {
  const OccupancyGrid& grid = map_.grid();
  GridIndex start = grid.world_to_cell(state_.x, state_.y);
  if (!grid.in_grid(start)) {
    fail("robot left the occupancy grid");
    return PlanStatus::Failed;
  }
  if (grid.occupied(start)) {
    // Inside the inflation margin: plan from the closest free cell.
    const int reach =
        static_cast<int>(std::ceil(cfg_.grid.inflation / grid.resolution())) + 2;
    const auto free = nearest_free_cell(grid, start, reach);
    if (!free) {
      fail("invalid start: robot inside obstacle");
      return PlanStatus::Failed;
    }
    start = *free;
  }
  last_plan_time_ = time_;
  const auto path = grid_plan(grid, start, grid.world_to_cell(target.x, target.y));
  if (!path) return PlanStatus::NoPath;
  path_.clear();
  for (const GridIndex& c : path->cells) path_.push_back(grid.cell_center(c));
  path_.back() = {target.x, target.y};
  path_cursor_ = 0;
  return PlanStatus::Found;
}

Mission::Carrot Mission::carrot(const Pose2& pose) {
  const Vec2 p{pose.x, pose.y};
  if (path_.size() == 1) return {path_[0], std::hypot(path_[0].x - p.x, path_[0].y - p.y)};

  std::size_t seg = path_cursor_;
  Vec2 proj = path_[seg];
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = path_cursor_; i + 1 < path_.size(); ++i) {
    const Vec2& a = path_[i];
    const Vec2& b = path_[i + 1];
    const double lx = b.x - a.x;
    const double ly = b.y - a.y;
    const double l2 = lx * lx + ly * ly;
    const double t =
        l2 < 1e-18 ? 0.0 : std::clamp(((p.x - a.x) * lx + (p.y - a.y) * ly) / l2, 0.0, 1.0);
    const Vec2 q{a.x + t * lx, a.y + t * ly};
    const double d = std::hypot(q.x - p.x, q.y - p.y);
    if (d < best) {
      best = d;
      seg = i;
      proj = q;
    }
  }
  path_cursor_ = seg;

  Carrot c{path_.back(), 0.0};
  double ahead = cfg_.lookahead;
  bool placed = false;
  for (std::size_t i = seg; i + 1 < path_.size(); ++i) {
    const Vec2 a = i == seg ? proj : path_[i];
    const Vec2& b = path_[i + 1];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (!placed && ahead <= len) {
      const double t = len > 0.0 ? ahead / len : 0.0;
      c.point = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      placed = true;
    }
    ahead -= len;
    c.remaining += len;
  }
  return c;
}

VelocityCommand Mission::escape_command(const Pose2& pose) const {
  const OccupancyGrid& grid = map_.grid();
  const int reach = static_cast<int>(std::ceil(cfg_.grid.inflation / grid.resolution())) + 2;
  const auto free = nearest_free_cell(grid, grid.world_to_cell(pose.x, pose.y), reach);
  if (!free) return {0.0, 0.0};
  const Vec2 c = grid.cell_center(*free);
  const double err = wrap_angle(std::atan2(c.y - pose.y, c.x - pose.x) - pose.yaw);
  const double omega = std::clamp(2.0 * err, -dwa_.omega_max, dwa_.omega_max);
  const double v = std::abs(err) < 0.5 ? std::min(0.3, dwa_.v_max) : 0.0;
  return {v, omega};
}

std::optional<VelocityCommand> Mission::approach_command(const Vec2& goal, const Pose2& pose,
                                                         double v_now) const {
  const double dx = goal.x - pose.x;
  const double dy = goal.y - pose.y;
  const double dist = std::hypot(dx, dy);
  if (dist < 1e-9) return std::nullopt;
  if (!env_.in_footprint(pose.x, pose.y)) return std::nullopt;
  const Vec3 from{pose.x, pose.y, env_.ground_height(pose.x, pose.y)};
  const Vec3 end{goal.x, goal.y, env_.ground_height(goal.x, goal.y)};
  if (env_.segment_in_collision(from, end, 0.0)) return std::nullopt;
  const double err = wrap_angle(std::atan2(dy, dx) - pose.yaw);
  const double omega = std::clamp(2.0 * err, -dwa_.omega_max, dwa_.omega_max);
  double v = 0.0;
  if (std::abs(err) < 0.3) {
    const double a = dwa_.accel_v;
    v = std::min({dwa_.v_max, v_now + a * cfg_.dt, std::sqrt(2.0 * a * dist), dist / cfg_.dt});
  }
  return VelocityCommand{v, omega};
}

void Mission::drive_toward() {
  const Pose2 pose = control_pose();
  const VelocityCommand now =
      ground_delay_.empty() ? VelocityCommand{state_.v, state_.omega} : ground_delay_.back();
  const Carrot c = carrot(pose);
  const Vec2& goal = c.point;
  const auto terminal =
      c.remaining <= cfg_.lookahead ? approach_command(path_.back(), pose, now.v) : std::nullopt;

  VelocityCommand cmd;
  if (map_.blocked(pose.x, pose.y)) {
    cmd = escape_command(pose);
  } else if (terminal) {
    cmd = *terminal;
  } else {
    const DwaDecision d = dwa_evaluate(pose, now, goal, map_, dwa_);
    cmd = d.cmd;
    const bool latched =
        approach_goal_ && approach_goal_->x == goal.x && approach_goal_->y == goal.y;
    const bool stalled = d.recovery || (d.cmd.v == 0.0 && now.v == 0.0);
    approach_goal_.reset();
    if (latched || stalled) {
      if (const auto a = approach_command(goal, pose, now.v)) {
        cmd = *a;
        approach_goal_ = goal;
      }
    }
  }
  VelocityCommand applied{};
  ground_delay_.push_back(cmd);
  if (ground_delay_.size() > delay_ticks_) {
    applied = ground_delay_.front();
    ground_delay_.pop_front();
  }
  state_ = step_ugv(state_, applied, cfg_.dt, env_);
}

bool Mission::ground_tick() {
  if (leg_ >= legs_.size()) {
    transition(Phase::Done);
    return false;
  }
  MissionLeg& leg = legs_[leg_];

  if (auto* fly = std::get_if<FlyLeg>(&leg)) {
    if (fly->waypoints.empty()) {
      advance_leg();
      return false;
    }
    flight_targets_ = fly->waypoints;
    Vec3& land = flight_targets_.back();
    land.z = env_.ground_height(land.x, land.y) + cfg_.landing_tolerance;
    flight_target_ = 0;
    fixed_height_ = false;
    resume_leg_after_landing_ = false;
    transition(Phase::MorphToUas);
    return false;
  }

  if (auto* drive = std::get_if<DriveLeg>(&leg)) {
    if (drive->waypoints.empty() ||
        distance_xy(state_.position(), drive->waypoints.back()) <= cfg_.goal_tolerance) {
      advance_leg();
      return false;
    }
    if (path_.empty()) {
      path_.push_back({state_.x, state_.y});
      for (const Vec3& w : drive->waypoints) path_.push_back({w.x, w.y});
      path_cursor_ = 0;
    }
    drive_toward();
    return true;
  }

  const Vec3 goal = std::get<GoalLeg>(leg).goal;
  if (distance_xy(state_.position(), goal) <= cfg_.goal_tolerance) {
    advance_leg();
    return false;
  }
  if (path_.empty() || time_ - last_plan_time_ >= cfg_.replan_interval - 1e-9) {
    switch (plan_grid_path(goal)) {
      case PlanStatus::Failed: return false;
      case PlanStatus::NoPath:
        if (cfg_.assume_flyable) {
          begin_fixed_height_flight(goal);
        } else {
          fail("no ground path to waypoint");
        }
        return false;
      case PlanStatus::Found: break;
    }
  }
  drive_toward();
  return true;
}

// ---------------------------------------------------------------------------
// Flight

void Mission::begin_fixed_height_flight(const Vec3& target) {
  if (!env_.in_footprint(target.x, target.y)) {
    fail("unreachable landing: waypoint outside bounds");
    return;
  }
  const double g_land = env_.ground_height(target.x, target.y);
  const Vec3 touchdown{target.x, target.y, g_land};
  if (env_.point_in_collision(touchdown, 0.0)) {
    fail("unreachable landing: waypoint inside an obstacle");
    return;
  }
  cruise_z_ = std::max(state_.z, g_land) + cfg_.cruise_altitude;
  const Vec3 up{state_.x, state_.y, cruise_z_};
  const Vec3 over{target.x, target.y, cruise_z_};
  const Vec3 land{target.x, target.y, g_land + cfg_.landing_tolerance};
  if (cruise_z_ > env_.bounds().max().z || env_.segment_in_collision(state_.position(), up, 0.0) ||
      env_.segment_in_collision(up, over, 0.0) || env_.segment_in_collision(over, land, 0.0)) {
    fail("flight corridor blocked at cruise altitude");
    return;
  }
  flight_targets_ = {up, over, land};
  flight_target_ = 0;
  fixed_height_ = true;
  resume_leg_after_landing_ = true;
  transition(Phase::MorphToUas);
}

bool Mission::flight_tick() {
  const std::size_t last = flight_targets_.size() - 1;
  const Vec3& landing = flight_targets_[last];
  FlightMotion motion = FlightMotion::Straight;

  switch (phase_) {
    case Phase::Takeoff: {
      const Vec3& t = flight_targets_[0];
      const Vec3 p = predicted_position();
      const bool arrived = fixed_height_ ? p.z >= cruise_z_ - 1e-9
                                         : distance(p, t) <= cfg_.flight_tolerance;
      if (arrived) {
        flight_target_ = std::min<std::size_t>(1, last);
        transition(Phase::Cruise);
        return false;
      }
      motion = fixed_height_ ? FlightMotion::Vertical : FlightMotion::Straight;
      break;
    }
    case Phase::Cruise: {
      if (flight_target_ >= last) {
        descend_virtual_z_ = state_.z;
        transition(Phase::Descend);
        return false;
      }
      const Vec3& t = flight_targets_[flight_target_];
      const Vec3 p = predicted_position();
      const bool arrived = fixed_height_ ? distance_xy(p, t) <= cfg_.flight_tolerance
                                         : distance(p, t) <= cfg_.flight_tolerance;
      if (arrived) {
        ++flight_target_;
        return false;
      }
      motion = fixed_height_ ? FlightMotion::Horizontal : FlightMotion::Straight;
      break;
    }
    case Phase::Descend: {
      const bool pending_descent = std::any_of(flight_delay_.begin(), flight_delay_.end(),
                                               [](const Vec3& v) { return v.z < 0.0; });
      if (state_.z <= landing.z + 1e-9 && !pending_descent) {
        state_.mode = RobotMode::Morphing;
        state_.z = env_.ground_height(state_.x, state_.y);
        state_.v = state_.omega = state_.vz = 0.0;
        flight_delay_.clear();
        transition(Phase::MorphToUgv);
        return false;
      }
      motion = fixed_height_ ? FlightMotion::Vertical : FlightMotion::Straight;
      break;
    }
    default: throw StateMachineError("flight_tick outside a flight phase");
  }

  const Vec3& target = flight_targets_[phase_ == Phase::Descend ? last : flight_target_];
  // Airborne waypoints are pursued from the predicted position; the landing
  // descent is commanded on measured altitude.
  RobotState basis = state_;
  if (phase_ != Phase::Descend) {
    const Vec3 p = predicted_position();
    basis.x = p.x;
    basis.y = p.y;
    basis.z = p.z;
  }
  const Vec3 cmd = uas_velocity(basis, target, motion, cfg_, cm_.params().flight_speed, cfg_.dt);
  Vec3 applied{};
  flight_delay_.push_back(cmd);
  if (flight_delay_.size() > delay_ticks_) {
    applied = flight_delay_.front();
    flight_delay_.pop_front();
  }
  const double z_old = state_.z;
  double x = state_.x + applied.x * cfg_.dt;
  double y = state_.y + applied.y * cfg_.dt;
  clamp_to_footprint(env_, x, y);
  const double z = std::max(z_old + applied.z * cfg_.dt, env_.ground_height(x, y));
  state_.x = x;
  state_.y = y;
  state_.z = z;
  state_.v = applied.norm();
  state_.omega = 0.0;
  state_.vz = (z - z_old) / cfg_.dt;

  if (fixed_height_ && (phase_ == Phase::Takeoff || phase_ == Phase::Cruise)) {
    result_.takeoff_overshoot = std::max(result_.takeoff_overshoot, state_.z - cruise_z_);
  }
  if (phase_ == Phase::Descend) {
    // Unclamped altitude: how far the delayed commands would carry the robot
    // below the landing altitude if the ground did not stop it.
    descend_virtual_z_ += applied.z * cfg_.dt;
    result_.descend_overshoot =
        std::max(result_.descend_overshoot, landing.z - descend_virtual_z_);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Morphing

bool Mission::morph_tick() {
  const double ct = cm_.transition_cost();
  if (phase_timer_ >= cm_.params().transition_time - 1e-9) {
    ++morphs_;
    morph_base_ = morphs_ * ct;
    ledger_.transition = morph_base_;
    ledger_.total = ledger_.ground + ledger_.flight + ledger_.transition;
    if (phase_ == Phase::MorphToUas) {
      state_.mode = RobotMode::UAS;
      flight_delay_.clear();
      flight_target_ = 0;
      transition(Phase::Takeoff);
    } else {
      state_.mode = RobotMode::UGV;
      state_.z = env_.ground_height(state_.x, state_.y);
      ground_delay_.clear();
      path_.clear();
      transition(Phase::GroundNav);
      if (!resume_leg_after_landing_) advance_leg();
    }
    return false;
  }
  state_.mode = RobotMode::Morphing;
  state_.v = state_.omega = state_.vz = 0.0;
  ground_delay_.clear();
  phase_timer_ += cfg_.dt;
  // Exactly C_t per completed morph regardless of dt rounding.
  ledger_.transition =
      morph_base_ + std::min(cm_.params().transition_power * phase_timer_, ct);
  ledger_.total = ledger_.ground + ledger_.flight + ledger_.transition;
  return true;
}

// ---------------------------------------------------------------------------

MissionResult Mission::take_result() {
  result_.outcome = phase_;
  result_.ledger = ledger_;
  result_.morphs = morphs_;
  result_.duration = time_;
  result_.timeline.back().t_end = time_;
  return std::move(result_);
}

MissionResult run_legs(const Environment& env, const Vec3& start, std::vector<MissionLeg> legs,
                       const CostModel& cm, const DwaParams& dwa, const SimConfig& cfg,
                       std::uint64_t seed, double start_yaw) {
  Mission m(env, cm, dwa, cfg, start, start_yaw, std::move(legs), seed);
  while (!m.finished()) m.step();
  return m.take_result();
}

MissionResult run_mission(const Environment& env, const Vec3& start,
                          const std::vector<Vec3>& waypoints, const CostModel& cm,
                          const DwaParams& dwa, const SimConfig& cfg, std::uint64_t seed,
                          double start_yaw) {
  if (waypoints.empty()) throw DomainError("mission needs at least one waypoint");
  std::vector<MissionLeg> legs;
  legs.reserve(waypoints.size());
  for (const Vec3& w : waypoints) legs.emplace_back(GoalLeg{w});
  return run_legs(env, start, std::move(legs), cm, dwa, cfg, seed, start_yaw);
}

}  // namespace mmnav
