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

#include "mmnav/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mmnav/errors.hpp"

namespace mmnav {

using nlohmann::json;

namespace {

Vec3 vec3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw ConfigError(std::string(what) + " must be a 3-vector");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Aabb box(const json& j, const char* what) {
  try {
    return Aabb(vec3(j.at("min"), what), vec3(j.at("max"), what));
  } catch (const DomainError& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

GroundModel ground(const json& j) {
  if (j.contains("const")) return ConstantGround{j.at("const").get<double>()};
  if (j.contains("heightmap")) {
    const json& h = j.at("heightmap");
    Heightmap m;
    const json& o = h.at("origin");
    if (!o.is_array() || o.size() != 2) throw ConfigError("heightmap origin must be a 2-vector");
    m.origin = {o[0].get<double>(), o[1].get<double>()};
    m.resolution = h.at("resolution").get<double>();
    m.rows = h.at("rows").get<int>();
    m.cols = h.at("cols").get<int>();
    m.data = h.at("data").get<std::vector<double>>();
    if (!(m.resolution > 0) || m.rows < 2 || m.cols < 2 ||
        m.data.size() != static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(m.cols)) {
      throw ConfigError("heightmap needs resolution > 0, rows, cols >= 2 and rows*cols samples");
    }
    return m;
  }
  throw ConfigError("ground must be {\"const\": z} or {\"heightmap\": {...}}");
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

json point(const Vec3& p) { return json::array({p.x, p.y, p.z}); }

}  // namespace

Scenario parse_scenario(std::string_view text) {
  const json j = parse(text);
  try {
    std::vector<Obstacle> obstacles;
    if (j.contains("obstacles")) {
      for (const json& o : j.at("obstacles")) {
        obstacles.push_back({box(o, "obstacle"), o.value("name", std::string())});
      }
    }
    Scenario s{Environment(box(j.at("bounds"), "bounds"), ground(j.at("ground")),
                           std::move(obstacles)),
               std::nullopt,
               {},
               {}};
    if (j.contains("start")) s.start = vec3(j.at("start"), "start");
    if (j.contains("waypoints")) {
      for (const json& w : j.at("waypoints")) s.waypoints.push_back(vec3(w, "waypoint"));
    }
    if (j.contains("roadmap")) {
      const json& r = j.at("roadmap");
      RoadmapOverrides& o = s.roadmap;
      if (r.contains("n_ground")) o.n_ground = r.at("n_ground").get<int>();
      if (r.contains("n_air")) o.n_air = r.at("n_air").get<int>();
      if (r.contains("radius")) o.radius = r.at("radius").get<double>();
      if (r.contains("clearance")) o.clearance = r.at("clearance").get<double>();
      if (r.contains("min_air_clearance")) {
        o.min_air_clearance = r.at("min_air_clearance").get<double>();
      }
      if (r.contains("z_max")) o.z_max = r.at("z_max").get<double>();
    }
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("environment file: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("environment file: ") + e.what());
  }
}

PrmParams RoadmapOverrides::apply(PrmParams p) const {
  p.n_ground = n_ground.value_or(p.n_ground);
  p.n_air = n_air.value_or(p.n_air);
  p.radius = radius.value_or(p.radius);
  p.clearance = clearance.value_or(p.clearance);
  p.min_air_clearance = min_air_clearance.value_or(p.min_air_clearance);
  if (z_max) p.z_max = z_max;
  return p;
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_text_file(path)); }

CostConfig parse_cost_config(std::string_view text) {
  const json j = parse(text);
  CostConfig c;
  try {
    c.cost.ground_power = j.at("P_m").get<double>();
    c.cost.ground_speed = j.at("v_g").get<double>();
    c.cost.flight_power = j.at("P_f").get<double>();
    c.cost.flight_speed = j.at("v_f").get<double>();
    c.cost.transition_power = j.at("P_t").get<double>();
    c.cost.transition_time = j.at("t_t").get<double>();
    c.cost.mass = j.at("m").get<double>();
    c.cost.gravity = j.at("g").get<double>();
    if (j.contains("dwa")) {
      const json& d = j.at("dwa");
      DwaParams& p = c.dwa;
      p.v_max = d.value("v_max", p.v_max);
      p.omega_max = d.value("omega_max", p.omega_max);
      p.accel_v = d.value("accel_v", p.accel_v);
      p.accel_omega = d.value("accel_omega", p.accel_omega);
      p.dt = d.value("dt", p.dt);
      p.horizon = d.value("horizon", p.horizon);
      p.samples_v = d.value("samples_v", p.samples_v);
      p.samples_omega = d.value("samples_omega", p.samples_omega);
      p.w_heading = d.value("w_heading", p.w_heading);
      p.w_clearance = d.value("w_clearance", p.w_clearance);
      p.w_velocity = d.value("w_velocity", p.w_velocity);
      p.d_sat = d.value("d_sat", p.d_sat);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("cost config: ") + e.what());
  }
  try {
    CostModel check(c.cost);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("cost config: ") + e.what());
  }
  c.dwa = normalize(c.dwa);
  return c;
}

CostConfig load_cost_config(const std::string& path) {
  return parse_cost_config(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw ConfigError("write failed: " + path);
}

// ---------------------------------------------------------------------------

std::string roadmap_json(const Roadmap& roadmap) {
  json nodes = json::array();
  for (const RoadmapNode& n : roadmap.nodes()) {
    nodes.push_back({{"id", n.id}, {"position", point(n.position)}, {"mode", to_string(n.mode)}});
  }
  json edges = json::array();
  for (const RoadmapEdge& e : roadmap.edges()) {
    edges.push_back({{"a", e.a},
                     {"b", e.b},
                     {"kind", to_string(e.kind)},
                     {"length", e.length},
                     {"cost_ab", e.cost_ab},
                     {"cost_ba", e.cost_ba}});
  }
  return json{{"nodes", nodes}, {"edges", edges}}.dump(1) + "\n";
}

namespace {

json plan_leg(const PlanResult& plan, const Roadmap& roadmap) {
  json edges = json::array();
  for (std::size_t i = 0; i < plan.edge_indices.size(); ++i) {
    const RoadmapEdge& e = roadmap.edges()[plan.edge_indices[i]];
    const NodeId from = plan.node_ids[i];
    edges.push_back({{"from", from},
                     {"to", e.other(from)},
                     {"kind", to_string(e.kind)},
                     {"length", e.length},
                     {"cost", e.cost_from(from)}});
  }
  json nodes = json::array();
  for (NodeId id : plan.node_ids) {
    const RoadmapNode& n = roadmap.node(id);
    nodes.push_back({{"id", id}, {"position", point(n.position)}, {"mode", to_string(n.mode)}});
  }
  return {{"node_ids", plan.node_ids},
          {"nodes", nodes},
          {"edges", edges},
          {"total_cost", plan.total_cost},
          {"cost_ground", plan.cost_ground},
          {"cost_flight", plan.cost_flight},
          {"cost_transition", plan.cost_transition},
          {"transitions", plan.transitions},
          {"expanded", plan.expanded}};
}

}  // namespace

std::string plan_json(const std::vector<PlannedLeg>& legs) {
  json out = json::array();
  PlanResult sum;
  for (const PlannedLeg& l : legs) {
    out.push_back(plan_leg(l.plan, l.query.roadmap));
    sum.total_cost += l.plan.total_cost;
    sum.cost_ground += l.plan.cost_ground;
    sum.cost_flight += l.plan.cost_flight;
    sum.cost_transition += l.plan.cost_transition;
    sum.transitions += l.plan.transitions;
  }
  const json j{{"legs", out},
               {"total_cost", sum.total_cost},
               {"cost_ground", sum.cost_ground},
               {"cost_flight", sum.cost_flight},
               {"cost_transition", sum.cost_transition},
               {"transitions", sum.transitions}};
  return j.dump(1) + "\n";
}

std::string plan_edges_csv(const std::vector<PlannedLeg>& legs) {
  std::string out = "leg,index,a,b,kind,length,cost\n";
  for (std::size_t k = 0; k < legs.size(); ++k) {
    const PlanResult& plan = legs[k].plan;
    const Roadmap& roadmap = legs[k].query.roadmap;
    for (std::size_t i = 0; i < plan.edge_indices.size(); ++i) {
      const RoadmapEdge& e = roadmap.edges()[plan.edge_indices[i]];
      const NodeId from = plan.node_ids[i];
      out += std::to_string(k) + "," + std::to_string(i) + "," + std::to_string(from) + "," +
             std::to_string(e.other(from)) + "," + std::string(to_string(e.kind)) + "," +
             fmt(e.length) + "," + fmt(e.cost_from(from)) + "\n";
    }
  }
  return out;
}

std::string trajectory_csv(const std::vector<TrajectoryRecord>& log) {
  std::string out = "t,x,y,z,yaw,mode,phase,v,omega,e_ground,e_flight,e_transition,e_total\n";
  for (const TrajectoryRecord& r : log) {
    const RobotState& s = r.state;
    out += fmt(r.t) + "," + fmt(s.x) + "," + fmt(s.y) + "," + fmt(s.z) + "," + fmt(s.yaw) + "," +
           std::string(to_string(s.mode)) + "," + std::string(to_string(r.phase)) + "," +
           fmt(s.v) + "," + fmt(s.omega) + "," + fmt(r.energy.ground) + "," +
           fmt(r.energy.flight) + "," + fmt(r.energy.transition) + "," + fmt(r.energy.total) +
           "\n";
  }
  return out;
}

std::string summary_json(const MissionResult& result) {
  json timeline = json::array();
  for (const PhaseSpan& s : result.timeline) {
    timeline.push_back({{"phase", to_string(s.phase)}, {"t_start", s.t_start}, {"t_end", s.t_end}});
  }
  json final_position = nullptr;
  if (!result.log.empty()) final_position = point(result.log.back().state.position());
  const json j{{"outcome", to_string(result.outcome)},
               {"diagnostic", result.diagnostic},
               {"duration", result.duration},
               {"morphs", result.morphs},
               {"final_position", final_position},
               {"ledger",
                {{"ground", result.ledger.ground},
                 {"flight", result.ledger.flight},
                 {"transition", result.ledger.transition},
                 {"total", result.ledger.total}}},
               {"takeoff_overshoot", result.takeoff_overshoot},
               {"descend_overshoot", result.descend_overshoot},
               {"collision_records", result.collision_records},
               {"timeline", timeline}};
  return j.dump(1) + "\n";
}

}  // namespace mmnav
