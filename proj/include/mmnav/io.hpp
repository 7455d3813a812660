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

#ifndef MMNAV_IO_HPP
#define MMNAV_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmnav/costmodel.hpp"
#include "mmnav/env.hpp"
#include "mmnav/localnav.hpp"
#include "mmnav/planner.hpp"
#include "mmnav/roadmap.hpp"
#include "mmnav/sim.hpp"

namespace mmnav {

/// Optional per-scenario roadmap settings; unset fields keep PrmParams defaults.
struct RoadmapOverrides {
  std::optional<int> n_ground;
  std::optional<int> n_air;
  std::optional<double> radius;
  std::optional<double> clearance;
  std::optional<double> min_air_clearance;
  std::optional<double> z_max;

  PrmParams apply(PrmParams p) const;
};

/// Environment file contents. `start`, `waypoints` and `roadmap` are optional
/// extras used as CLI defaults.
struct Scenario {
  Environment env;
  std::optional<Vec3> start;
  std::vector<Vec3> waypoints;
  RoadmapOverrides roadmap;
};

/// Throws ConfigError on malformed documents and on invalid geometry.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

struct CostConfig {
  CostParams cost;
  DwaParams dwa;
};

/// Eight cost fields (P_m, v_g, P_f, v_f, P_t, t_t, m, g), all required, plus
/// an optional "dwa" object overriding DwaParams fields.
CostConfig parse_cost_config(std::string_view text);
CostConfig load_cost_config(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

// ---------------------------------------------------------------------------
// Exports. All are deterministic functions of their inputs.

std::string roadmap_json(const Roadmap& roadmap);
/// Per-leg node sequences and edges plus chain totals.
std::string plan_json(const std::vector<PlannedLeg>& legs);
/// Header: leg,index,a,b,kind,length,cost
std::string plan_edges_csv(const std::vector<PlannedLeg>& legs);
/// Header: t,x,y,z,yaw,mode,phase,v,omega,e_ground,e_flight,e_transition,e_total
std::string trajectory_csv(const std::vector<TrajectoryRecord>& log);
std::string summary_json(const MissionResult& result);

}  // namespace mmnav

#endif  // MMNAV_IO_HPP
