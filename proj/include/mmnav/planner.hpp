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

#ifndef MMNAV_PLANNER_HPP
#define MMNAV_PLANNER_HPP

#include <cstddef>
#include <vector>

#include "mmnav/costmodel.hpp"
#include "mmnav/roadmap.hpp"

namespace mmnav {

/// Minimum-energy route through the roadmap with its per-mode breakdown.
/// Transition edges split into C_t (cost_transition) and their flight part
/// (cost_flight), so cost_transition == transitions * C_t.
struct PlanResult {
  std::vector<NodeId> node_ids;
  std::vector<std::size_t> edge_indices;  // into Roadmap::edges()
  double total_cost = 0.0;
  double cost_ground = 0.0;
  double cost_flight = 0.0;
  double cost_transition = 0.0;
  int transitions = 0;
  int ground_edges = 0;
  int flight_edges = 0;
  std::size_t expanded = 0;
};

struct AstarOptions {
  HeuristicMode mode = HeuristicMode::Admissible;
  /// Multiplies the heuristic. Anything but 1.0 voids optimality; verification hook.
  double heuristic_scale = 1.0;
};

/// Heuristic used by astar_multimodal. The climb term is dropped when the
/// roadmap has sloped ground edges.
double search_heuristic(const Roadmap& roadmap, const Vec3& p, const Vec3& goal,
                        const CostModel& cm, const AstarOptions& opts = {});

/// A* over the roadmap under g = sum ground + sum flight + N_t C_t.
/// Queue order is (f, g, node id). Throws NoPathError.
PlanResult astar_multimodal(const Roadmap& roadmap, NodeId start, NodeId goal, const CostModel& cm,
                            const AstarOptions& opts = {});

/// Uniform-cost search with the same tie-breaking and result contract.
PlanResult dijkstra_oracle(const Roadmap& roadmap, NodeId start, NodeId goal, const CostModel& cm);

/// Optimal cost from every node to `goal` (reverse uniform-cost search over
/// directional edge costs); +inf where unreachable.
std::vector<double> cost_to_goal(const Roadmap& roadmap, NodeId goal);

/// One start->goal query of a waypoint chain; node ids refer to `query.roadmap`.
struct PlannedLeg {
  QueryNodes query;
  PlanResult plan;
};

/// Plans start->w1->w2... on a shared roadmap, inserting query nodes per leg.
/// Throws NoPathError, QueryIsolatedError or DomainError.
std::vector<PlannedLeg> plan_chain(const Roadmap& roadmap, const Vec3& start,
                                   const std::vector<Vec3>& waypoints, const Environment& env,
                                   const CostModel& cm, const PrmParams& params,
                                   const AstarOptions& opts = {});

// ---------------------------------------------------------------------------

enum class SegmentKind { Drive, MorphThenFly, Fly, LandThenMorph };

std::string_view to_string(SegmentKind k);

/// `waypoints` holds the end position of every edge in the segment; the
/// segment begins where the previous one ended (or at `start` for the first).
struct MissionSegment {
  SegmentKind kind = SegmentKind::Drive;
  Vec3 start;
  std::vector<Vec3> waypoints;
};

/// Groups consecutive Ground and Flight edges; each Transition edge becomes its
/// own MorphThenFly or LandThenMorph segment. Throws DomainError on empty plans.
std::vector<MissionSegment> path_to_waypoints(const PlanResult& plan, const Roadmap& roadmap);

}  // namespace mmnav

#endif  // MMNAV_PLANNER_HPP
