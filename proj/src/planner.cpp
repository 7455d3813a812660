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

#include "mmnav/planner.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "mmnav/errors.hpp"

namespace mmnav {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

using QueueEntry = std::tuple<double, double, NodeId>;  // f, g, id
using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>;

PlanResult assemble(const Roadmap& rm, NodeId start, NodeId goal,
                    const std::vector<std::size_t>& parent_edge, const CostModel& cm,
                    std::size_t expanded) {
  PlanResult r;
  r.expanded = expanded;
  for (NodeId v = goal; v != start;) {
    const std::size_t ei = parent_edge[static_cast<std::size_t>(v)];
    r.edge_indices.push_back(ei);
    r.node_ids.push_back(v);
    v = rm.edges()[ei].other(v);
  }
  r.node_ids.push_back(start);
  std::reverse(r.node_ids.begin(), r.node_ids.end());
  std::reverse(r.edge_indices.begin(), r.edge_indices.end());

  const double ct = cm.transition_cost();
  for (std::size_t i = 0; i < r.edge_indices.size(); ++i) {
    const RoadmapEdge& e = rm.edges()[r.edge_indices[i]];
    const double c = e.cost_from(r.node_ids[i]);
    r.total_cost += c;
    switch (e.kind) {
      case EdgeKind::Ground:
        r.cost_ground += c;
        ++r.ground_edges;
        break;
      case EdgeKind::Flight:
        r.cost_flight += c;
        ++r.flight_edges;
        break;
      case EdgeKind::Transition:
        r.cost_transition += ct;
        r.cost_flight += c - ct;
        ++r.transitions;
        break;
    }
  }
  return r;
}

template <typename Heuristic>
PlanResult best_first(const Roadmap& rm, NodeId start, NodeId goal, const CostModel& cm,
                      Heuristic&& h, bool guard_closed) {
  if (!rm.valid(start) || !rm.valid(goal)) throw DomainError("node id out of range");
  const std::size_t n = rm.nodes().size();
  std::vector<double> g(n, kInf);
  std::vector<std::size_t> parent(n, kNoEdge);
  std::vector<char> closed(n, 0);
  MinQueue open;
  g[static_cast<std::size_t>(start)] = 0.0;
  open.emplace(h(start), 0.0, start);
  std::size_t expanded = 0;

  while (!open.empty()) {
    const auto [f, gu, u] = open.top();
    open.pop();
    const auto ui = static_cast<std::size_t>(u);
    if (closed[ui] || gu > g[ui]) continue;
    closed[ui] = 1;
    ++expanded;
    if (u == goal) return assemble(rm, start, goal, parent, cm, expanded);
    for (std::size_t ei : rm.incident(u)) {
      const RoadmapEdge& e = rm.edges()[ei];
      const NodeId v = e.other(u);
      const auto vi = static_cast<std::size_t>(v);
      const double cand = gu + e.cost_from(u);
      if (closed[vi]) {
        if (guard_closed && cand < g[vi] - 1e-9 * std::max(1.0, g[vi])) {
          throw std::logic_error("A*: shorter path to a closed node; heuristic not consistent");
        }
        continue;
      }
      if (cand < g[vi]) {
        g[vi] = cand;
        parent[vi] = ei;
        open.emplace(cand + h(v), cand, v);
      }
    }
  }
  throw NoPathError(expanded);
}

}  // namespace

double search_heuristic(const Roadmap& roadmap, const Vec3& p, const Vec3& goal,
                        const CostModel& cm, const AstarOptions& opts) {
  double est = cm.heuristic(p, goal, opts.mode);
  // Free climbs along sloped ground edges would break the climb term's bound.
  if (opts.mode == HeuristicMode::Admissible && !roadmap.level_ground_edges()) {
    est = cm.ground_rate() * distance_xy(p, goal);
  }
  return opts.heuristic_scale * est;
}

PlanResult astar_multimodal(const Roadmap& roadmap, NodeId start, NodeId goal, const CostModel& cm,
                            const AstarOptions& opts) {
  if (!roadmap.valid(goal)) throw DomainError("goal id out of range");
  const Vec3 goal_pos = roadmap.node(goal).position;
  auto h = [&](NodeId v) {
    return search_heuristic(roadmap, roadmap.node(v).position, goal_pos, cm, opts);
  };
  const bool guard = opts.mode == HeuristicMode::Admissible && opts.heuristic_scale == 1.0;
  return best_first(roadmap, start, goal, cm, h, guard);
}

PlanResult dijkstra_oracle(const Roadmap& roadmap, NodeId start, NodeId goal, const CostModel& cm) {
  return best_first(roadmap, start, goal, cm, [](NodeId) { return 0.0; }, true);
}

std::vector<double> cost_to_goal(const Roadmap& rm, NodeId goal) {
  if (!rm.valid(goal)) throw DomainError("goal id out of range");
  std::vector<double> dist(rm.nodes().size(), kInf);
  std::priority_queue<std::pair<double, NodeId>, std::vector<std::pair<double, NodeId>>,
                      std::greater<>>
      open;
  dist[static_cast<std::size_t>(goal)] = 0.0;
  open.emplace(0.0, goal);
  while (!open.empty()) {
    const auto [d, v] = open.top();
    open.pop();
    if (d > dist[static_cast<std::size_t>(v)]) continue;
    for (std::size_t ei : rm.incident(v)) {
      const RoadmapEdge& e = rm.edges()[ei];
      const NodeId u = e.other(v);
      // Relaxing u -> v, so charge the edge in that direction.
      const double cand = d + e.cost_from(u);
      if (cand < dist[static_cast<std::size_t>(u)]) {
        dist[static_cast<std::size_t>(u)] = cand;
        open.emplace(cand, u);
      }
    }
  }
  return dist;
}

std::vector<PlannedLeg> plan_chain(const Roadmap& roadmap, const Vec3& start,
                                   const std::vector<Vec3>& waypoints, const Environment& env,
                                   const CostModel& cm, const PrmParams& params,
                                   const AstarOptions& opts) {
  if (waypoints.empty()) throw DomainError("plan_chain needs at least one waypoint");
  std::vector<PlannedLeg> legs;
  Vec3 from = start;
  for (const Vec3& w : waypoints) {
    QueryNodes q = insert_query_nodes(roadmap, from, w, env, cm, params);
    PlanResult plan = astar_multimodal(q.roadmap, q.start, q.goal, cm, opts);
    from = q.roadmap.node(q.goal).position;
    legs.push_back({std::move(q), std::move(plan)});
  }
  return legs;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::Drive: return "drive";
    case SegmentKind::MorphThenFly: return "morph_then_fly";
    case SegmentKind::Fly: return "fly";
    case SegmentKind::LandThenMorph: return "land_then_morph";
  }
  return "?";
}

std::vector<MissionSegment> path_to_waypoints(const PlanResult& plan, const Roadmap& roadmap) {
  if (plan.edge_indices.empty()) throw DomainError("path_to_waypoints needs a non-empty plan");
  std::vector<MissionSegment> segs;
  for (std::size_t i = 0; i < plan.edge_indices.size(); ++i) {
    const RoadmapEdge& e = roadmap.edges()[plan.edge_indices[i]];
    const RoadmapNode& from = roadmap.node(plan.node_ids[i]);
    const RoadmapNode& to = roadmap.node(plan.node_ids[i + 1]);
    SegmentKind kind = SegmentKind::Drive;
    switch (e.kind) {
      case EdgeKind::Ground: kind = SegmentKind::Drive; break;
      case EdgeKind::Flight: kind = SegmentKind::Fly; break;
      case EdgeKind::Transition:
        kind = from.mode == NodeMode::Ground ? SegmentKind::MorphThenFly
                                             : SegmentKind::LandThenMorph;
        break;
    }
    const bool merge = !segs.empty() && segs.back().kind == kind &&
                       (kind == SegmentKind::Drive || kind == SegmentKind::Fly);
    if (!merge) segs.push_back({kind, from.position, {}});
    segs.back().waypoints.push_back(to.position);
  }
  return segs;
}

}  // namespace mmnav
