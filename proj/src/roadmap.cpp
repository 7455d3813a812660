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

#include "mmnav/roadmap.hpp"

#include <algorithm>
#include <cmath>

#include "mmnav/errors.hpp"

namespace mmnav {

namespace {

constexpr double kSurfaceTol = 1e-6;
constexpr double kDuplicateTol = 1e-9;

bool hugs_surface(const Environment& env, const Vec3& a, const Vec3& b, double clearance) {
  if (env.flat_ground()) return true;
  for (const Vec3& p : sample_segment(a, b, segment_sample_step(clearance))) {
    if (std::abs(p.z - env.ground_height(p.x, p.y)) > kSurfaceTol) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(NodeMode m) { return m == NodeMode::Ground ? "ground" : "aerial"; }

std::string_view to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Ground: return "ground";
    case EdgeKind::Flight: return "flight";
    case EdgeKind::Transition: return "transition";
  }
  return "?";
}

void PrmParams::validate() const {
  if (n_ground < 0 || n_air < 0) throw ConfigError("node counts must be >= 0");
  if (!(radius > 0.0)) throw ConfigError("neighbor radius must be > 0");
  if (clearance < 0.0) throw ConfigError("clearance must be >= 0");
  if (min_air_clearance < 0.0) throw ConfigError("min_air_clearance must be >= 0");
}

// ---------------------------------------------------------------------------

Roadmap::Roadmap(double hash_cell) : cell_(hash_cell) {
  if (!(hash_cell > 0.0)) throw ConfigError("hash cell size must be > 0");
}

std::size_t Roadmap::CellHash::operator()(const CellKey& k) const {
  auto h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(k.y) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::uint64_t>(k.z) * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

Roadmap::CellKey Roadmap::key_of(const Vec3& p) const {
  return {static_cast<std::int64_t>(std::floor(p.x / cell_)),
          static_cast<std::int64_t>(std::floor(p.y / cell_)),
          static_cast<std::int64_t>(std::floor(p.z / cell_))};
}

NodeId Roadmap::add_node(const Vec3& p, NodeMode mode) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({id, p, mode});
  adjacency_.emplace_back();
  hash_[key_of(p)].push_back(id);
  return id;
}

void Roadmap::add_edge(const RoadmapEdge& e) {
  if (!valid(e.a) || !valid(e.b) || e.a == e.b) throw DomainError("edge endpoints invalid");
  if (has_edge(e.a, e.b)) throw DomainError("duplicate edge");
  const std::size_t idx = edges_.size();
  edges_.push_back(e);
  adjacency_[static_cast<std::size_t>(e.a)].push_back(idx);
  adjacency_[static_cast<std::size_t>(e.b)].push_back(idx);
  if (e.kind == EdgeKind::Ground && node(e.a).position.z != node(e.b).position.z) {
    level_ground_ = false;
  }
}

bool Roadmap::has_edge(NodeId a, NodeId b) const {
  const auto& inc = incident(a);
  return std::any_of(inc.begin(), inc.end(),
                     [&](std::size_t ei) { return edges_[ei].other(a) == b; });
}

std::vector<NodeId> Roadmap::within(const Vec3& p, double r, NeighborSearch how) const {
  std::vector<NodeId> out;
  if (how == NeighborSearch::LinearScan) {
    for (const auto& n : nodes_) {
      if (distance(n.position, p) <= r) out.push_back(n.id);
    }
    return out;
  }
  const CellKey c = key_of(p);
  const auto span = static_cast<std::int64_t>(std::ceil(r / cell_));
  for (std::int64_t dx = -span; dx <= span; ++dx) {
    for (std::int64_t dy = -span; dy <= span; ++dy) {
      for (std::int64_t dz = -span; dz <= span; ++dz) {
        const auto it = hash_.find({c.x + dx, c.y + dy, c.z + dz});
        if (it == hash_.end()) continue;
        for (NodeId id : it->second) {
          if (distance(nodes_[static_cast<std::size_t>(id)].position, p) <= r) out.push_back(id);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

RoadmapEdge make_edge(const RoadmapNode& a, const RoadmapNode& b, const CostModel& cm) {
  RoadmapEdge e;
  e.a = a.id;
  e.b = b.id;
  e.length = distance(a.position, b.position);
  const double za = a.position.z;
  const double zb = b.position.z;
  if (a.mode == NodeMode::Ground && b.mode == NodeMode::Ground) {
    e.kind = EdgeKind::Ground;
    e.cost_ab = e.cost_ba = cm.ground_edge_cost(e.length);
  } else if (a.mode == NodeMode::Aerial && b.mode == NodeMode::Aerial) {
    e.kind = EdgeKind::Flight;
    e.cost_ab = cm.flight_edge_cost(e.length, za, zb);
    e.cost_ba = cm.flight_edge_cost(e.length, zb, za);
  } else {
    // Morph at the ground end, then fly the edge.
    e.kind = EdgeKind::Transition;
    e.cost_ab = cm.transition_cost() + cm.flight_edge_cost(e.length, za, zb);
    e.cost_ba = cm.transition_cost() + cm.flight_edge_cost(e.length, zb, za);
  }
  return e;
}

Vec3 sample_ground_node(SplitMix64& rng, const Environment& env, double clearance) {
  const Vec3& lo = env.bounds().min();
  const Vec3& hi = env.bounds().max();
  for (int attempt = 0; attempt < kSampleRetryBudget; ++attempt) {
    const double x = rng.uniform(lo.x, hi.x);
    const double y = rng.uniform(lo.y, hi.y);
    const Vec3 p{x, y, env.ground_height(x, y)};
    if (!env.point_in_collision(p, clearance)) return p;
  }
  throw SamplingError("ground sampling exhausted its retry budget");
}

Vec3 sample_air_node(SplitMix64& rng, const Environment& env, const PrmParams& params) {
  const Vec3& lo = env.bounds().min();
  const Vec3& hi = env.bounds().max();
  const double z_max = params.z_max.value_or(hi.z);
  if (!(z_max > lo.z)) throw SamplingError("z_max below the bottom of bounds");
  for (int attempt = 0; attempt < kSampleRetryBudget; ++attempt) {
    const double x = rng.uniform(lo.x, hi.x);
    const double y = rng.uniform(lo.y, hi.y);
    const double z = rng.uniform(lo.z, z_max);
    if (z < env.ground_height(x, y) + params.min_air_clearance) continue;
    const Vec3 p{x, y, z};
    if (!env.point_in_collision(p, params.clearance)) return p;
  }
  throw SamplingError("aerial sampling exhausted its retry budget");
}

std::size_t connect_existing(Roadmap& roadmap, NodeId id, const Environment& env,
                             const CostModel& cm, const PrmParams& params, double radius) {
  const RoadmapNode self = roadmap.node(id);
  std::size_t added = 0;
  for (NodeId other : roadmap.within(self.position, radius, params.search)) {
    if (other == id || roadmap.has_edge(id, other)) continue;
    const RoadmapNode& n = roadmap.node(other);
    if (distance(n.position, self.position) < kDuplicateTol) continue;
    if (env.segment_in_collision(n.position, self.position, params.clearance)) continue;
    if (n.mode == NodeMode::Ground && self.mode == NodeMode::Ground &&
        !hugs_surface(env, n.position, self.position, params.clearance)) {
      continue;
    }
    // Existing node first so edge direction a->b follows insertion order.
    roadmap.add_edge(make_edge(n, self, cm));
    ++added;
  }
  return added;
}

NodeId connect_node(Roadmap& roadmap, const Vec3& position, NodeMode mode, const Environment& env,
                    const CostModel& cm, const PrmParams& params, double radius) {
  const NodeId id = roadmap.add_node(position, mode);
  connect_existing(roadmap, id, env, cm, params, radius);
  return id;
}

Roadmap build_roadmap(const Environment& env, const CostModel& cm, const PrmParams& params) {
  params.validate();
  Roadmap rm(params.radius);
  SplitMix64 rng(params.seed);
  for (int i = 0; i < params.n_ground; ++i) {
    const Vec3 p = sample_ground_node(rng, env, params.clearance);
    connect_node(rm, p, NodeMode::Ground, env, cm, params, params.radius);
  }
  for (int i = 0; i < params.n_air; ++i) {
    const Vec3 p = sample_air_node(rng, env, params);
    connect_node(rm, p, NodeMode::Aerial, env, cm, params, params.radius);
  }
  return rm;
}

namespace {

NodeId insert_one(Roadmap& rm, const Vec3& raw, const Environment& env, const CostModel& cm,
                  const PrmParams& params, const char* what) {
  if (!env.in_footprint(raw.x, raw.y)) {
    throw DomainError(std::string(what) + " lies outside the environment footprint");
  }
  const Vec3 p{raw.x, raw.y, env.ground_height(raw.x, raw.y)};
  for (NodeId id : rm.within(p, kDuplicateTol, params.search)) {
    if (rm.node(id).mode == NodeMode::Ground) return id;
  }
  if (env.point_in_collision(p, params.clearance)) {
    throw QueryIsolatedError(std::string(what) + " is in collision at roadmap clearance");
  }
  const NodeId id = connect_node(rm, p, NodeMode::Ground, env, cm, params, params.radius);
  if (rm.degree(id) == 0) connect_existing(rm, id, env, cm, params, 2.0 * params.radius);
  if (rm.degree(id) == 0) {
    throw QueryIsolatedError(std::string(what) + " query node isolated after radius escalation");
  }
  return id;
}

}  // namespace

QueryNodes insert_query_nodes(const Roadmap& roadmap, const Vec3& start, const Vec3& goal,
                              const Environment& env, const CostModel& cm,
                              const PrmParams& params) {
  params.validate();
  QueryNodes q{roadmap, 0, 0};
  q.start = insert_one(q.roadmap, start, env, cm, params, "start");
  q.goal = insert_one(q.roadmap, goal, env, cm, params, "goal");
  return q;
}

}  // namespace mmnav
