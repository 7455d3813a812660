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

#ifndef MMNAV_ROADMAP_HPP
#define MMNAV_ROADMAP_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mmnav/costmodel.hpp"
#include "mmnav/env.hpp"
#include "mmnav/splitmix.hpp"
#include "mmnav/vec.hpp"

namespace mmnav {

enum class NodeMode : std::uint8_t { Ground, Aerial };
enum class EdgeKind : std::uint8_t { Ground, Flight, Transition };

std::string_view to_string(NodeMode m);
std::string_view to_string(EdgeKind k);

using NodeId = int;

struct RoadmapNode {
  NodeId id = 0;
  Vec3 position;
  NodeMode mode = NodeMode::Ground;
};

/// Undirected edge with direction-dependent energy: flight cost carries the
/// potential term m g (z_to - z_from), so a->b and b->a differ on climbs.
struct RoadmapEdge {
  NodeId a = 0;
  NodeId b = 0;
  EdgeKind kind = EdgeKind::Ground;
  double length = 0.0;
  double cost_ab = 0.0;
  double cost_ba = 0.0;

  NodeId other(NodeId from) const { return from == a ? b : a; }
  double cost_from(NodeId from) const { return from == a ? cost_ab : cost_ba; }
};

enum class NeighborSearch { SpatialHash, LinearScan };

struct PrmParams {
  int n_ground = 200;
  int n_air = 200;
  double radius = 2.0;
  std::uint64_t seed = 1;
  double clearance = 0.35;
  double min_air_clearance = 0.3;
  std::optional<double> z_max;  // defaults to bounds.max.z
  NeighborSearch search = NeighborSearch::SpatialHash;

  void validate() const;
};

inline constexpr int kSampleRetryBudget = 1000;

/// Multi-modal roadmap. Nodes are only appended; the finished graph is
/// treated as immutable by the planners.
class Roadmap {
 public:
  explicit Roadmap(double hash_cell = 2.0);

  const std::vector<RoadmapNode>& nodes() const { return nodes_; }
  const std::vector<RoadmapEdge>& edges() const { return edges_; }
  const RoadmapNode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  /// Edge indices incident to `id`, in insertion order.
  const std::vector<std::size_t>& incident(NodeId id) const {
    return adjacency_.at(static_cast<std::size_t>(id));
  }
  std::size_t degree(NodeId id) const { return incident(id).size(); }
  bool valid(NodeId id) const { return id >= 0 && static_cast<std::size_t>(id) < nodes_.size(); }

  NodeId add_node(const Vec3& p, NodeMode mode);
  void add_edge(const RoadmapEdge& e);
  bool has_edge(NodeId a, NodeId b) const;

  /// Node ids within `r` of p (inclusive), ascending.
  std::vector<NodeId> within(const Vec3& p, double r, NeighborSearch how) const;

  /// True when every Ground edge is level, the precondition for charging the
  /// climb term in the search heuristic.
  bool level_ground_edges() const { return level_ground_; }

 private:
  struct CellKey {
    std::int64_t x, y, z;
    bool operator==(const CellKey&) const = default;
  };
  struct CellHash {
    std::size_t operator()(const CellKey& k) const;
  };
  CellKey key_of(const Vec3& p) const;

  double cell_;
  std::vector<RoadmapNode> nodes_;
  std::vector<RoadmapEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<CellKey, std::vector<NodeId>, CellHash> hash_;
  bool level_ground_ = true;
};

/// Edge kind, length and both directional costs for a candidate pair.
RoadmapEdge make_edge(const RoadmapNode& a, const RoadmapNode& b, const CostModel& cm);

Vec3 sample_ground_node(SplitMix64& rng, const Environment& env, double clearance);
Vec3 sample_air_node(SplitMix64& rng, const Environment& env, const PrmParams& params);

/// Adds a node and connects it to every node within `radius` whose segment is
/// collision-free at params.clearance (Ground-Ground segments must also hug the
/// surface). Returns the new node id.
NodeId connect_node(Roadmap& roadmap, const Vec3& position, NodeMode mode, const Environment& env,
                    const CostModel& cm, const PrmParams& params, double radius);

/// Connects an existing node to candidates within `radius` it is not yet joined to.
std::size_t connect_existing(Roadmap& roadmap, NodeId id, const Environment& env,
                             const CostModel& cm, const PrmParams& params, double radius);

Roadmap build_roadmap(const Environment& env, const CostModel& cm, const PrmParams& params);

struct QueryNodes {
  Roadmap roadmap;
  NodeId start = 0;
  NodeId goal = 0;
};

/// Copies `roadmap` and inserts start/goal as ground-snapped nodes, escalating
/// to 2R once if a node would be isolated. Throws QueryIsolatedError.
QueryNodes insert_query_nodes(const Roadmap& roadmap, const Vec3& start, const Vec3& goal,
                              const Environment& env, const CostModel& cm,
                              const PrmParams& params);

}  // namespace mmnav

#endif  // MMNAV_ROADMAP_HPP
