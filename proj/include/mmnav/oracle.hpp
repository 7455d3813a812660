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

#ifndef MMNAV_ORACLE_HPP
#define MMNAV_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "mmnav/costmodel.hpp"
#include "mmnav/env.hpp"
#include "mmnav/planner.hpp"
#include "mmnav/roadmap.hpp"

namespace mmnav {

/// Flat, obstacle-free box world with ground at z = 0.
Environment empty_world(double x, double y, double z);

struct OracleConfig {
  int seeds = 100;
  std::uint64_t base_seed = 1;  // roadmap i uses base_seed + i
  int queries_per_seed = 10;
  PrmParams prm;
  AstarOptions astar;

  void validate() const;  // throws ConfigError
};

struct SeedReport {
  std::uint64_t seed = 0;
  int queries = 0;
  int solvable = 0;
  int verdict_mismatches = 0;  // A* and Dijkstra disagree on reachability
  double max_rel_discrepancy = 0.0;
  int admissibility_violations = 0;  // h(u) > optimal cost-to-goal(u)
  int consistency_violations = 0;    // h(u) > c(u, v) + h(v)
  std::size_t astar_expanded = 0;
  std::size_t dijkstra_expanded = 0;
};

struct OracleReport {
  std::vector<SeedReport> per_seed;
  int queries = 0;
  int solvable = 0;
  int verdict_mismatches = 0;
  double max_rel_discrepancy = 0.0;
  int admissibility_violations = 0;
  int consistency_violations = 0;

  bool passed(double tolerance = 1e-9) const {
    return verdict_mismatches == 0 && max_rel_discrepancy <= tolerance &&
           admissibility_violations == 0 && consistency_violations == 0;
  }
};

/// One roadmap: random node pairs, A* vs Dijkstra, heuristic audited against
/// exact cost-to-goal over every node and every edge for each query goal.
SeedReport oracle_seed(const Environment& env, const CostModel& cm, const OracleConfig& cfg,
                       int index);

/// Seeds run in parallel (OpenMP); reduction is serial and ordered, so the
/// report does not depend on the thread count.
OracleReport oracle_sweep(const Environment& env, const CostModel& cm, const OracleConfig& cfg);
/// Single-threaded reference for oracle_sweep.
OracleReport oracle_sweep_serial(const Environment& env, const CostModel& cm,
                                 const OracleConfig& cfg);

// ---------------------------------------------------------------------------

struct HeuristicAudit {
  int pairs = 0;              // sampled (node, goal) pairs
  int reachable_pairs = 0;
  int admissibility_violations = 0;
  std::size_t edge_checks = 0;
  int consistency_violations = 0;
};

/// Samples `pairs_per_roadmap` (node, goal) pairs on each of `roadmaps` seeded
/// roadmaps, checks h <= exact cost-to-goal for each pair and h(u) <= c(u, v) + h(v)
/// over every directed edge for each sampled goal.
HeuristicAudit audit_heuristic(const Environment& env, const CostModel& cm, const PrmParams& prm,
                               int roadmaps, int pairs_per_roadmap, std::uint64_t base_seed,
                               const AstarOptions& opts = {});

}  // namespace mmnav

#endif  // MMNAV_ORACLE_HPP
