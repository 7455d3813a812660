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

#include "mmnav/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "mmnav/errors.hpp"
#include "mmnav/splitmix.hpp"

namespace mmnav {

namespace {

constexpr std::uint64_t kQueryStream = 0x9e3779b97f4a7c15ULL;

bool exceeds(double lhs, double rhs) { return lhs > rhs + 1e-9 * std::max(1.0, std::abs(rhs)); }

NodeId pick(SplitMix64& rng, std::size_t n) {
  return static_cast<NodeId>(std::min(n - 1, static_cast<std::size_t>(rng.uniform() * n)));
}

int count_inconsistent(const Roadmap& rm, const Vec3& goal, const CostModel& cm,
                       const AstarOptions& opts, std::size_t* checks) {
  int bad = 0;
  for (const RoadmapEdge& e : rm.edges()) {
    const double ha = search_heuristic(rm, rm.node(e.a).position, goal, cm, opts);
    const double hb = search_heuristic(rm, rm.node(e.b).position, goal, cm, opts);
    bad += exceeds(ha, e.cost_ab + hb);
    bad += exceeds(hb, e.cost_ba + ha);
    if (checks) *checks += 2;
  }
  return bad;
}

std::optional<PlanResult> solve(auto&& fn) {
  try {
    return fn();
  } catch (const NoPathError&) {
    return std::nullopt;
  }
}

OracleReport reduce(std::vector<SeedReport> per_seed) {
  OracleReport r;
  for (const SeedReport& s : per_seed) {
    r.queries += s.queries;
    r.solvable += s.solvable;
    r.verdict_mismatches += s.verdict_mismatches;
    r.max_rel_discrepancy = std::max(r.max_rel_discrepancy, s.max_rel_discrepancy);
    r.admissibility_violations += s.admissibility_violations;
    r.consistency_violations += s.consistency_violations;
  }
  r.per_seed = std::move(per_seed);
  return r;
}

}  // namespace

Environment empty_world(double x, double y, double z) {
  return Environment(Aabb({0, 0, 0}, {x, y, z}), ConstantGround{0.0}, {});
}

void OracleConfig::validate() const {
  if (seeds <= 0) throw ConfigError("oracle sweep needs at least one seed");
  if (queries_per_seed <= 0) throw ConfigError("oracle sweep needs at least one query per seed");
  if (!(astar.heuristic_scale >= 0.0) || !std::isfinite(astar.heuristic_scale)) {
    throw ConfigError("heuristic scale must be finite and >= 0");
  }
  prm.validate();
}

SeedReport oracle_seed(const Environment& env, const CostModel& cm, const OracleConfig& cfg,
                       int index) {
  PrmParams prm = cfg.prm;
  prm.seed = cfg.base_seed + static_cast<std::uint64_t>(index);
  const Roadmap rm = build_roadmap(env, cm, prm);
  SeedReport rep;
  rep.seed = prm.seed;
  const std::size_t n = rm.nodes().size();
  if (n < 2) return rep;

  SplitMix64 rng(prm.seed ^ kQueryStream);
  for (int q = 0; q < cfg.queries_per_seed; ++q) {
    const NodeId s = pick(rng, n);
    NodeId g = pick(rng, n);
    if (g == s) g = static_cast<NodeId>((static_cast<std::size_t>(g) + 1) % n);
    ++rep.queries;

    const auto ref = solve([&] { return dijkstra_oracle(rm, s, g, cm); });
    const auto got = solve([&] { return astar_multimodal(rm, s, g, cm, cfg.astar); });
    if (ref.has_value() != got.has_value()) {
      ++rep.verdict_mismatches;
      continue;
    }
    if (!ref) continue;
    ++rep.solvable;
    rep.astar_expanded += got->expanded;
    rep.dijkstra_expanded += ref->expanded;
    const double rel =
        std::abs(got->total_cost - ref->total_cost) / std::max(1.0, std::abs(ref->total_cost));
    rep.max_rel_discrepancy = std::max(rep.max_rel_discrepancy, rel);

    const Vec3& goal = rm.node(g).position;
    const std::vector<double> ctg = cost_to_goal(rm, g);
    for (std::size_t u = 0; u < n; ++u) {
      if (!std::isfinite(ctg[u])) continue;
      const double h = search_heuristic(rm, rm.nodes()[u].position, goal, cm, cfg.astar);
      rep.admissibility_violations += exceeds(h, ctg[u]);
    }
    rep.consistency_violations += count_inconsistent(rm, goal, cm, cfg.astar, nullptr);
  }
  return rep;
}

OracleReport oracle_sweep_serial(const Environment& env, const CostModel& cm,
                                 const OracleConfig& cfg) {
  cfg.validate();
  std::vector<SeedReport> per_seed;
  per_seed.reserve(static_cast<std::size_t>(cfg.seeds));
  for (int i = 0; i < cfg.seeds; ++i) per_seed.push_back(oracle_seed(env, cm, cfg, i));
  return reduce(std::move(per_seed));
}

OracleReport oracle_sweep(const Environment& env, const CostModel& cm, const OracleConfig& cfg) {
  cfg.validate();
  std::vector<SeedReport> per_seed(static_cast<std::size_t>(cfg.seeds));
  std::vector<std::string> errors(per_seed.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cfg.seeds; ++i) {
    try {
      per_seed[static_cast<std::size_t>(i)] = oracle_seed(env, cm, cfg, i);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      throw SamplingError("oracle seed " + std::to_string(cfg.base_seed + i) + ": " + errors[i]);
    }
  }
  return reduce(std::move(per_seed));
}

HeuristicAudit audit_heuristic(const Environment& env, const CostModel& cm, const PrmParams& prm,
                               int roadmaps, int pairs_per_roadmap, std::uint64_t base_seed,
                               const AstarOptions& opts) {
  if (roadmaps <= 0 || pairs_per_roadmap <= 0) throw ConfigError("empty heuristic audit");
  HeuristicAudit audit;
  for (int r = 0; r < roadmaps; ++r) {
    PrmParams p = prm;
    p.seed = base_seed + static_cast<std::uint64_t>(r);
    const Roadmap rm = build_roadmap(env, cm, p);
    const std::size_t n = rm.nodes().size();
    if (n < 2) continue;
    SplitMix64 rng(p.seed ^ kQueryStream ^ 0xa5a5a5a5ULL);
    for (int k = 0; k < pairs_per_roadmap; ++k) {
      const NodeId u = pick(rng, n);
      const NodeId g = pick(rng, n);
      ++audit.pairs;
      const Vec3& goal = rm.node(g).position;
      const std::vector<double> ctg = cost_to_goal(rm, g);
      const double opt = ctg[static_cast<std::size_t>(u)];
      if (std::isfinite(opt)) {
        ++audit.reachable_pairs;
        audit.admissibility_violations +=
            exceeds(search_heuristic(rm, rm.node(u).position, goal, cm, opts), opt);
      }
      audit.consistency_violations += count_inconsistent(rm, goal, cm, opts, &audit.edge_checks);
    }
  }
  return audit;
}

}  // namespace mmnav
