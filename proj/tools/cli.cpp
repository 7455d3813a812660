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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mmnav/errors.hpp"
#include "mmnav/io.hpp"
#include "mmnav/oracle.hpp"
#include "mmnav/planner.hpp"
#include "mmnav/roadmap.hpp"
#include "mmnav/sim.hpp"
#include "mmnav/svg.hpp"

namespace mmnav::cli {

namespace {

struct Options {
  std::optional<RoadmapOverrides> flags;  // filled from explicitly passed PRM flags
  std::string env_path;
  std::string cost_path;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  std::string start;
  std::string waypoints;
  double latency = 0.0;
  std::string pipeline = "grid-dwa";
  int sweep = 100;
  int queries = 10;
  double heuristic_scale = 1.0;
  bool serial = false;
};

struct Loaded {
  Scenario scenario;
  CostConfig cost;
  Vec3 start;
  std::vector<Vec3> waypoints;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Defaults, then the scenario's "roadmap" section, then explicit flags.
PrmParams prm_params(const Options& o, const RoadmapOverrides& scenario) {
  PrmParams p = scenario.apply(PrmParams{});
  if (o.flags) p = o.flags->apply(p);
  p.seed = o.seed;
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return p;
}

CostConfig cost_config(const Options& o) {
  if (o.cost_path.empty()) return {CostParams{}, normalize(DwaParams{})};
  return load_cost_config(o.cost_path);
}

Loaded load(const Options& o, bool need_route) {
  if (o.env_path.empty()) throw ConfigError("--env is required");
  Loaded l{load_scenario(o.env_path), cost_config(o), {}, {}};
  if (!need_route) return l;

  if (!o.start.empty()) {
    const auto s = parse_points(o.start);
    if (s.size() != 1) throw ConfigError("--start takes exactly one point");
    l.start = s.front();
  } else if (l.scenario.start) {
    l.start = *l.scenario.start;
  } else {
    throw ConfigError("no start: pass --start or add \"start\" to the environment file");
  }
  l.waypoints = o.waypoints.empty() ? l.scenario.waypoints : parse_points(o.waypoints);
  if (l.waypoints.empty()) {
    throw ConfigError("no waypoints: pass --waypoints or add \"waypoints\" to the environment file");
  }
  const Environment& env = l.scenario.env;
  if (!env.in_footprint(l.start.x, l.start.y)) throw ConfigError("start outside environment bounds");
  for (const Vec3& w : l.waypoints) {
    if (!env.in_footprint(w.x, w.y)) throw ConfigError("waypoint outside environment bounds");
  }
  return l;
}

std::string out_path(const Options& o, const char* name) {
  std::filesystem::create_directories(o.out_dir);
  return (std::filesystem::path(o.out_dir) / name).string();
}

// ---------------------------------------------------------------------------

int cmd_roadmap(const Options& o, std::ostream& out) {
  const Loaded l = load(o, false);
  const CostModel cm(l.cost.cost);
  const Roadmap rm = build_roadmap(l.scenario.env, cm, prm_params(o, l.scenario.roadmap));
  write_text_file(out_path(o, "roadmap.json"), roadmap_json(rm));
  out << "roadmap: " << rm.nodes().size() << " nodes, " << rm.edges().size() << " edges\n";
  return kOk;
}

int cmd_plan(const Options& o, std::ostream& out) {
  const Loaded l = load(o, true);
  const CostModel cm(l.cost.cost);
  const PrmParams prm = prm_params(o, l.scenario.roadmap);
  const Roadmap rm = build_roadmap(l.scenario.env, cm, prm);
  const auto chain = plan_chain(rm, l.start, l.waypoints, l.scenario.env, cm, prm);
  write_text_file(out_path(o, "plan.json"), plan_json(chain));
  write_text_file(out_path(o, "plan_edges.csv"), plan_edges_csv(chain));
  write_text_file(out_path(o, "plan.svg"), plan_svg(l.scenario.env, rm, chain));
  double total = 0.0;
  int nt = 0;
  for (const PlannedLeg& leg : chain) {
    total += leg.plan.total_cost;
    nt += leg.plan.transitions;
  }
  out << "plan: " << chain.size() << " legs, cost " << num(total) << " J, transitions " << nt
      << "\n";
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Loaded l = load(o, true);
  const CostModel cm(l.cost.cost);
  const Environment& env = l.scenario.env;
  SimConfig cfg;
  cfg.actuation_latency = o.latency;
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  MissionResult result;
  if (o.pipeline == "mmprm") {
    const PrmParams prm = prm_params(o, l.scenario.roadmap);
    const Roadmap rm = build_roadmap(env, cm, prm);
    const auto chain = plan_chain(rm, l.start, l.waypoints, env, cm, prm);
    write_text_file(out_path(o, "plan.json"), plan_json(chain));
    std::vector<MissionLeg> legs = legs_from_plan(chain);
    if (legs.empty()) legs.emplace_back(GoalLeg{l.waypoints.back()});
    result = run_legs(env, l.start, std::move(legs), cm, l.cost.dwa, cfg, o.seed);
  } else {
    result = run_mission(env, l.start, l.waypoints, cm, l.cost.dwa, cfg, o.seed);
  }

  write_text_file(out_path(o, "trajectory.csv"), trajectory_csv(result.log));
  write_text_file(out_path(o, "summary.json"), summary_json(result));
  write_text_file(out_path(o, "trajectory.svg"), trajectory_svg(env, result.log, l.waypoints));
  out << "simulate: " << to_string(result.outcome) << " after " << num(result.duration)
      << " s, morphs " << result.morphs << ", energy " << num(result.ledger.total) << " J";
  if (!result.diagnostic.empty()) out << " (" << result.diagnostic << ")";
  out << "\n";
  return result.outcome == Phase::Done ? kOk : kMissionFailed;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.sweep <= 0) throw ConfigError("sweep count must be >= 1");
  std::optional<Scenario> scenario;
  if (!o.env_path.empty()) scenario = load_scenario(o.env_path);
  const Environment env = scenario ? scenario->env : empty_world(20.0, 20.0, 5.0);
  const CostModel cm(cost_config(o).cost);
  OracleConfig cfg;
  cfg.seeds = o.sweep;
  cfg.base_seed = o.seed;
  cfg.queries_per_seed = o.queries;
  cfg.prm = prm_params(o, scenario ? scenario->roadmap : RoadmapOverrides{});
  cfg.astar.heuristic_scale = o.heuristic_scale;

  const auto t0 = std::chrono::steady_clock::now();
  const OracleReport rep = o.serial ? oracle_sweep_serial(env, cm, cfg) : oracle_sweep(env, cm, cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ostringstream js;
  js << "{\n \"seeds\": " << cfg.seeds << ",\n \"queries\": " << rep.queries
     << ",\n \"solvable\": " << rep.solvable << ",\n \"verdict_mismatches\": "
     << rep.verdict_mismatches << ",\n \"max_rel_discrepancy\": " << num(rep.max_rel_discrepancy)
     << ",\n \"admissibility_violations\": " << rep.admissibility_violations
     << ",\n \"consistency_violations\": " << rep.consistency_violations
     << ",\n \"passed\": " << (rep.passed() ? "true" : "false") << "\n}\n";
  write_text_file(out_path(o, "oracle.json"), js.str());
  out << "oracle: " << cfg.seeds << " seeds, " << rep.solvable << "/" << rep.queries
      << " solvable, max rel discrepancy " << num(rep.max_rel_discrepancy) << ", violations "
      << rep.admissibility_violations << " admissibility / " << rep.consistency_violations
      << " consistency, " << num(secs) << " s\n";
  return rep.passed() ? kOk : kVerificationFailed;
}

void add_env(CLI::App* c, Options& o, bool required) {
  auto* opt = c->add_option("--env", o.env_path, "environment JSON");
  if (required) opt->required();
  c->add_option("--cost-config", o.cost_path, "cost parameter JSON");
  c->add_option("--out", o.out_dir, "output directory")->capture_default_str();
  c->add_option("--seed", o.seed, "roadmap / simulation seed")->capture_default_str();
}

void add_prm(CLI::App* c, Options& o) {
  auto flags = [&o]() -> RoadmapOverrides& {
    if (!o.flags) o.flags.emplace();
    return *o.flags;
  };
  c->add_option_function<int>("--nw", [=](int v) { flags().n_ground = v; }, "ground node count (200)");
  c->add_option_function<int>("--nf", [=](int v) { flags().n_air = v; }, "flyable node count (200)");
  c->add_option_function<double>("--radius", [=](double v) { flags().radius = v; },
                                 "neighbor radius, m (2.0)");
  c->add_option_function<double>("--clearance", [=](double v) { flags().clearance = v; },
                                 "roadmap clearance, m (0.35)");
  c->add_option_function<double>("--min-air-clearance",
                                 [=](double v) { flags().min_air_clearance = v; },
                                 "aerial node height above ground, m (0.3)");
}

void add_route(CLI::App* c, Options& o) {
  c->add_option("--start", o.start, "x,y,z");
  c->add_option("--waypoints", o.waypoints, "x,y,z;x,y,z;...");
}

}  // namespace

std::vector<Vec3> parse_points(const std::string& text) {
  std::vector<Vec3> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> v;
    std::stringstream is(item);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stod(tok, &used));
        if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ConfigError("bad coordinate '" + tok + "' in '" + item + "'");
      }
    }
    if (v.size() != 2 && v.size() != 3) throw ConfigError("point needs 2 or 3 values: " + item);
    pts.push_back({v[0], v[1], v.size() == 3 ? v[2] : 0.0});
  }
  if (pts.empty()) throw ConfigError("empty point list");
  return pts;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Multi-modal ground/aerial energy-aware planner and mission simulator", "mmnav"};
  app.require_subcommand(1);

  auto* roadmap = app.add_subcommand("roadmap", "build a roadmap and export it");
  add_env(roadmap, o, true);
  add_prm(roadmap, o);

  auto* plan = app.add_subcommand("plan", "plan start -> waypoints on the roadmap");
  add_env(plan, o, true);
  add_prm(plan, o);
  add_route(plan, o);

  auto* simulate = app.add_subcommand("simulate", "execute a waypoint mission");
  add_env(simulate, o, true);
  add_prm(simulate, o);
  add_route(simulate, o);
  simulate->add_option("--latency", o.latency, "actuation latency (s)")->capture_default_str();
  simulate->add_option("--pipeline", o.pipeline, "mmprm or grid-dwa")
      ->check(CLI::IsMember({"mmprm", "grid-dwa"}))
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "A* vs Dijkstra sweep over seeded roadmaps");
  add_env(oracle, o, false);
  add_prm(oracle, o);
  oracle->add_option("N", o.sweep, "number of seeded roadmaps")->capture_default_str();
  oracle->add_option("--queries", o.queries, "queries per roadmap")->capture_default_str();
  oracle->add_flag("--serial", o.serial, "use the single-threaded sweep");
  oracle->add_option("--heuristic-scale", o.heuristic_scale)->group("");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*roadmap) return cmd_roadmap(o, out);
    if (*plan) return cmd_plan(o, out);
    if (*simulate) return cmd_simulate(o, out);
    return cmd_oracle(o, out);
  } catch (const NoPathError& e) {
    err << "no path: " << e.what() << "\n";
    return kNoPath;
  } catch (const QueryIsolatedError& e) {
    err << "no path: " << e.what() << "\n";
    return kNoPath;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace mmnav::cli
