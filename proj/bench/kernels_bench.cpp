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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "mmnav/env.hpp"
#include "mmnav/localnav.hpp"
#include "mmnav/oracle.hpp"
#include "mmnav/splitmix.hpp"

namespace {

using namespace mmnav;

Environment cluttered_world(int boxes) {
  SplitMix64 rng(5);
  std::vector<Obstacle> obs;
  for (int i = 0; i < boxes; ++i) {
    const Vec3 lo{rng.uniform(0, 38), rng.uniform(0, 38), 0.0};
    obs.push_back({Aabb(lo, lo + Vec3{rng.uniform(0.2, 2), rng.uniform(0.2, 2), 1.0}), ""});
  }
  return Environment(Aabb({0, 0, 0}, {40, 40, 4}), ConstantGround{0.0}, std::move(obs));
}

GridProjection fine_projection() {
  GridProjection p;
  p.resolution = 0.05;
  return p;
}

void BM_ProjectToGrid(benchmark::State& state) {
  const Environment env = cluttered_world(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(project_to_grid(env, fine_projection()));
}

void BM_ProjectToGridSerial(benchmark::State& state) {
  const Environment env = cluttered_world(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(project_to_grid_serial(env, fine_projection()));
}

void BM_ClearanceField(benchmark::State& state) {
  const OccupancyGrid g = project_to_grid(cluttered_world(60), fine_projection());
  for (auto _ : state) benchmark::DoNotOptimize(clearance_field(g, 1.0));
}

void BM_ClearanceFieldSerial(benchmark::State& state) {
  const OccupancyGrid g = project_to_grid(cluttered_world(60), fine_projection());
  for (auto _ : state) benchmark::DoNotOptimize(clearance_field_serial(g, 1.0));
}

OracleConfig sweep_config() {
  OracleConfig cfg;
  cfg.seeds = 16;
  return cfg;
}

void BM_OracleSweep(benchmark::State& state) {
  const Environment env = empty_world(20, 20, 5);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep(env, CostModel{}, sweep_config()));
}

void BM_OracleSweepSerial(benchmark::State& state) {
  const Environment env = empty_world(20, 20, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_sweep_serial(env, CostModel{}, sweep_config()));
  }
}

}  // namespace

BENCHMARK(BM_ProjectToGrid)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ProjectToGridSerial)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClearanceField)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClearanceFieldSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSweep)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
