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

#ifndef MMNAV_SVG_HPP
#define MMNAV_SVG_HPP

#include <string>
#include <vector>

#include "mmnav/env.hpp"
#include "mmnav/io.hpp"
#include "mmnav/planner.hpp"
#include "mmnav/roadmap.hpp"
#include "mmnav/sim.hpp"

namespace mmnav {

/// Top-down figure: footprint, obstacles, optional roadmap, path colored by
/// edge kind (ground green, flight blue, transition orange).
std::string plan_svg(const Environment& env, const Roadmap& roadmap,
                     const std::vector<PlannedLeg>& legs, bool draw_roadmap = true);

/// Top-down figure of an executed trajectory colored by robot mode, with waypoints.
std::string trajectory_svg(const Environment& env, const std::vector<TrajectoryRecord>& log,
                           const std::vector<Vec3>& waypoints);

}  // namespace mmnav

#endif  // MMNAV_SVG_HPP
