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

#include "mmnav/costmodel.hpp"

#include <algorithm>
#include <cmath>

#include "mmnav/errors.hpp"

namespace mmnav {

CostModel::CostModel(const CostParams& p) : p_(p) {
  const double fields[] = {p.ground_power,     p.ground_speed,    p.flight_power, p.flight_speed,
                           p.transition_power, p.transition_time, p.mass,         p.gravity};
  for (double f : fields) {
    if (!(f > 0.0) || !std::isfinite(f)) throw ConfigError("cost model fields must be finite and > 0");
  }
  if (ground_rate() > flight_rate()) {
    throw ConfigError("cost model requires ground_power/ground_speed <= flight_power/flight_speed");
  }
}

double CostModel::ground_edge_cost(double d) const {
  if (d < 0.0) throw DomainError("edge length must be >= 0");
  return p_.ground_power * (d / p_.ground_speed);
}

double CostModel::flight_edge_cost(double d, double z1, double z2) const {
  // Small slack for lengths recomputed from coordinates.
  if (d < 0.0 || d < std::abs(z2 - z1) * (1.0 - 1e-12)) {
    throw DomainError("flight edge length shorter than its altitude change");
  }
  return std::max(0.0, p_.flight_power * (d / p_.flight_speed) + weight() * (z2 - z1));
}

double CostModel::transition_cost() const { return p_.transition_power * p_.transition_time; }

double CostModel::heuristic(const Vec3& x, const Vec3& goal) const {
  return heuristic(x, goal, HeuristicMode::Admissible);
}

double CostModel::heuristic(const Vec3& x, const Vec3& goal, HeuristicMode mode) const {
  const double d_xy = distance_xy(x, goal);
  if (mode == HeuristicMode::Prose) {
    return ground_rate() * d_xy + flight_rate() * std::abs(goal.z - x.z);
  }
  return ground_rate() * d_xy + weight() * std::max(0.0, goal.z - x.z);
}

}  // namespace mmnav
