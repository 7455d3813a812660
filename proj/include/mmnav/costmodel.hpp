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

#ifndef MMNAV_COSTMODEL_HPP
#define MMNAV_COSTMODEL_HPP

#include "mmnav/vec.hpp"

namespace mmnav {

/// Constant-power locomotion parameters, SI units.
///
/// Only `mass` is a measured platform value (6.0 kg). The powers, speeds and
/// morph duration are calibration placeholders.
struct CostParams {
  double ground_power = 120.0;      // W, drive motors
  double ground_speed = 1.0;        // m/s
  double flight_power = 600.0;      // W, hover/forward flight
  double flight_speed = 1.0;        // m/s
  double transition_power = 50.0;   // W, joint servos while morphing
  double transition_time = 4.0;     // s
  double mass = 6.0;                // kg
  double gravity = 9.81;            // m/s^2
};

enum class HeuristicMode {
  /// Ground-rate horizontal distance plus climb potential. Admissible and consistent.
  Admissible,
  /// Ground-rate horizontal distance plus flight-rate |dz|. Comparison runs only.
  Prose,
};

/// Energy model for ground, flight and morph edges. Immutable once built;
/// construction rejects non-positive fields and parameter sets where driving
/// costs more per meter than flying.
class CostModel {
 public:
  CostModel() : CostModel(CostParams{}) {}
  explicit CostModel(const CostParams& p);

  const CostParams& params() const { return p_; }

  /// P_m * d / v_g.
  double ground_edge_cost(double d) const;
  /// max(0, P_f * d / v_f + m g (z2 - z1)); requires d >= |z2 - z1|.
  double flight_edge_cost(double d, double z1, double z2) const;
  /// P_t * t_t.
  double transition_cost() const;

  /// (P_m / v_g) * horizontal distance + m g max(0, goal.z - x.z).
  double heuristic(const Vec3& x, const Vec3& goal) const;
  double heuristic(const Vec3& x, const Vec3& goal, HeuristicMode mode) const;

  double ground_rate() const { return p_.ground_power / p_.ground_speed; }  // J/m
  double flight_rate() const { return p_.flight_power / p_.flight_speed; }  // J/m
  double weight() const { return p_.mass * p_.gravity; }                    // N

 private:
  CostParams p_;
};

}  // namespace mmnav

#endif  // MMNAV_COSTMODEL_HPP
