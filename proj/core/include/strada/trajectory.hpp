// Copyright 2026 The Strada Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STRADA_TRAJECTORY_HPP_
#define STRADA_TRAJECTORY_HPP_

#include <optional>
#include <vector>

#include "strada/motion_poly.hpp"
#include "strada/reference_line.hpp"

namespace strada {

struct TrajectoryPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  double a = 0.0;
  double kappa = 0.0;
};

/// A realized candidate: time-sampled Cartesian path plus the Frenet
/// profiles it came from and the planner bookkeeping used for selection.
struct Trajectory {
  std::vector<TrajectoryPoint> points;
  MotionPoly lateral;
  MotionPoly longitudinal;
  double start_s = 0.0;  // longitudinal profile origin along the reference

  double cost = 0.0;
  double lateral_cost = 0.0;
  double longitudinal_cost = 0.0;
  double horizon = 0.0;         // common horizon of the realized pair
  double target_offset = 0.0;   // terminal lateral offset of the candidate
  int sequence = 0;             // generation order, last tie-break key

  const TrajectoryPoint& back() const { return points.back(); }

  /// Pose at time t with constant-velocity extrapolation past the last
  /// sample (used by spatio-temporal checks over horizons longer than the
  /// candidate itself).
  TrajectoryPoint sample_at(double t) const;
};

/// Evaluates a lateral/longitudinal profile pair against the reference at a
/// fixed time step. Horizons may differ: the shorter profile is continued at
/// its terminal velocity, which for lateral profiles (terminal rate zero)
/// holds the terminal offset. Returns nullopt when the pair is infeasible:
/// reverse motion (s_dot < -1e-6) or a failed frame conversion anywhere.
std::optional<Trajectory> realize_trajectory(const ReferenceLine& ref,
                                             const MotionPoly& lateral,
                                             const MotionPoly& longitudinal,
                                             double dt);

}  // namespace strada

#endif  // STRADA_TRAJECTORY_HPP_
