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

#ifndef STRADA_OBSTACLE_HPP_
#define STRADA_OBSTACLE_HPP_

namespace strada {

enum class ObstacleKind { kVehicle, kPedestrian, kBarrier };

/// Snapshot of a moving obstacle as reported by perception: planar pose,
/// speed along the heading, longitudinal acceleration, and footprint size.
struct ObstacleState {
  int id = 0;
  ObstacleKind kind = ObstacleKind::kVehicle;
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;
  double v = 0.0;
  double a = 0.0;
  double width = 0.0;
  double length = 0.0;
};

}  // namespace strada

#endif  // STRADA_OBSTACLE_HPP_
