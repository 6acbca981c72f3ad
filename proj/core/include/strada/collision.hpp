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

#ifndef STRADA_COLLISION_HPP_
#define STRADA_COLLISION_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "strada/geometry.hpp"
#include "strada/obstacle.hpp"
#include "strada/prediction.hpp"
#include "strada/trajectory.hpp"

namespace strada {

struct Disk {
  Vec2 center;
  double radius = 0.0;
};

/// Conservative covering of a rectangular footprint by an odd number of
/// equal-radius disks (three for vehicles, one for pedestrians). The union
/// of disks always contains the source rectangle.
class DiskSet {
 public:
  /// Three disks at body-frame x = 0 and +-length/3 with the common radius
  /// sqrt(width^2/4 + length^2/36), which passes exactly through the
  /// rectangle corners. Throws std::invalid_argument on non-positive sizes.
  static DiskSet vehicle(const Pose2& pose, double width, double length);

  /// Single disk, used for pedestrians.
  static DiskSet point(const Pose2& pose, double radius);

  std::span<const Disk> disks() const { return {disks_.data(), count_}; }
  std::size_t size() const { return count_; }
  double radius() const { return disks_[0].radius; }

 private:
  DiskSet() = default;
  std::array<Disk, 3> disks_{};
  std::size_t count_ = 0;
};

/// Strict pairwise overlap: true iff any disk pair has center distance
/// strictly below the radius sum. Touching circles do not collide.
bool pairwise_collides(const DiskSet& a, const DiskSet& b);

struct VehicleDims {
  double width = 2.0;
  double length = 4.5;
};

/// A predicted obstacle motion bundled with the footprint used to check it.
struct ObstacleTrack {
  PredictedTrajectory prediction;
  ObstacleKind kind = ObstacleKind::kVehicle;
  double width = 2.0;
  double length = 4.5;
  double pedestrian_radius = 0.4;

  DiskSet footprint_at(const Pose2& pose) const;
};

struct CollisionStats {
  std::size_t pair_tests = 0;    // disk-pair distance comparisons
  std::size_t point_checks = 0;  // (timestep, obstacle) combinations
};

/// Spatio-temporal clearance over [0, horizon]: at every sampled timestep
/// the ego footprint along `candidate` (extrapolated past its end at
/// constant velocity) must stay disk-free of every obstacle footprint along
/// its prediction (held at its last state when shorter). A quick
/// center-distance reject skips the pairwise disk tests for far apart
/// footprints; `stats`, when given, counts the work actually done.
bool trajectory_collision_free(const Trajectory& candidate,
                               std::span<const ObstacleTrack> obstacles,
                               const VehicleDims& ego, double horizon,
                               CollisionStats* stats = nullptr);

/// Keeps exactly the collision-free members of the candidate set, in their
/// original order.
std::vector<Trajectory> filter_collision_free(
    std::vector<Trajectory> candidates,
    std::span<const ObstacleTrack> obstacles, const VehicleDims& ego,
    double horizon, CollisionStats* stats = nullptr);

/// Smallest disk-boundary clearance between the candidate and any obstacle
/// over [0, horizon]; negative values mean overlap.
double min_clearance(const Trajectory& candidate,
                     std::span<const ObstacleTrack> obstacles,
                     const VehicleDims& ego, double horizon);

}  // namespace strada

#endif  // STRADA_COLLISION_HPP_
