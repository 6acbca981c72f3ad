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

#include "strada/collision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace strada {

DiskSet DiskSet::vehicle(const Pose2& pose, double width, double length) {
  if (!(width > 0.0) || !(length > 0.0)) {
    throw std::invalid_argument("footprint dimensions must be positive");
  }
  const double radius =
      std::sqrt(width * width / 4.0 + length * length / 36.0);
  const double offset = length / 3.0;
  DiskSet out;
  out.count_ = 3;
  out.disks_[0] = {pose.position(), radius};
  out.disks_[1] = {pose.transform({offset, 0.0}), radius};
  out.disks_[2] = {pose.transform({-offset, 0.0}), radius};
  return out;
}

DiskSet DiskSet::point(const Pose2& pose, double radius) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("disk radius must be positive");
  }
  DiskSet out;
  out.count_ = 1;
  out.disks_[0] = {pose.position(), radius};
  return out;
}

bool pairwise_collides(const DiskSet& a, const DiskSet& b) {
  for (const Disk& da : a.disks()) {
    for (const Disk& db : b.disks()) {
      const double reach = da.radius + db.radius;
      if ((da.center - db.center).squared_norm() < reach * reach) {
        return true;
      }
    }
  }
  return false;
}

DiskSet ObstacleTrack::footprint_at(const Pose2& pose) const {
  if (kind == ObstacleKind::kPedestrian) {
    return DiskSet::point(pose, pedestrian_radius);
  }
  return DiskSet::vehicle(pose, width, length);
}

namespace {

// Upper bound on how far any disk boundary extends from the footprint
// origin; used for the cheap center-distance reject.
double footprint_reach(const ObstacleTrack& track) {
  if (track.kind == ObstacleKind::kPedestrian) {
    return track.pedestrian_radius;
  }
  return track.length / 3.0 +
         std::sqrt(track.width * track.width / 4.0 +
                   track.length * track.length / 36.0);
}

double ego_reach(const VehicleDims& ego) {
  return ego.length / 3.0 + std::sqrt(ego.width * ego.width / 4.0 +
                                      ego.length * ego.length / 36.0);
}

}  // namespace

bool trajectory_collision_free(const Trajectory& candidate,
                               std::span<const ObstacleTrack> obstacles,
                               const VehicleDims& ego, double horizon,
                               CollisionStats* stats) {
  if (candidate.points.empty()) {
    return true;
  }
  const double dt = candidate.points.size() > 1
                        ? candidate.points[1].t - candidate.points[0].t
                        : horizon;
  const auto steps = static_cast<std::size_t>(
      std::llround(std::max(horizon, candidate.back().t) / dt));

  const double reach_e = ego_reach(ego);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const TrajectoryPoint p = candidate.sample_at(t);
    const DiskSet ego_disks =
        DiskSet::vehicle({p.x, p.y, p.theta}, ego.width, ego.length);
    for (const ObstacleTrack& track : obstacles) {
      if (stats) {
        ++stats->point_checks;
      }
      const PredictedPoint op = track.prediction.sample_at(t);
      const double gap = std::hypot(op.x - p.x, op.y - p.y);
      if (gap > reach_e + footprint_reach(track)) {
        continue;  // footprints cannot touch at this distance
      }
      const DiskSet other = track.footprint_at({op.x, op.y, op.theta});
      if (stats) {
        stats->pair_tests += ego_disks.size() * other.size();
      }
      if (pairwise_collides(ego_disks, other)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Trajectory> filter_collision_free(
    std::vector<Trajectory> candidates,
    std::span<const ObstacleTrack> obstacles, const VehicleDims& ego,
    double horizon, CollisionStats* stats) {
  std::vector<Trajectory> out;
  out.reserve(candidates.size());
  for (Trajectory& traj : candidates) {
    if (trajectory_collision_free(traj, obstacles, ego, horizon, stats)) {
      out.push_back(std::move(traj));
    }
  }
  return out;
}

double min_clearance(const Trajectory& candidate,
                     std::span<const ObstacleTrack> obstacles,
                     const VehicleDims& ego, double horizon) {
  double best = std::numeric_limits<double>::infinity();
  if (candidate.points.empty()) {
    return best;
  }
  const double dt = candidate.points.size() > 1
                        ? candidate.points[1].t - candidate.points[0].t
                        : horizon;
  const auto steps = static_cast<std::size_t>(
      std::llround(std::max(horizon, candidate.back().t) / dt));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const TrajectoryPoint p = candidate.sample_at(t);
    const DiskSet ego_disks =
        DiskSet::vehicle({p.x, p.y, p.theta}, ego.width, ego.length);
    for (const ObstacleTrack& track : obstacles) {
      const PredictedPoint op = track.prediction.sample_at(t);
      const DiskSet other = track.footprint_at({op.x, op.y, op.theta});
      for (const Disk& da : ego_disks.disks()) {
        for (const Disk& db : other.disks()) {
          const double c =
              (da.center - db.center).norm() - (da.radius + db.radius);
          best = std::min(best, c);
        }
      }
    }
  }
  return best;
}

}  // namespace strada
