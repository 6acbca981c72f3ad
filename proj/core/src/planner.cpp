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

#include "strada/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strada {

std::vector<double> SamplingGrid::horizons() const {
  std::vector<double> out;
  if (!(time_step > 0.0) || max_horizon < min_horizon) {
    return out;
  }
  const auto n = static_cast<int>(
      std::floor((max_horizon - min_horizon) / time_step + 1e-9));
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    out.push_back(min_horizon + static_cast<double>(i) * time_step);
  }
  return out;
}

namespace {

double axis_cost(const MotionPoly& poly, double horizon, double deviation,
                 const CostWeights& w) {
  return w.jerk * poly.jerk_integral() + w.time * horizon +
         w.deviation * deviation * deviation;
}

}  // namespace

std::vector<Candidate1d> gen_lateral(const MotionState& start,
                                     const SamplingGrid& grid,
                                     const CostWeights& weights) {
  std::vector<Candidate1d> out;
  const auto horizons = grid.horizons();
  out.reserve(horizons.size() * (2 * static_cast<std::size_t>(grid.lateral_count) + 1));
  for (const double T : horizons) {
    for (int k = -grid.lateral_count; k <= grid.lateral_count; ++k) {
      const double offset = static_cast<double>(k) * grid.lateral_step;
      MotionPoly poly =
          MotionPoly::solve_quintic(start, {offset, 0.0, 0.0}, T);
      const double cost = axis_cost(poly, T, offset, weights);
      out.push_back(Candidate1d{
          .tc = {.kind = TcKind::kPositionConstrained,
                 .mode = TcMode::kLateral,
                 .position = offset,
                 .velocity = 0.0,
                 .acceleration = 0.0,
                 .horizon = T},
          .poly = std::move(poly),
          .cost = cost,
      });
    }
  }
  return out;
}

std::vector<Candidate1d> gen_stopping(const MotionState& start, double stop_s,
                                      const SamplingGrid& grid,
                                      const CostWeights& weights) {
  if (stop_s < start.pos) {
    throw std::invalid_argument("stop position lies behind the start state");
  }
  std::vector<Candidate1d> out;
  for (const double T : grid.horizons()) {
    for (int k = 0; k <= grid.stop_count; ++k) {
      const double target = stop_s - static_cast<double>(k) * grid.stop_step;
      MotionPoly poly =
          MotionPoly::solve_quintic(start, {target, 0.0, 0.0}, T);
      const double cost = axis_cost(poly, T, stop_s - target, weights);
      out.push_back(Candidate1d{
          .tc = {.kind = TcKind::kPositionConstrained,
                 .mode = TcMode::kStopping,
                 .position = target,
                 .velocity = 0.0,
                 .acceleration = 0.0,
                 .horizon = T},
          .poly = std::move(poly),
          .cost = cost,
      });
    }
  }
  return out;
}

std::vector<Candidate1d> gen_following(const MotionState& start,
                                       const LonPredictor& lead,
                                       double safe_distance, double time_gap,
                                       const SamplingGrid& grid,
                                       const CostWeights& weights) {
  std::vector<Candidate1d> out;
  for (const double T : grid.horizons()) {
    const LonState pv = lead(T);
    const double target_s = pv.s - (safe_distance + time_gap * pv.v);
    if (target_s < start.pos) {
      continue;  // lead too close; the caller falls back to stopping
    }
    const double base_v = pv.v - time_gap * pv.a;
    for (int k = -grid.speed_count; k <= grid.speed_count; ++k) {
      const double target_v =
          base_v + static_cast<double>(k) * grid.speed_step;
      MotionPoly poly =
          MotionPoly::solve_quintic(start, {target_s, target_v, pv.a}, T);
      // Deviation is measured against the zero-offset target, which equals
      // target_s for every speed offset at this horizon.
      const double cost = axis_cost(poly, T, 0.0, weights);
      out.push_back(Candidate1d{
          .tc = {.kind = TcKind::kPositionConstrained,
                 .mode = TcMode::kFollowing,
                 .position = target_s,
                 .velocity = target_v,
                 .acceleration = pv.a,
                 .horizon = T},
          .poly = std::move(poly),
          .cost = cost,
      });
    }
  }
  return out;
}

bool merging_gap_open(const LonState& lead, const LonState& follower,
                      double vehicle_length, double safe_distance) {
  return lead.s - follower.s >= vehicle_length + 2.0 * safe_distance;
}

std::vector<Candidate1d> gen_merging(const MotionState& start,
                                     const LonPredictor& lead,
                                     const LonPredictor& follower,
                                     double vehicle_length,
                                     double safe_distance,
                                     const SamplingGrid& grid,
                                     const CostWeights& weights) {
  std::vector<Candidate1d> out;
  for (const double T : grid.horizons()) {
    const LonState pv = lead(T);
    const LonState fv = follower(T);
    if (!merging_gap_open(pv, fv, vehicle_length, safe_distance)) {
      continue;  // gap too small to host the ego at this horizon
    }
    const double target_s = 0.5 * (pv.s + fv.s);
    const double target_v = 0.5 * (pv.v + fv.v);
    const double target_a = 0.5 * (pv.a + fv.a);
    MotionPoly poly =
        MotionPoly::solve_quintic(start, {target_s, target_v, target_a}, T);
    const double cost = axis_cost(poly, T, 0.0, weights);
    out.push_back(Candidate1d{
        .tc = {.kind = TcKind::kPositionConstrained,
               .mode = TcMode::kMerging,
               .position = target_s,
               .velocity = target_v,
               .acceleration = target_a,
               .horizon = T},
        .poly = std::move(poly),
        .cost = cost,
    });
  }
  return out;
}

std::vector<Candidate1d> gen_velocity_keeping(const MotionState& start,
                                              double target_speed,
                                              const SamplingGrid& grid,
                                              const CostWeights& weights) {
  if (target_speed < 0.0) {
    throw std::invalid_argument("target speed must be non-negative");
  }
  std::vector<Candidate1d> out;
  for (const double T : grid.horizons()) {
    for (int k = -grid.speed_count; k <= grid.speed_count; ++k) {
      const double target_v =
          target_speed + static_cast<double>(k) * grid.speed_step;
      if (target_v < 0.0) {
        continue;
      }
      MotionPoly poly = MotionPoly::solve_quartic(start, target_v, 0.0, T);
      const double cost = axis_cost(poly, T, target_speed - target_v, weights);
      out.push_back(Candidate1d{
          .tc = {.kind = TcKind::kVelocityConstrained,
                 .mode = TcMode::kVelocityKeeping,
                 .position = 0.0,
                 .velocity = target_v,
                 .acceleration = 0.0,
                 .horizon = T},
          .poly = std::move(poly),
          .cost = cost,
      });
    }
  }
  return out;
}

std::vector<Trajectory> assemble_candidates(
    std::span<const Candidate1d> lateral,
    std::span<const Candidate1d> longitudinal, const ReferenceLine& ref,
    const ComfortLimits& limits, const CostWeights& weights, double dt,
    int* sequence) {
  int local_seq = 0;
  int& seq = sequence ? *sequence : local_seq;

  std::vector<Trajectory> out;
  out.reserve(lateral.size() * longitudinal.size());
  for (const Candidate1d& lat : lateral) {
    if (lat.poly.max_abs_jerk() > limits.max_jerk) {
      continue;
    }
    for (const Candidate1d& lon : longitudinal) {
      if (lon.poly.max_abs_jerk() > limits.max_jerk) {
        continue;
      }
      auto traj = realize_trajectory(ref, lat.poly, lon.poly, dt);
      if (!traj) {
        continue;
      }
      const bool within_limits = std::all_of(
          traj->points.begin(), traj->points.end(),
          [&](const TrajectoryPoint& p) {
            return p.v <= limits.max_speed + 1e-9 &&
                   std::abs(p.a) <= limits.max_accel + 1e-9 &&
                   std::abs(p.kappa) <= limits.max_curvature + 1e-9;
          });
      if (!within_limits) {
        continue;
      }
      traj->lateral_cost = lat.cost;
      traj->longitudinal_cost = lon.cost;
      traj->cost = weights.lateral * lat.cost + weights.longitudinal * lon.cost;
      traj->sequence = seq++;
      out.push_back(std::move(*traj));
    }
  }
  return out;
}

std::optional<Trajectory> select_optimal(
    std::span<const Trajectory> candidates) {
  const Trajectory* best = nullptr;
  for (const Trajectory& t : candidates) {
    if (!best) {
      best = &t;
      continue;
    }
    if (t.cost < best->cost) {
      best = &t;
    } else if (t.cost == best->cost) {
      if (t.horizon > best->horizon) {
        best = &t;
      } else if (t.horizon == best->horizon &&
                 std::abs(t.target_offset) < std::abs(best->target_offset)) {
        best = &t;
      }
      // Equal on all keys: the earlier sequence (already held) wins.
    }
  }
  if (!best) {
    return std::nullopt;
  }
  return *best;
}

std::optional<Trajectory> plan_tick(const FrenetState& ego, DriveMode mode,
                                    const ModeInputs& inputs,
                                    const ReferenceLine& ref,
                                    std::span<const ObstacleTrack> obstacles,
                                    const VehicleDims& ego_dims,
                                    const PlannerConfig& config,
                                    int* n_candidates,
                                    int* n_collision_free) {
  const MotionState lat_start{ego.d, ego.d_dot, ego.d_ddot};
  const MotionState lon_start{ego.s, ego.s_dot, ego.s_ddot};

  const auto lateral = gen_lateral(lat_start, config.grid, config.weights);

  std::vector<Candidate1d> longitudinal;
  switch (mode) {
    case DriveMode::kStopping:
      longitudinal = gen_stopping(lon_start, inputs.stop_position, config.grid,
                                  config.weights);
      break;
    case DriveMode::kFollowing:
      longitudinal = gen_following(lon_start, inputs.lead,
                                   config.safe_distance, config.time_gap,
                                   config.grid, config.weights);
      break;
    case DriveMode::kMerging:
      longitudinal = gen_merging(lon_start, inputs.lead, inputs.follower,
                                 inputs.vehicle_length, config.safe_distance,
                                 config.grid, config.weights);
      break;
    case DriveMode::kVelocityKeeping:
      longitudinal = gen_velocity_keeping(lon_start, inputs.target_speed,
                                          config.grid, config.weights);
      break;
  }

  // Pairing lateral and longitudinal fans that share the same horizon keeps
  // the candidate count linear in the number of horizons; profiles with
  // mismatched horizons are still handled by the realization padding when
  // callers assemble them directly.
  std::vector<Trajectory> pool;
  int seq = 0;
  for (const double T : config.grid.horizons()) {
    std::vector<Candidate1d> lat_at;
    std::vector<Candidate1d> lon_at;
    for (const Candidate1d& c : lateral) {
      if (c.tc.horizon == T) lat_at.push_back(c);
    }
    for (const Candidate1d& c : longitudinal) {
      if (c.tc.horizon == T) lon_at.push_back(c);
    }
    if (lat_at.empty() || lon_at.empty()) {
      continue;
    }
    auto assembled = assemble_candidates(lat_at, lon_at, ref, config.limits,
                                         config.weights, config.dt, &seq);
    pool.insert(pool.end(), std::make_move_iterator(assembled.begin()),
                std::make_move_iterator(assembled.end()));
  }
  if (n_candidates) {
    *n_candidates = static_cast<int>(pool.size());
  }

  auto feasible = filter_collision_free(std::move(pool), obstacles, ego_dims,
                                        config.check_horizon);
  if (n_collision_free) {
    *n_collision_free = static_cast<int>(feasible.size());
  }
  return select_optimal(feasible);
}

}  // namespace strada
