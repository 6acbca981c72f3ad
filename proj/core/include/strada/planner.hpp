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

#ifndef STRADA_PLANNER_HPP_
#define STRADA_PLANNER_HPP_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "strada/collision.hpp"
#include "strada/motion_poly.hpp"
#include "strada/reference_line.hpp"
#include "strada/trajectory.hpp"

namespace strada {

enum class DriveMode { kStopping, kFollowing, kMerging, kVelocityKeeping };

/// Weights of the per-axis candidate cost k_j * J + k_t * T + k_s * dev^2
/// plus the lateral/longitudinal mixing pair for the total cost.
struct CostWeights {
  double jerk = 0.1;          // k_j
  double time = 0.1;          // k_t
  double deviation = 1.0;     // k_s
  double lateral = 1.0;       // mixing weight on the lateral cost
  double longitudinal = 1.0;  // mixing weight on the longitudinal cost
};

struct SamplingGrid {
  double lateral_step = 1.0;   // offset spacing, m
  int lateral_count = 3;       // offsets sampled per side of the centerline
  double time_step = 0.2;      // horizon spacing, s
  double min_horizon = 2.0;
  double max_horizon = 5.0;
  double speed_step = 1.38;    // terminal-speed spacing, m/s
  int speed_count = 2;         // speed offsets per side of the target
  double stop_step = 2.0;      // stop-position spacing, m
  int stop_count = 3;          // extra stop positions short of the target

  std::vector<double> horizons() const;
};

struct ComfortLimits {
  double max_jerk = 10.0;      // m/s^3, on each axis profile
  double max_accel = 5.0;      // m/s^2, along the realized path
  double max_speed = 16.7;     // m/s
  double max_curvature = 0.3;  // 1/m
};

enum class TcKind { kPositionConstrained, kVelocityConstrained };
enum class TcMode { kStopping, kFollowing, kMerging, kVelocityKeeping, kLateral };

/// Target end state and horizon defining one sampled candidate.
struct TerminalCondition {
  TcKind kind = TcKind::kPositionConstrained;
  TcMode mode = TcMode::kLateral;
  double position = 0.0;  // meaningful for position-constrained conditions
  double velocity = 0.0;
  double acceleration = 0.0;
  double horizon = 0.0;
};

/// One-dimensional candidate: terminal condition, solved profile, axis cost.
struct Candidate1d {
  TerminalCondition tc;
  MotionPoly poly;
  double cost = 0.0;
};

/// Longitudinal state of another agent projected onto the ego reference.
struct LonState {
  double s = 0.0;
  double v = 0.0;
  double a = 0.0;
};

/// Supplies the predicted longitudinal state of a neighbor at a given
/// horizon; the planner queries it once per sampled T.
using LonPredictor = std::function<LonState(double horizon)>;

/// Lateral candidate fan: one quintic to (k * lateral_step, 0, 0) per
/// offset index k in [-n, n] and per horizon.
std::vector<Candidate1d> gen_lateral(const MotionState& start,
                                     const SamplingGrid& grid,
                                     const CostWeights& weights);

/// Stopping fan: quintics to rest at stop_s and at stop_count positions
/// spaced stop_step short of it. Throws std::invalid_argument when stop_s
/// lies behind the start.
std::vector<Candidate1d> gen_stopping(const MotionState& start, double stop_s,
                                      const SamplingGrid& grid,
                                      const CostWeights& weights);

/// Following fan: per horizon T the lead state (s, v, a) at T maps to the
/// target s - (safe_distance + time_gap * v) with terminal speeds sampled
/// v - time_gap * a +- k * speed_step. Candidates whose target falls behind
/// the start are skipped.
std::vector<Candidate1d> gen_following(const MotionState& start,
                                       const LonPredictor& lead,
                                       double safe_distance, double time_gap,
                                       const SamplingGrid& grid,
                                       const CostWeights& weights);

/// True when the predicted gap can host the ego: gap >= length + 2 * D0.
bool merging_gap_open(const LonState& lead, const LonState& follower,
                      double vehicle_length, double safe_distance);

/// Merging fan: midpoint of the two neighbors with mean terminal velocity
/// and acceleration; returns an empty set when the gap is too small at
/// every horizon.
std::vector<Candidate1d> gen_merging(const MotionState& start,
                                     const LonPredictor& lead,
                                     const LonPredictor& follower,
                                     double vehicle_length,
                                     double safe_distance,
                                     const SamplingGrid& grid,
                                     const CostWeights& weights);

/// Velocity-keeping fan: quartics to (target_speed +- k * speed_step, 0);
/// negative terminal speeds are skipped.
std::vector<Candidate1d> gen_velocity_keeping(const MotionState& start,
                                              double target_speed,
                                              const SamplingGrid& grid,
                                              const CostWeights& weights);

/// Realizes the Cartesian product of the two candidate sets against the
/// reference and drops pairs violating the comfort limits (per-axis jerk
/// bound, Cartesian acceleration/speed/curvature) or failing conversion.
/// Total cost is weights.lateral * C_lat + weights.longitudinal * C_lon.
/// `sequence` continues candidate numbering across calls.
std::vector<Trajectory> assemble_candidates(
    std::span<const Candidate1d> lateral, std::span<const Candidate1d> longitudinal,
    const ReferenceLine& ref, const ComfortLimits& limits,
    const CostWeights& weights, double dt, int* sequence = nullptr);

/// Minimum-cost member; ties fall to the longer horizon, then the smaller
/// |lateral target|, then generation order. Nullopt on an empty set is the
/// no-feasible-trajectory signal.
std::optional<Trajectory> select_optimal(std::span<const Trajectory> candidates);

struct PlannerConfig {
  SamplingGrid grid;
  ComfortLimits limits;
  CostWeights weights;
  double dt = 0.1;             // trajectory sampling step
  double safe_distance = 5.0;  // D0
  double time_gap = 1.0;       // tau
  double check_horizon = 5.0;  // spatio-temporal collision window
};

struct ModeInputs {
  double stop_position = 0.0;   // stopping
  double target_speed = 0.0;    // velocity keeping
  LonPredictor lead;            // following and merging
  LonPredictor follower;        // merging
  double vehicle_length = 4.5;  // merging gap rule
};

/// One full planning pass: mode-specific longitudinal fan and lateral fan,
/// paired per shared horizon, comfort-checked, collision-filtered, then
/// cost-selected. Deterministic for identical inputs. Nullopt signals that
/// no feasible trajectory exists and the caller should fall back.
std::optional<Trajectory> plan_tick(const FrenetState& ego, DriveMode mode,
                                    const ModeInputs& inputs,
                                    const ReferenceLine& ref,
                                    std::span<const ObstacleTrack> obstacles,
                                    const VehicleDims& ego_dims,
                                    const PlannerConfig& config,
                                    int* n_candidates = nullptr,
                                    int* n_collision_free = nullptr);

}  // namespace strada

#endif  // STRADA_PLANNER_HPP_
