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

#ifndef STRADA_WORLD_HPP_
#define STRADA_WORLD_HPP_

#include <optional>
#include <random>
#include <vector>

#include "strada/config.hpp"
#include "strada/localization.hpp"
#include "strada/map.hpp"
#include "strada/metrics.hpp"
#include "strada/obstacle.hpp"
#include "strada/reference_line.hpp"
#include "strada/scenario.hpp"
#include "strada/trajectory.hpp"

namespace strada {

/// Ground-truth ego state tracked by the simulator.
struct EgoTruth {
  Pose2 pose;
  double v = 0.0;
  double a = 0.0;
  double yaw_rate = 0.0;
  double route_s = 0.0;
  double route_d = 0.0;
};

/// Traffic light / sign report relative to the ego, limited to controls on
/// the route within detection range.
struct TrafficControlObservation {
  Vec2 relative_position;  // ego body frame
  enum class Signal { kRed, kYellow, kGreen, kStopSign } signal =
      Signal::kGreen;
  double stop_line_s = 0.0;  // along the route reference
  int control_id = 0;
  bool stop_satisfied = false;  // stop-sign handshake already completed
};

struct Perception {
  std::vector<ObstacleState> obstacles;
  std::vector<TrafficControlObservation> controls;
};

/// Deterministic 2-D urban world: scripted agents, phased lights, perfect
/// trajectory tracking for the ego, ground-truth perception with optional
/// noise, and infraction bookkeeping.
class World {
 public:
  World(Scenario scenario, const RunConfig& config);

  /// Replaces the active ego command with a trajectory anchored at the
  /// current simulation time.
  void command_trajectory(Trajectory trajectory);

  /// Replaces the active command with a constant-deceleration stop along
  /// the current heading.
  void command_emergency_stop();

  /// Advances every actor and the clocks by dt, then runs infraction
  /// detection at the new state.
  void step(double dt);

  double time() const { return time_; }
  const EgoTruth& ego() const { return ego_; }
  const ReferenceLine& route_reference() const { return *route_ref_; }
  double route_length() const { return goal_s_; }
  double distance_completed() const { return completed_s_; }

  /// Ground-truth states of the obstacles active at the current time.
  std::vector<ObstacleState> obstacle_truths() const;

  /// Perception oracle: obstacles within the sensing radius (position and
  /// velocity optionally perturbed, whole detections optionally dropped)
  /// and route traffic controls within detection range ahead.
  Perception perceive(std::mt19937_64& rng) const;

  /// Noisy navigational sensor bundle for the current ego truth.
  NavSignals sample_nav_signals(std::mt19937_64& rng) const;

  std::span<const InfractionEvent> events() const { return events_; }
  std::optional<Termination> forced_termination() const {
    return forced_termination_;
  }
  bool goal_reached() const;

  const Scenario& scenario() const { return scenario_; }

 private:
  struct ObstacleRuntime {
    std::size_t script_index = 0;
    double traveled = 0.0;
    std::vector<double> cumulative;  // path arc lengths
  };

  struct ControlRuntime {
    std::size_t control_index = 0;
    Vec2 position;
    double route_s = 0.0;  // stop line along the route reference
    bool on_route = false;
    bool stop_satisfied = false;
    double prev_front_s = 0.0;
  };

  enum class CommandKind { kHold, kTrack, kEmergencyStop };

  void detect_infractions();
  void push_event(InfractionType type, int counterpart);
  Pose2 obstacle_pose(const ObstacleRuntime& o) const;
  double obstacle_speed(const ObstacleRuntime& o) const;
  double obstacle_accel(const ObstacleRuntime& o) const;
  bool obstacle_active(const ObstacleRuntime& o) const;

  Scenario scenario_;
  RunConfig config_;
  std::optional<ReferenceLine> route_ref_;
  double goal_s_ = 0.0;

  double time_ = 0.0;
  EgoTruth ego_;
  std::vector<ObstacleRuntime> obstacles_;
  std::vector<ControlRuntime> controls_;

  CommandKind command_ = CommandKind::kHold;
  std::optional<Trajectory> command_traj_;
  double command_time_ = 0.0;
  Pose2 command_pose_;
  double command_speed_ = 0.0;

  double completed_s_ = 0.0;
  std::vector<InfractionEvent> events_;
  std::optional<Termination> forced_termination_;
  std::optional<double> standstill_since_;
  bool blocked_reported_ = false;
  std::vector<std::pair<std::pair<int, int>, double>> recent_events_;
};

}  // namespace strada

#endif  // STRADA_WORLD_HPP_
