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

#ifndef STRADA_CONFIG_HPP_
#define STRADA_CONFIG_HPP_

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "strada/collision.hpp"
#include "strada/localization.hpp"
#include "strada/planner.hpp"
#include "strada/prediction.hpp"

namespace strada {

/// Per-event multipliers applied to the infraction penalty.
struct InfractionCoefficients {
  double collision_pedestrian = 0.50;
  double collision_vehicle = 0.60;
  double collision_layout = 0.65;
  double red_light = 0.70;
  double route_deviation = 1.0;
  double blocked = 1.0;
};

/// Behavior-ladder thresholds used by the closed loop to pick the driving
/// mode each tick.
struct BehaviorConfig {
  double stop_engage_distance = 40.0;  // m ahead of the stop line
  double follow_engage_distance = 40.0;
  double stop_line_margin = 0.5;       // extra gap kept before the line
  double stop_sign_window = 2.0;       // full stop required this close
  double standstill_speed = 0.1;       // m/s
  double lane_half_width = 1.75;       // lead-vehicle lane association
};

/// Starting states for the candidate-fan CSV emitter.
struct FanConfig {
  MotionState lateral_start{1.0, 0.0, 0.0};
  MotionState velocity_start{0.0, 8.33, 0.0};
  double target_speed = 8.33;
  double sample_dt = 0.02;
};

/// The single run configuration: every field has a usable default, so an
/// empty JSON document is a valid config.
struct RunConfig {
  CostWeights weights;
  SamplingGrid grid;
  ComfortLimits limits;
  VehicleDims ego_dims;
  double replan_interval = 0.1;
  double sim_dt = 0.05;
  double trajectory_dt = 0.1;
  double safe_distance = 5.0;  // D0
  double time_gap = 1.0;       // tau
  PredictionParams prediction;
  LocalizerConfig localization;
  InfractionCoefficients infractions;
  BehaviorConfig behavior;
  FanConfig fan;
  double pedestrian_radius = 0.4;
  double goal_radius = 2.0;
  double route_corridor = 30.0;       // route-deviation threshold
  double blocked_after = 180.0;       // s of continuous standstill
  double event_window = 2.0;          // s, infraction deduplication
  double reference_ds = 0.5;
  double reference_extension = 80.0;  // m of straight continuation past goal

  PlannerConfig planner_config() const;
};

RunConfig load_config(const nlohmann::json& j);
RunConfig load_config_file(const std::string& path);
nlohmann::json config_to_json(const RunConfig& config);

}  // namespace strada

#endif  // STRADA_CONFIG_HPP_
