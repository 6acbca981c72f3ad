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

#ifndef STRADA_SCENARIO_HPP_
#define STRADA_SCENARIO_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "strada/map.hpp"
#include "strada/obstacle.hpp"

namespace strada {

/// Scripted agent: a polyline path walked at the speed profile, appearing
/// at spawn_time. Barriers keep a fixed pose.
struct ObstacleScript {
  int id = 0;
  ObstacleKind kind = ObstacleKind::kVehicle;
  double width = 2.0;
  double length = 4.5;
  std::vector<Vec2> path;
  std::vector<std::pair<double, double>> speed_profile;  // (t, v), t ascending
  double spawn_time = 0.0;

  /// Piecewise-linear speed at time t since spawn; end values held.
  double speed_at(double t) const;
};

struct SensingConfig {
  double obstacle_radius = 50.0;  // m
  double control_range = 40.0;    // m ahead along the route
  double position_sigma = 0.0;    // m, per axis
  double velocity_sigma = 0.0;    // m/s
  double dropout = 0.0;           // per-obstacle drop probability per tick
};

struct MergeZone {
  double begin_s = 0.0;
  double end_s = 0.0;
  int lead_id = 0;
  int follow_id = 0;
};

struct Scenario {
  WorldMap map;
  std::vector<ObstacleScript> obstacles;
  SensingConfig sensing;
  double time_limit = 120.0;
  double speed_limit = 8.33;  // desired cruise speed, m/s
  std::optional<MergeZone> merge;
};

/// Parses the scenario schema; `base_dir` resolves a relative "map" file
/// reference. Throws std::runtime_error with a field path on bad input.
Scenario load_scenario(const nlohmann::json& j, const std::string& base_dir);
Scenario load_scenario_file(const std::string& path);

}  // namespace strada

#endif  // STRADA_SCENARIO_HPP_
