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

#ifndef STRADA_MAP_HPP_
#define STRADA_MAP_HPP_

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "strada/geometry.hpp"

namespace strada {

struct Road {
  int id = 0;
  std::vector<Vec2> waypoints;
  double lane_width = 3.5;
  std::vector<int> successors;
};

enum class ControlKind { kLight, kStopSign };

/// Traffic-light phase schedule; phase(t) cycles green -> yellow -> red.
struct PhaseSchedule {
  double green = 10.0;
  double yellow = 3.0;
  double red = 10.0;
  double offset = 0.0;
};

enum class LightState { kGreen, kYellow, kRed };

struct TrafficControl {
  int id = 0;
  ControlKind kind = ControlKind::kLight;
  int road_id = 0;
  double s = 0.0;  // stop line arc length along the owning road
  PhaseSchedule phases;

  /// Light state at absolute time t; stop signs are always treated as red
  /// by callers that query them, so this is only meaningful for lights.
  LightState state_at(double t) const;
};

struct Route {
  std::vector<int> roads;
  Pose2 start;
  Vec2 goal;
};

struct WorldMap {
  std::vector<Road> roads;
  std::vector<TrafficControl> traffic_controls;
  Route route;

  const Road& road_by_id(int id) const;
  bool has_road(int id) const;
};

/// Parses the JSON map schema. Throws std::runtime_error with a field path
/// on malformed input.
WorldMap load_map(const nlohmann::json& j);
WorldMap load_map_file(const std::string& path);

}  // namespace strada

#endif  // STRADA_MAP_HPP_
