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

#ifndef STRADA_SIMULATION_HPP_
#define STRADA_SIMULATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strada/collision.hpp"
#include "strada/config.hpp"
#include "strada/metrics.hpp"
#include "strada/planner.hpp"
#include "strada/scenario.hpp"
#include "strada/world.hpp"

namespace strada {

/// One row of the per-tick trajectory log.
struct TickLog {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  double a = 0.0;
  double s = 0.0;
  double d = 0.0;
  double selected_cost = -1.0;  // -1 when no feasible trajectory existed
  int n_candidates = 0;
  int n_collision_free = 0;
  std::string mode;
};

/// Snapshot handed to the per-tick observer before the world advances.
struct TickInfo {
  double t = 0.0;
  DriveMode requested_mode = DriveMode::kVelocityKeeping;
  bool emergency = false;
  const Trajectory* selected = nullptr;  // null when emergency stopping
  std::span<const ObstacleTrack> tracks;
  const World* world = nullptr;
};

using TickObserver = std::function<void(const TickInfo&)>;

struct RunResult {
  MetricsReport metrics;
  std::vector<TickLog> log;
  double duration = 0.0;
  double final_speed = 0.0;
  FrenetState final_frenet;
  std::vector<ObstacleState> final_obstacles;
};

/// Executes the full closed loop: perceive, localize, predict, pick a mode,
/// plan, actuate, score. Deterministic for a fixed (scenario, config, seed).
RunResult run_scenario(const Scenario& scenario, const RunConfig& config,
                       std::uint64_t seed, const TickObserver& observer = {});

std::string trajectory_log_csv(std::span<const TickLog> log);

}  // namespace strada

#endif  // STRADA_SIMULATION_HPP_
