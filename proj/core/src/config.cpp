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

#include "strada/config.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace strada {

using nlohmann::json;

PlannerConfig RunConfig::planner_config() const {
  PlannerConfig out;
  out.grid = grid;
  out.limits = limits;
  out.weights = weights;
  out.dt = trajectory_dt;
  out.safe_distance = safe_distance;
  out.time_gap = time_gap;
  out.check_horizon = prediction.horizon;
  return out;
}

namespace {

MotionState parse_state(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

}  // namespace

RunConfig load_config(const json& j) {
  RunConfig c;
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    c.weights.jerk = w.value("jerk", c.weights.jerk);
    c.weights.time = w.value("time", c.weights.time);
    c.weights.deviation = w.value("deviation", c.weights.deviation);
    c.weights.lateral = w.value("lateral", c.weights.lateral);
    c.weights.longitudinal = w.value("longitudinal", c.weights.longitudinal);
  }
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    c.grid.lateral_step = g.value("lateral_step", c.grid.lateral_step);
    c.grid.lateral_count = g.value("lateral_count", c.grid.lateral_count);
    c.grid.time_step = g.value("time_step", c.grid.time_step);
    c.grid.min_horizon = g.value("min_horizon", c.grid.min_horizon);
    c.grid.max_horizon = g.value("max_horizon", c.grid.max_horizon);
    c.grid.speed_step = g.value("speed_step", c.grid.speed_step);
    c.grid.speed_count = g.value("speed_count", c.grid.speed_count);
    c.grid.stop_step = g.value("stop_step", c.grid.stop_step);
    c.grid.stop_count = g.value("stop_count", c.grid.stop_count);
  }
  if (j.contains("limits")) {
    const auto& l = j["limits"];
    c.limits.max_jerk = l.value("max_jerk", c.limits.max_jerk);
    c.limits.max_accel = l.value("max_accel", c.limits.max_accel);
    c.limits.max_speed = l.value("max_speed", c.limits.max_speed);
    c.limits.max_curvature = l.value("max_curvature", c.limits.max_curvature);
  }
  if (j.contains("ego")) {
    const auto& e = j["ego"];
    c.ego_dims.width = e.value("width", c.ego_dims.width);
    c.ego_dims.length = e.value("length", c.ego_dims.length);
  }
  c.replan_interval = j.value("replan_interval", c.replan_interval);
  c.sim_dt = j.value("sim_dt", c.sim_dt);
  c.trajectory_dt = j.value("trajectory_dt", c.trajectory_dt);
  c.safe_distance = j.value("safe_distance", c.safe_distance);
  c.time_gap = j.value("time_gap", c.time_gap);
  if (j.contains("prediction")) {
    const auto& p = j["prediction"];
    c.prediction.graph_ds = p.value("graph_ds", c.prediction.graph_ds);
    c.prediction.path_tol = p.value("path_tol", c.prediction.graph_ds);
    c.prediction.horizon = p.value("horizon", c.prediction.horizon);
    c.prediction.dt = p.value("dt", c.prediction.dt);
    c.prediction.lookahead_gain =
        p.value("lookahead_gain", c.prediction.lookahead_gain);
    c.prediction.lookahead_min =
        p.value("lookahead_min", c.prediction.lookahead_min);
    c.prediction.lookahead_max =
        p.value("lookahead_max", c.prediction.lookahead_max);
    c.prediction.speed_cap = p.value("speed_cap", c.prediction.speed_cap);
    c.prediction.graph_attach_radius =
        p.value("graph_attach_radius", c.prediction.graph_attach_radius);
  }
  if (j.contains("localization")) {
    const auto& l = j["localization"];
    c.localization.gnss_sigma =
        l.value("gnss_sigma", c.localization.gnss_sigma);
    c.localization.compass_sigma =
        l.value("compass_sigma", c.localization.compass_sigma);
    c.localization.imu_sigma = l.value("imu_sigma", c.localization.imu_sigma);
    if (l.contains("process_diag")) {
      const auto& q = l["process_diag"];
      for (int i = 0; i < 5; ++i) {
        c.localization.process_diag(i) = q.at(i).get<double>();
      }
    }
    if (l.contains("initial_variance")) {
      const auto& q = l["initial_variance"];
      for (int i = 0; i < 5; ++i) {
        c.localization.initial_variance(i) = q.at(i).get<double>();
      }
    }
    if (l.contains("origin")) {
      c.localization.projection.origin_latitude =
          l["origin"].value("latitude", 0.0);
      c.localization.projection.origin_longitude =
          l["origin"].value("longitude", 0.0);
    }
  }
  if (j.contains("infractions")) {
    const auto& i = j["infractions"];
    c.infractions.collision_pedestrian =
        i.value("collision_pedestrian", c.infractions.collision_pedestrian);
    c.infractions.collision_vehicle =
        i.value("collision_vehicle", c.infractions.collision_vehicle);
    c.infractions.collision_layout =
        i.value("collision_layout", c.infractions.collision_layout);
    c.infractions.red_light = i.value("red_light", c.infractions.red_light);
    c.infractions.route_deviation =
        i.value("route_deviation", c.infractions.route_deviation);
    c.infractions.blocked = i.value("blocked", c.infractions.blocked);
  }
  if (j.contains("behavior")) {
    const auto& b = j["behavior"];
    c.behavior.stop_engage_distance =
        b.value("stop_engage_distance", c.behavior.stop_engage_distance);
    c.behavior.follow_engage_distance =
        b.value("follow_engage_distance", c.behavior.follow_engage_distance);
    c.behavior.stop_line_margin =
        b.value("stop_line_margin", c.behavior.stop_line_margin);
    c.behavior.stop_sign_window =
        b.value("stop_sign_window", c.behavior.stop_sign_window);
    c.behavior.standstill_speed =
        b.value("standstill_speed", c.behavior.standstill_speed);
    c.behavior.lane_half_width =
        b.value("lane_half_width", c.behavior.lane_half_width);
  }
  if (j.contains("fan")) {
    const auto& f = j["fan"];
    if (f.contains("lateral_start")) {
      c.fan.lateral_start = parse_state(f["lateral_start"]);
    }
    if (f.contains("velocity_start")) {
      c.fan.velocity_start = parse_state(f["velocity_start"]);
    }
    c.fan.target_speed = f.value("target_speed", c.fan.target_speed);
    c.fan.sample_dt = f.value("sample_dt", c.fan.sample_dt);
  }
  c.pedestrian_radius = j.value("pedestrian_radius", c.pedestrian_radius);
  c.goal_radius = j.value("goal_radius", c.goal_radius);
  c.route_corridor = j.value("route_corridor", c.route_corridor);
  c.blocked_after = j.value("blocked_after", c.blocked_after);
  c.event_window = j.value("event_window", c.event_window);
  c.reference_ds = j.value("reference_ds", c.reference_ds);
  c.reference_extension =
      j.value("reference_extension", c.reference_extension);
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("config: " + path + ": " + e.what());
  }
  return load_config(j);
}

json config_to_json(const RunConfig& c) {
  json j;
  j["weights"] = {{"jerk", c.weights.jerk},
                  {"time", c.weights.time},
                  {"deviation", c.weights.deviation},
                  {"lateral", c.weights.lateral},
                  {"longitudinal", c.weights.longitudinal}};
  j["grid"] = {{"lateral_step", c.grid.lateral_step},
               {"lateral_count", c.grid.lateral_count},
               {"time_step", c.grid.time_step},
               {"min_horizon", c.grid.min_horizon},
               {"max_horizon", c.grid.max_horizon},
               {"speed_step", c.grid.speed_step},
               {"speed_count", c.grid.speed_count},
               {"stop_step", c.grid.stop_step},
               {"stop_count", c.grid.stop_count}};
  j["limits"] = {{"max_jerk", c.limits.max_jerk},
                 {"max_accel", c.limits.max_accel},
                 {"max_speed", c.limits.max_speed},
                 {"max_curvature", c.limits.max_curvature}};
  j["ego"] = {{"width", c.ego_dims.width}, {"length", c.ego_dims.length}};
  j["replan_interval"] = c.replan_interval;
  j["sim_dt"] = c.sim_dt;
  j["trajectory_dt"] = c.trajectory_dt;
  j["safe_distance"] = c.safe_distance;
  j["time_gap"] = c.time_gap;
  j["prediction"] = {{"graph_ds", c.prediction.graph_ds},
                     {"path_tol", c.prediction.path_tol},
                     {"horizon", c.prediction.horizon},
                     {"dt", c.prediction.dt},
                     {"lookahead_gain", c.prediction.lookahead_gain},
                     {"lookahead_min", c.prediction.lookahead_min},
                     {"lookahead_max", c.prediction.lookahead_max},
                     {"speed_cap", c.prediction.speed_cap},
                     {"graph_attach_radius", c.prediction.graph_attach_radius}};
  j["infractions"] = {
      {"collision_pedestrian", c.infractions.collision_pedestrian},
      {"collision_vehicle", c.infractions.collision_vehicle},
      {"collision_layout", c.infractions.collision_layout},
      {"red_light", c.infractions.red_light},
      {"route_deviation", c.infractions.route_deviation},
      {"blocked", c.infractions.blocked}};
  j["pedestrian_radius"] = c.pedestrian_radius;
  j["goal_radius"] = c.goal_radius;
  j["route_corridor"] = c.route_corridor;
  j["blocked_after"] = c.blocked_after;
  j["event_window"] = c.event_window;
  j["reference_ds"] = c.reference_ds;
  j["reference_extension"] = c.reference_extension;
  return j;
}

}  // namespace strada
