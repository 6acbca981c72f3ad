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

#include "strada/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strada {

namespace {

// Interpolated point and tangent heading of a polyline at arc length d.
Pose2 polyline_pose(const std::vector<Vec2>& pts,
                    const std::vector<double>& cum, double d) {
  if (pts.size() == 1) {
    return {pts[0].x, pts[0].y, 0.0};
  }
  const double dist = std::clamp(d, 0.0, cum.back());
  std::size_t i = 0;
  while (i + 2 < pts.size() && cum[i + 1] < dist) {
    ++i;
  }
  const double seg = cum[i + 1] - cum[i];
  const double w = seg > 1e-12 ? (dist - cum[i]) / seg : 0.0;
  const Vec2 p = pts[i] + (pts[i + 1] - pts[i]) * w;
  const Vec2 dir = pts[i + 1] - pts[i];
  return {p.x, p.y, std::atan2(dir.y, dir.x)};
}

std::vector<double> cumulative_lengths(const std::vector<Vec2>& pts) {
  std::vector<double> cum(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    cum[i] = cum[i - 1] + (pts[i] - pts[i - 1]).norm();
  }
  return cum;
}

}  // namespace

World::World(Scenario scenario, const RunConfig& config)
    : scenario_(std::move(scenario)), config_(config) {
  // Route reference: concatenated road centerlines, extended straight past
  // the goal so planning near the route end stays inside the corridor.
  std::vector<Vec2> waypoints;
  for (const int road_id : scenario_.map.route.roads) {
    const Road& road = scenario_.map.road_by_id(road_id);
    for (const Vec2& wp : road.waypoints) {
      if (!waypoints.empty() && (wp - waypoints.back()).norm() < 1e-9) {
        continue;  // shared junction point
      }
      waypoints.push_back(wp);
    }
  }
  if (waypoints.size() < 2) {
    throw std::runtime_error("route spans fewer than two distinct waypoints");
  }
  const Vec2 tail_dir = waypoints.back() - waypoints[waypoints.size() - 2];
  const double tail_norm = tail_dir.norm();
  if (config_.reference_extension > 0.0 && tail_norm > 1e-9) {
    waypoints.push_back(waypoints.back() +
                        tail_dir * (config_.reference_extension / tail_norm));
  }
  route_ref_.emplace(build_reference(waypoints, config_.reference_ds));

  goal_s_ = route_ref_->to_frenet({scenario_.map.route.goal.x,
                                   scenario_.map.route.goal.y, 0.0, 0.0, 0.0})
                .s;

  ego_.pose = scenario_.map.route.start;
  const FrenetState start_f = route_ref_->to_frenet(
      {ego_.pose.x, ego_.pose.y, ego_.pose.heading, 0.0, 0.0});
  ego_.route_s = start_f.s;
  ego_.route_d = start_f.d;
  completed_s_ = std::clamp(start_f.s, 0.0, goal_s_);

  for (std::size_t i = 0; i < scenario_.obstacles.size(); ++i) {
    ObstacleRuntime rt;
    rt.script_index = i;
    rt.cumulative = cumulative_lengths(scenario_.obstacles[i].path);
    obstacles_.push_back(std::move(rt));
  }

  for (std::size_t i = 0; i < scenario_.map.traffic_controls.size(); ++i) {
    const TrafficControl& tc = scenario_.map.traffic_controls[i];
    ControlRuntime rt;
    rt.control_index = i;
    const Road& road = scenario_.map.road_by_id(tc.road_id);
    const auto cum = cumulative_lengths(road.waypoints);
    const Pose2 line_pose = polyline_pose(road.waypoints, cum, tc.s);
    rt.position = line_pose.position();
    rt.on_route =
        std::find(scenario_.map.route.roads.begin(),
                  scenario_.map.route.roads.end(),
                  tc.road_id) != scenario_.map.route.roads.end();
    if (rt.on_route) {
      rt.route_s = route_ref_->to_frenet({rt.position.x, rt.position.y,
                                          line_pose.heading, 0.0, 0.0})
                       .s;
    }
    rt.prev_front_s = ego_.route_s + 0.5 * config_.ego_dims.length;
    controls_.push_back(rt);
  }
}

void World::command_trajectory(Trajectory trajectory) {
  command_ = CommandKind::kTrack;
  command_traj_ = std::move(trajectory);
  command_time_ = time_;
}

void World::command_emergency_stop() {
  command_ = CommandKind::kEmergencyStop;
  command_traj_.reset();
  command_time_ = time_;
  command_pose_ = ego_.pose;
  command_speed_ = ego_.v;
}

bool World::obstacle_active(const ObstacleRuntime& o) const {
  return time_ >= scenario_.obstacles[o.script_index].spawn_time;
}

Pose2 World::obstacle_pose(const ObstacleRuntime& o) const {
  const ObstacleScript& script = scenario_.obstacles[o.script_index];
  return polyline_pose(script.path, o.cumulative, o.traveled);
}

double World::obstacle_speed(const ObstacleRuntime& o) const {
  const ObstacleScript& script = scenario_.obstacles[o.script_index];
  if (script.kind == ObstacleKind::kBarrier || !obstacle_active(o)) {
    return 0.0;
  }
  return script.speed_at(time_ - script.spawn_time);
}

double World::obstacle_accel(const ObstacleRuntime& o) const {
  const ObstacleScript& script = scenario_.obstacles[o.script_index];
  if (script.kind == ObstacleKind::kBarrier || !obstacle_active(o)) {
    return 0.0;
  }
  const double t = time_ - script.spawn_time;
  const double h = 0.25;
  return (script.speed_at(t + h) - script.speed_at(std::max(0.0, t - h))) /
         (h + std::min(t, h));
}

void World::step(double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("simulation step must be positive");
  }

  // Scripted agents advance first (explicit Euler on the speed profile).
  for (ObstacleRuntime& o : obstacles_) {
    if (!obstacle_active(o)) {
      continue;
    }
    o.traveled += obstacle_speed(o) * dt;
  }

  time_ += dt;

  switch (command_) {
    case CommandKind::kHold:
      ego_.v = 0.0;
      ego_.a = 0.0;
      ego_.yaw_rate = 0.0;
      break;
    case CommandKind::kTrack: {
      const TrajectoryPoint p = command_traj_->sample_at(time_ - command_time_);
      ego_.pose = {p.x, p.y, p.theta};
      ego_.v = p.v;
      ego_.a = p.a;
      ego_.yaw_rate = p.v * p.kappa;
      break;
    }
    case CommandKind::kEmergencyStop: {
      const double decel = config_.limits.max_accel;
      const double tau = time_ - command_time_;
      const double t_stop = command_speed_ / decel;
      const double t_eff = std::min(tau, t_stop);
      const double dist =
          command_speed_ * t_eff - 0.5 * decel * t_eff * t_eff;
      ego_.pose = {
          command_pose_.x + dist * std::cos(command_pose_.heading),
          command_pose_.y + dist * std::sin(command_pose_.heading),
          command_pose_.heading};
      ego_.v = std::max(0.0, command_speed_ - decel * tau);
      ego_.a = ego_.v > 0.0 ? -decel : 0.0;
      ego_.yaw_rate = 0.0;
      break;
    }
  }

  const FrenetState f = route_ref_->to_frenet(
      {ego_.pose.x, ego_.pose.y, ego_.pose.heading, ego_.v, ego_.a});
  ego_.route_s = f.s;
  ego_.route_d = f.d;
  completed_s_ = std::max(completed_s_, std::clamp(f.s, 0.0, goal_s_));

  detect_infractions();
}

void World::push_event(InfractionType type, int counterpart) {
  const auto key = std::make_pair(static_cast<int>(type), counterpart);
  for (auto& [k, last] : recent_events_) {
    if (k == key) {
      if (time_ - last < config_.event_window) {
        return;  // duplicate within the window
      }
      last = time_;
      events_.push_back(
          {type, time_, {ego_.pose.x, ego_.pose.y}, counterpart});
      return;
    }
  }
  recent_events_.push_back({key, time_});
  events_.push_back({type, time_, {ego_.pose.x, ego_.pose.y}, counterpart});
}

void World::detect_infractions() {
  const OrientedBox ego_box{ego_.pose, config_.ego_dims.length,
                            config_.ego_dims.width};

  // Exact footprint collisions, typed by the true obstacle class.
  for (const ObstacleRuntime& o : obstacles_) {
    if (!obstacle_active(o)) {
      continue;
    }
    const ObstacleScript& script = scenario_.obstacles[o.script_index];
    const OrientedBox box{obstacle_pose(o), script.length, script.width};
    if (boxes_overlap(ego_box, box)) {
      InfractionType type = InfractionType::kCollisionVehicle;
      if (script.kind == ObstacleKind::kPedestrian) {
        type = InfractionType::kCollisionPedestrian;
      } else if (script.kind == ObstacleKind::kBarrier) {
        type = InfractionType::kCollisionLayout;
      }
      push_event(type, script.id);
      forced_termination_ = Termination::kCollisionStop;
    }
  }

  // Stop-line logic: red-light crossings and the stop-sign handshake.
  const double front_s = ego_.route_s + 0.5 * config_.ego_dims.length;
  for (ControlRuntime& c : controls_) {
    if (!c.on_route) {
      continue;
    }
    const TrafficControl& tc = scenario_.map.traffic_controls[c.control_index];
    if (tc.kind == ControlKind::kLight) {
      if (c.prev_front_s < c.route_s && front_s >= c.route_s &&
          tc.state_at(time_) == LightState::kRed) {
        push_event(InfractionType::kRedLight, tc.id);
      }
    } else if (!c.stop_satisfied &&
               ego_.v < config_.behavior.standstill_speed &&
               front_s >= c.route_s - config_.behavior.stop_sign_window &&
               front_s <= c.route_s) {
      c.stop_satisfied = true;
    }
    c.prev_front_s = front_s;
  }

  if (std::abs(ego_.route_d) > config_.route_corridor) {
    push_event(InfractionType::kRouteDeviation, -1);
  }

  // Agent blocked: continuous standstill beyond the configured interval.
  if (ego_.v < config_.behavior.standstill_speed) {
    if (!standstill_since_) {
      standstill_since_ = time_;
    }
    if (!blocked_reported_ &&
        time_ - *standstill_since_ >= config_.blocked_after) {
      blocked_reported_ = true;
      push_event(InfractionType::kBlocked, -1);
      forced_termination_ = Termination::kBlocked;
    }
  } else {
    standstill_since_.reset();
  }
}

std::vector<ObstacleState> World::obstacle_truths() const {
  std::vector<ObstacleState> out;
  for (const ObstacleRuntime& o : obstacles_) {
    if (!obstacle_active(o)) {
      continue;
    }
    const ObstacleScript& script = scenario_.obstacles[o.script_index];
    const Pose2 pose = obstacle_pose(o);
    out.push_back(ObstacleState{
        .id = script.id,
        .kind = script.kind,
        .x = pose.x,
        .y = pose.y,
        .yaw = pose.heading,
        .v = obstacle_speed(o),
        .a = obstacle_accel(o),
        .width = script.width,
        .length = script.length,
    });
  }
  return out;
}

Perception World::perceive(std::mt19937_64& rng) const {
  Perception out;
  std::normal_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const SensingConfig& sensing = scenario_.sensing;

  for (ObstacleState obs : obstacle_truths()) {
    const double range =
        std::hypot(obs.x - ego_.pose.x, obs.y - ego_.pose.y);
    if (range > sensing.obstacle_radius) {
      continue;
    }
    if (sensing.dropout > 0.0 && uniform(rng) < sensing.dropout) {
      continue;
    }
    if (sensing.position_sigma > 0.0) {
      obs.x += unit(rng) * sensing.position_sigma;
      obs.y += unit(rng) * sensing.position_sigma;
    }
    if (sensing.velocity_sigma > 0.0) {
      obs.v = std::max(0.0, obs.v + unit(rng) * sensing.velocity_sigma);
    }
    // Barriers are sensed as stationary vehicles; their true class only
    // matters to infraction scoring.
    if (obs.kind == ObstacleKind::kBarrier) {
      obs.kind = ObstacleKind::kVehicle;
    }
    out.obstacles.push_back(obs);
  }

  const double front_s = ego_.route_s + 0.5 * config_.ego_dims.length;
  for (const ControlRuntime& c : controls_) {
    if (!c.on_route) {
      continue;
    }
    const double ahead = c.route_s - front_s;
    if (ahead < 0.0 || ahead > sensing.control_range) {
      continue;
    }
    const TrafficControl& tc = scenario_.map.traffic_controls[c.control_index];
    TrafficControlObservation obs;
    obs.control_id = tc.id;
    obs.stop_line_s = c.route_s;
    obs.relative_position = ego_.pose.inverse_transform(c.position);
    obs.stop_satisfied = c.stop_satisfied;
    if (tc.kind == ControlKind::kStopSign) {
      obs.signal = TrafficControlObservation::Signal::kStopSign;
    } else {
      switch (tc.state_at(time_)) {
        case LightState::kGreen:
          obs.signal = TrafficControlObservation::Signal::kGreen;
          break;
        case LightState::kYellow:
          obs.signal = TrafficControlObservation::Signal::kYellow;
          break;
        case LightState::kRed:
          obs.signal = TrafficControlObservation::Signal::kRed;
          break;
      }
    }
    out.controls.push_back(obs);
  }
  return out;
}

NavSignals World::sample_nav_signals(std::mt19937_64& rng) const {
  std::normal_distribution<double> unit(0.0, 1.0);
  const LocalizerConfig& loc = config_.localization;

  Vec2 fix = {ego_.pose.x, ego_.pose.y};
  if (loc.gnss_sigma > 0.0) {
    fix.x += unit(rng) * loc.gnss_sigma;
    fix.y += unit(rng) * loc.gnss_sigma;
  }
  const auto [lat, lon] = loc.projection.to_geodetic(fix);

  NavSignals out;
  out.latitude = lat;
  out.longitude = lon;
  out.altitude = unit(rng) * loc.imu_sigma;
  out.angular_velocity_x = unit(rng) * loc.imu_sigma;
  out.angular_velocity_y = unit(rng) * loc.imu_sigma;
  out.angular_velocity_z = ego_.yaw_rate + unit(rng) * loc.imu_sigma;
  out.linear_accel_x = ego_.a + unit(rng) * loc.imu_sigma;
  out.linear_accel_y = unit(rng) * loc.imu_sigma;
  out.linear_accel_z = unit(rng) * loc.imu_sigma;
  out.compass_yaw =
      wrap_angle(ego_.pose.heading + unit(rng) * loc.compass_sigma);
  return out;
}

bool World::goal_reached() const {
  if (ego_.route_s >= goal_s_ - 1e-6) {
    return true;
  }
  const double gap = std::hypot(ego_.pose.x - scenario_.map.route.goal.x,
                                ego_.pose.y - scenario_.map.route.goal.y);
  return gap <= config_.goal_radius;
}

}  // namespace strada
