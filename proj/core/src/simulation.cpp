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

#include "strada/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "strada/localization.hpp"
#include "strada/prediction.hpp"

namespace strada {

namespace {

const char* mode_name(DriveMode mode) {
  switch (mode) {
    case DriveMode::kStopping:
      return "stopping";
    case DriveMode::kFollowing:
      return "following";
    case DriveMode::kMerging:
      return "merging";
    case DriveMode::kVelocityKeeping:
      return "velocity_keeping";
  }
  return "unknown";
}

// Longitudinal state of a predicted agent at horizon T, projected onto the
// route reference and shifted along it by `anchor_shift`.
LonPredictor make_lon_predictor(const PredictedTrajectory* prediction,
                                const ReferenceLine* ref,
                                double anchor_shift) {
  return [prediction, ref, anchor_shift](double horizon) {
    const PredictedPoint p = prediction->sample_at(horizon);
    const FrenetState f = ref->to_frenet({p.x, p.y, p.theta, p.v, 0.0});
    const double delta = 0.2;
    const PredictedPoint q =
        prediction->sample_at(std::max(0.0, horizon - delta));
    const FrenetState g = ref->to_frenet({q.x, q.y, q.theta, q.v, 0.0});
    const double accel = (f.s_dot - g.s_dot) / delta;
    return LonState{f.s + anchor_shift, f.s_dot, accel};
  };
}

struct ModeDecision {
  DriveMode mode = DriveMode::kVelocityKeeping;
  ModeInputs inputs;
};

// Minimal rule ladder: an active merge zone wins, then a red/yellow light
// or an unsatisfied stop sign in range, then a lead vehicle in the ego
// lane, and velocity keeping otherwise.
ModeDecision choose_mode(const World& world, const Perception& perception,
                         std::span<const ObstacleTrack> tracks,
                         const FrenetState& ego, const RunConfig& config) {
  ModeDecision out;
  const double front_s = ego.s + 0.5 * config.ego_dims.length;
  const ReferenceLine& ref = world.route_reference();

  const auto track_for = [&](int obstacle_id) -> const PredictedTrajectory* {
    for (const ObstacleTrack& t : tracks) {
      if (t.prediction.obstacle_id == obstacle_id) {
        return &t.prediction;
      }
    }
    return nullptr;
  };

  if (world.scenario().merge) {
    const MergeZone& zone = *world.scenario().merge;
    if (ego.s >= zone.begin_s && ego.s <= zone.end_s) {
      const PredictedTrajectory* lead = track_for(zone.lead_id);
      const PredictedTrajectory* follow = track_for(zone.follow_id);
      if (lead && follow) {
        out.mode = DriveMode::kMerging;
        out.inputs.lead = make_lon_predictor(lead, &ref, 0.0);
        out.inputs.follower = make_lon_predictor(follow, &ref, 0.0);
        out.inputs.vehicle_length = config.ego_dims.length;
        return out;
      }
    }
  }

  const TrafficControlObservation* stop_target = nullptr;
  for (const TrafficControlObservation& c : perception.controls) {
    const bool demands_stop =
        c.signal == TrafficControlObservation::Signal::kRed ||
        c.signal == TrafficControlObservation::Signal::kYellow ||
        (c.signal == TrafficControlObservation::Signal::kStopSign &&
         !c.stop_satisfied);
    if (!demands_stop) {
      continue;
    }
    if (c.stop_line_s < front_s ||
        c.stop_line_s - front_s > config.behavior.stop_engage_distance) {
      continue;
    }
    if (!stop_target || c.stop_line_s < stop_target->stop_line_s) {
      stop_target = &c;
    }
  }
  if (stop_target) {
    out.mode = DriveMode::kStopping;
    out.inputs.stop_position = stop_target->stop_line_s -
                               0.5 * config.ego_dims.length -
                               config.behavior.stop_line_margin;
    return out;
  }

  const ObstacleState* lead = nullptr;
  double lead_s = 0.0;
  double lead_half_length = 0.0;
  for (const ObstacleState& obs : perception.obstacles) {
    if (obs.kind != ObstacleKind::kVehicle) {
      continue;
    }
    FrenetState f;
    try {
      f = ref.to_frenet({obs.x, obs.y, obs.yaw, obs.v, obs.a});
    } catch (const std::out_of_range&) {
      continue;  // far off the route corridor
    }
    if (std::abs(f.d) > config.behavior.lane_half_width) {
      continue;  // not in the ego lane
    }
    const double gap = f.s - ego.s;
    if (gap <= 0.0 || gap > config.behavior.follow_engage_distance) {
      continue;
    }
    if (!lead || f.s < lead_s) {
      lead = &obs;
      lead_s = f.s;
      lead_half_length = 0.5 * obs.length;
    }
  }
  if (lead) {
    const PredictedTrajectory* prediction = track_for(lead->id);
    if (prediction) {
      out.mode = DriveMode::kFollowing;
      // Anchoring at the lead's rear bumper minus the ego half length makes
      // the configured safe distance a bumper-to-bumper gap.
      out.inputs.lead = make_lon_predictor(
          prediction, &ref,
          -(lead_half_length + 0.5 * config.ego_dims.length));
      return out;
    }
  }

  out.mode = DriveMode::kVelocityKeeping;
  out.inputs.target_speed = world.scenario().speed_limit;
  return out;
}

}  // namespace

RunResult run_scenario(const Scenario& scenario, const RunConfig& config,
                       std::uint64_t seed, const TickObserver& observer) {
  World world(scenario, config);
  std::mt19937_64 rng(seed);

  const RunConfig& effective = config;
  const PlannerConfig planner_config = effective.planner_config();

  const RoadGraph graph =
      build_dense_graph(scenario.map, config.prediction.graph_ds);

  Localizer localizer(config.localization);
  localizer.reset(world.ego().pose, world.ego().v, world.ego().a);

  const ReferenceLine& ref = world.route_reference();
  RunResult result;

  const auto sim_steps_per_tick = std::max<int>(
      1, static_cast<int>(std::llround(config.replan_interval / config.sim_dt)));
  const double sim_dt = config.replan_interval / sim_steps_per_tick;

  Termination termination = Termination::kTimeout;
  bool first_tick = true;

  while (true) {
    if (world.forced_termination()) {
      termination = *world.forced_termination();
      break;
    }
    if (world.goal_reached()) {
      termination = Termination::kGoal;
      break;
    }
    if (world.time() >= scenario.time_limit) {
      termination = Termination::kTimeout;
      break;
    }

    // Sense and localize.
    const NavSignals nav = world.sample_nav_signals(rng);
    if (first_tick) {
      first_tick = false;
    } else {
      localizer.step(nav, config.replan_interval);
    }
    const EgoEstimate& estimate = localizer.estimate();

    const Perception perception = world.perceive(rng);

    // Predict the perceived agents.
    std::vector<ObstacleTrack> tracks;
    {
      auto predictions =
          predict_all(perception.obstacles, graph, config.prediction);
      tracks.reserve(predictions.size());
      for (PredictedTrajectory& p : predictions) {
        const ObstacleState* src = nullptr;
        for (const ObstacleState& o : perception.obstacles) {
          if (o.id == p.obstacle_id) {
            src = &o;
            break;
          }
        }
        ObstacleTrack track;
        track.prediction = std::move(p);
        if (src) {
          track.kind = src->kind;
          track.width = src->width;
          track.length = src->length;
        }
        track.pedestrian_radius = config.pedestrian_radius;
        tracks.push_back(std::move(track));
      }
    }

    // Plan from the filtered state.
    FrenetState ego_f;
    try {
      ego_f = estimate_to_frenet(estimate, ref);
    } catch (const std::out_of_range&) {
      ego_f = ref.to_frenet({world.ego().pose.x, world.ego().pose.y,
                             world.ego().pose.heading, world.ego().v,
                             world.ego().a});
    }

    ModeDecision decision =
        choose_mode(world, perception, tracks, ego_f, effective);

    int n_candidates = 0;
    int n_feasible = 0;
    std::optional<Trajectory> plan;
    DriveMode planned_mode = decision.mode;

    const auto try_plan = [&](DriveMode mode, const ModeInputs& inputs) {
      return plan_tick(ego_f, mode, inputs, ref, tracks, effective.ego_dims,
                       planner_config, &n_candidates, &n_feasible);
    };

    bool stopping_possible = true;
    if (decision.mode == DriveMode::kStopping &&
        decision.inputs.stop_position <= ego_f.s) {
      stopping_possible = false;  // past the target: brake, do not replan
    }
    if (stopping_possible) {
      plan = try_plan(decision.mode, decision.inputs);
    }
    if (!plan && (decision.mode == DriveMode::kFollowing ||
                  decision.mode == DriveMode::kMerging)) {
      // The aggressive mode has no feasible candidate; fall back to a
      // collision-checked cruise before resorting to hard braking.
      ModeInputs cruise;
      cruise.target_speed = scenario.speed_limit;
      planned_mode = DriveMode::kVelocityKeeping;
      plan = try_plan(DriveMode::kVelocityKeeping, cruise);
    }

    TickLog row;
    row.t = world.time();
    row.x = world.ego().pose.x;
    row.y = world.ego().pose.y;
    row.theta = world.ego().pose.heading;
    row.v = world.ego().v;
    row.a = world.ego().a;
    row.s = world.ego().route_s;
    row.d = world.ego().route_d;
    row.n_candidates = n_candidates;
    row.n_collision_free = n_feasible;

    if (observer) {
      TickInfo info;
      info.t = world.time();
      info.requested_mode = decision.mode;
      info.emergency = !plan.has_value();
      info.selected = plan ? &*plan : nullptr;
      info.tracks = tracks;
      info.world = &world;
      observer(info);
    }

    if (plan) {
      row.selected_cost = plan->cost;
      row.mode = mode_name(planned_mode);
      world.command_trajectory(std::move(*plan));
    } else {
      row.selected_cost = -1.0;
      row.mode = "emergency";
      world.command_emergency_stop();
    }
    result.log.push_back(std::move(row));

    for (int k = 0; k < sim_steps_per_tick; ++k) {
      world.step(sim_dt);
      if (world.forced_termination()) {
        break;
      }
    }
  }

  std::vector<InfractionEvent> events(world.events().begin(),
                                      world.events().end());
  result.metrics =
      compute_metrics(world.route_length(), world.distance_completed(), events,
                      termination, config.infractions);
  result.duration = world.time();
  result.final_speed = world.ego().v;
  result.final_frenet = ref.to_frenet({world.ego().pose.x, world.ego().pose.y,
                                       world.ego().pose.heading, world.ego().v,
                                       world.ego().a});
  result.final_obstacles = world.obstacle_truths();
  return result;
}

std::string trajectory_log_csv(std::span<const TickLog> log) {
  std::string out =
      "t,x,y,theta,v,a,s,d,selected_cost,n_candidates,n_collision_free,mode\n";
  char line[320];
  for (const TickLog& row : log) {
    std::snprintf(line, sizeof(line),
                  "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%d,%d,%s\n",
                  row.t, row.x, row.y, row.theta, row.v, row.a, row.s, row.d,
                  row.selected_cost, row.n_candidates, row.n_collision_free,
                  row.mode.c_str());
    out += line;
  }
  return out;
}

}  // namespace strada
