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

#include "strada/metrics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace strada {

using nlohmann::json;

std::string to_string(InfractionType type) {
  switch (type) {
    case InfractionType::kCollisionPedestrian:
      return "collision_pedestrian";
    case InfractionType::kCollisionVehicle:
      return "collision_vehicle";
    case InfractionType::kCollisionLayout:
      return "collision_layout";
    case InfractionType::kRedLight:
      return "red_light";
    case InfractionType::kRouteDeviation:
      return "route_deviation";
    case InfractionType::kBlocked:
      return "blocked";
  }
  return "unknown";
}

std::string to_string(Termination termination) {
  switch (termination) {
    case Termination::kGoal:
      return "goal";
    case Termination::kCollisionStop:
      return "collision_stop";
    case Termination::kBlocked:
      return "blocked";
    case Termination::kTimeout:
      return "timeout";
  }
  return "unknown";
}

double coefficient_for(const InfractionCoefficients& c, InfractionType type) {
  switch (type) {
    case InfractionType::kCollisionPedestrian:
      return c.collision_pedestrian;
    case InfractionType::kCollisionVehicle:
      return c.collision_vehicle;
    case InfractionType::kCollisionLayout:
      return c.collision_layout;
    case InfractionType::kRedLight:
      return c.red_light;
    case InfractionType::kRouteDeviation:
      return c.route_deviation;
    case InfractionType::kBlocked:
      return c.blocked;
  }
  return 1.0;
}

MetricsReport compute_metrics(double route_length, double distance_completed,
                              std::span<const InfractionEvent> events,
                              Termination termination,
                              const InfractionCoefficients& coefficients) {
  if (distance_completed > route_length + 1e-6) {
    throw std::invalid_argument("completed distance exceeds the route length");
  }
  MetricsReport report;
  report.termination = termination;
  report.route_completion =
      route_length > 0.0
          ? 100.0 * std::clamp(distance_completed / route_length, 0.0, 1.0)
          : 0.0;
  double penalty = 1.0;
  for (const InfractionEvent& e : events) {
    penalty *= coefficient_for(coefficients, e.type);
    report.infraction_events.push_back(e);
  }
  report.infraction_penalty = std::clamp(penalty, 0.0, 1.0);
  report.driving_score = report.route_completion * report.infraction_penalty;
  return report;
}

json metrics_to_json(const MetricsReport& report) {
  json events = json::array();
  for (const InfractionEvent& e : report.infraction_events) {
    events.push_back({{"type", to_string(e.type)},
                      {"time", e.time},
                      {"position", {e.position.x, e.position.y}},
                      {"counterpart", e.counterpart}});
  }
  return json{{"route_completion", report.route_completion},
              {"infraction_penalty", report.infraction_penalty},
              {"driving_score", report.driving_score},
              {"infraction_events", events},
              {"termination", to_string(report.termination)}};
}

SuiteAggregate aggregate_metrics(std::span<const MetricsReport> reports,
                                 std::span<const double> distances_m) {
  if (reports.empty()) {
    throw std::invalid_argument("cannot aggregate an empty report set");
  }
  SuiteAggregate agg;
  const auto n = static_cast<double>(reports.size());
  std::array<int, 6> counts{};
  double km = 0.0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    agg.mean_driving_score += reports[i].driving_score;
    agg.mean_route_completion += reports[i].route_completion;
    agg.mean_infraction_penalty += reports[i].infraction_penalty;
    for (const InfractionEvent& e : reports[i].infraction_events) {
      ++counts[static_cast<std::size_t>(e.type)];
    }
    if (i < distances_m.size()) {
      km += distances_m[i] / 1000.0;
    }
  }
  agg.mean_driving_score /= n;
  agg.mean_route_completion /= n;
  agg.mean_infraction_penalty /= n;
  agg.total_km = km;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    const double rate = km > 0.0 ? static_cast<double>(counts[t]) / km : 0.0;
    agg.infractions_per_km.emplace_back(
        to_string(static_cast<InfractionType>(t)), rate);
  }
  return agg;
}

json aggregate_to_json(const SuiteAggregate& agg) {
  json per_km = json::object();
  for (const auto& [name, rate] : agg.infractions_per_km) {
    per_km[name] = rate;
  }
  return json{{"mean_driving_score", agg.mean_driving_score},
              {"mean_route_completion", agg.mean_route_completion},
              {"mean_infraction_penalty", agg.mean_infraction_penalty},
              {"total_km", agg.total_km},
              {"infractions_per_km", per_km}};
}

}  // namespace strada
