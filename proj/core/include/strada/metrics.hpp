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

#ifndef STRADA_METRICS_HPP_
#define STRADA_METRICS_HPP_

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "strada/config.hpp"
#include "strada/geometry.hpp"

namespace strada {

enum class InfractionType {
  kCollisionPedestrian,
  kCollisionVehicle,
  kCollisionLayout,
  kRedLight,
  kRouteDeviation,
  kBlocked,
};

std::string to_string(InfractionType type);

struct InfractionEvent {
  InfractionType type;
  double time = 0.0;
  Vec2 position;
  int counterpart = -1;  // obstacle or control id, -1 when not applicable
};

enum class Termination { kGoal, kCollisionStop, kBlocked, kTimeout };

std::string to_string(Termination termination);

/// Per-route scoring output: completion percentage, multiplicative penalty
/// in [0, 1], and their product as the driving score.
struct MetricsReport {
  double route_completion = 0.0;   // percent
  double infraction_penalty = 1.0;
  double driving_score = 0.0;      // percent
  std::vector<InfractionEvent> infraction_events;
  Termination termination = Termination::kTimeout;
};

double coefficient_for(const InfractionCoefficients& coefficients,
                       InfractionType type);

/// Applies the scoring identities: completion = 100 * completed / total,
/// penalty = product of per-event coefficients clamped to [0, 1], score =
/// completion * penalty.
MetricsReport compute_metrics(double route_length, double distance_completed,
                              std::span<const InfractionEvent> events,
                              Termination termination,
                              const InfractionCoefficients& coefficients);

nlohmann::json metrics_to_json(const MetricsReport& report);

/// Mean-of-routes aggregate plus per-kilometer infraction rates, matching a
/// leaderboard-style summary table.
struct SuiteAggregate {
  double mean_driving_score = 0.0;
  double mean_route_completion = 0.0;
  double mean_infraction_penalty = 0.0;
  double total_km = 0.0;
  std::vector<std::pair<std::string, double>> infractions_per_km;
};

SuiteAggregate aggregate_metrics(std::span<const MetricsReport> reports,
                                 std::span<const double> distances_m);

nlohmann::json aggregate_to_json(const SuiteAggregate& aggregate);

}  // namespace strada

#endif  // STRADA_METRICS_HPP_
