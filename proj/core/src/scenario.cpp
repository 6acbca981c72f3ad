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

#include "strada/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace strada {

using nlohmann::json;

double ObstacleScript::speed_at(double t) const {
  if (speed_profile.empty()) {
    return 0.0;
  }
  if (t <= speed_profile.front().first) {
    return speed_profile.front().second;
  }
  if (t >= speed_profile.back().first) {
    return speed_profile.back().second;
  }
  for (std::size_t i = 1; i < speed_profile.size(); ++i) {
    if (t <= speed_profile[i].first) {
      const auto& [t0, v0] = speed_profile[i - 1];
      const auto& [t1, v1] = speed_profile[i];
      const double w = (t - t0) / (t1 - t0);
      return v0 + w * (v1 - v0);
    }
  }
  return speed_profile.back().second;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error("scenario: " + where + ": " + what);
}

ObstacleKind parse_kind(const std::string& kind, const std::string& where) {
  if (kind == "vehicle") return ObstacleKind::kVehicle;
  if (kind == "pedestrian") return ObstacleKind::kPedestrian;
  if (kind == "barrier") return ObstacleKind::kBarrier;
  fail(where, "kind must be 'vehicle', 'pedestrian' or 'barrier'");
}

}  // namespace

Scenario load_scenario(const json& j, const std::string& base_dir) {
  Scenario sc;

  if (!j.contains("map")) {
    fail("map", "missing");
  }
  if (j["map"].is_string()) {
    const std::filesystem::path p(j["map"].get<std::string>());
    const auto resolved =
        p.is_absolute() ? p : std::filesystem::path(base_dir) / p;
    sc.map = load_map_file(resolved.string());
  } else {
    sc.map = load_map(j["map"]);
  }

  if (j.contains("obstacles")) {
    for (const auto& jo : j["obstacles"]) {
      ObstacleScript ob;
      ob.id = jo.at("id").get<int>();
      const std::string where = "obstacles[" + std::to_string(ob.id) + "]";
      ob.kind = parse_kind(jo.at("kind").get<std::string>(), where + ".kind");
      const auto& dims = jo.at("dims");
      if (!dims.is_array() || dims.size() != 2) {
        fail(where + ".dims", "expected [width, length]");
      }
      ob.width = dims[0].get<double>();
      ob.length = dims[1].get<double>();
      if (ob.width <= 0.0 || ob.length <= 0.0) {
        fail(where + ".dims", "must be positive");
      }
      if (jo.contains("path")) {
        for (const auto& p : jo["path"]) {
          if (!p.is_array() || p.size() != 2) {
            fail(where + ".path", "each point must be [x, y]");
          }
          ob.path.push_back({p[0].get<double>(), p[1].get<double>()});
        }
      }
      if (ob.path.empty()) {
        fail(where + ".path", "needs at least one point");
      }
      if (jo.contains("speed_profile")) {
        double prev_t = -1.0;
        for (const auto& sv : jo["speed_profile"]) {
          if (!sv.is_array() || sv.size() != 2) {
            fail(where + ".speed_profile", "each entry must be [t, v]");
          }
          const double t = sv[0].get<double>();
          const double v = sv[1].get<double>();
          if (t <= prev_t) {
            fail(where + ".speed_profile", "times must be increasing");
          }
          if (v < 0.0) {
            fail(where + ".speed_profile", "speeds must be non-negative");
          }
          ob.speed_profile.emplace_back(t, v);
          prev_t = t;
        }
      }
      ob.spawn_time = jo.value("spawn_time", 0.0);
      sc.obstacles.push_back(std::move(ob));
    }
  }

  if (j.contains("sensing")) {
    const auto& s = j["sensing"];
    sc.sensing.obstacle_radius =
        s.value("obstacle_radius", sc.sensing.obstacle_radius);
    sc.sensing.control_range =
        s.value("control_range", sc.sensing.control_range);
    sc.sensing.position_sigma =
        s.value("position_sigma", sc.sensing.position_sigma);
    sc.sensing.velocity_sigma =
        s.value("velocity_sigma", sc.sensing.velocity_sigma);
    sc.sensing.dropout = s.value("dropout", sc.sensing.dropout);
  }

  sc.time_limit = j.value("time_limit", sc.time_limit);
  sc.speed_limit = j.value("speed_limit", sc.speed_limit);
  if (sc.time_limit <= 0.0) {
    fail("time_limit", "must be positive");
  }

  if (j.contains("merge")) {
    const auto& m = j["merge"];
    MergeZone zone;
    const auto& z = m.at("zone");
    zone.begin_s = z.at(0).get<double>();
    zone.end_s = z.at(1).get<double>();
    zone.lead_id = m.at("lead_id").get<int>();
    zone.follow_id = m.at("follow_id").get<int>();
    sc.merge = zone;
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("scenario: cannot open " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("scenario: " + path + ": " + e.what());
  }
  return load_scenario(j, std::filesystem::path(path).parent_path().string());
}

}  // namespace strada
