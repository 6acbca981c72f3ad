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

#include "strada/map.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace strada {

using nlohmann::json;

LightState TrafficControl::state_at(double t) const {
  const double cycle = phases.green + phases.yellow + phases.red;
  double tau = std::fmod(t + phases.offset, cycle);
  if (tau < 0.0) {
    tau += cycle;
  }
  if (tau < phases.green) {
    return LightState::kGreen;
  }
  if (tau < phases.green + phases.yellow) {
    return LightState::kYellow;
  }
  return LightState::kRed;
}

const Road& WorldMap::road_by_id(int id) const {
  for (const Road& r : roads) {
    if (r.id == id) {
      return r;
    }
  }
  throw std::runtime_error("unknown road id " + std::to_string(id));
}

bool WorldMap::has_road(int id) const {
  for (const Road& r : roads) {
    if (r.id == id) {
      return true;
    }
  }
  return false;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error("map: " + where + ": " + what);
}

std::vector<Vec2> parse_points(const json& j, const std::string& where) {
  if (!j.is_array()) {
    fail(where, "expected an array of [x, y] pairs");
  }
  std::vector<Vec2> out;
  out.reserve(j.size());
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) {
      fail(where, "each point must be [x, y]");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

double road_polyline_length(const Road& road) {
  double len = 0.0;
  for (std::size_t i = 1; i < road.waypoints.size(); ++i) {
    len += (road.waypoints[i] - road.waypoints[i - 1]).norm();
  }
  return len;
}

}  // namespace

WorldMap load_map(const json& j) {
  WorldMap map;
  if (!j.contains("roads") || !j["roads"].is_array() || j["roads"].empty()) {
    fail("roads", "missing or empty");
  }
  for (const auto& jr : j["roads"]) {
    Road road;
    road.id = jr.at("id").get<int>();
    road.waypoints = parse_points(jr.at("waypoints"),
                                  "roads[" + std::to_string(road.id) + "].waypoints");
    if (road.waypoints.size() < 2) {
      fail("roads[" + std::to_string(road.id) + "]", "needs >= 2 waypoints");
    }
    road.lane_width = jr.value("lane_width", 3.5);
    if (road.lane_width <= 0.0) {
      fail("roads[" + std::to_string(road.id) + "].lane_width", "must be > 0");
    }
    if (jr.contains("successors")) {
      for (const auto& s : jr["successors"]) {
        road.successors.push_back(s.get<int>());
      }
    }
    map.roads.push_back(std::move(road));
  }

  for (const Road& road : map.roads) {
    for (int succ : road.successors) {
      if (!map.has_road(succ)) {
        fail("roads[" + std::to_string(road.id) + "].successors",
             "unknown road id " + std::to_string(succ));
      }
    }
  }

  if (j.contains("traffic_controls")) {
    for (const auto& jc : j["traffic_controls"]) {
      TrafficControl tc;
      tc.id = jc.at("id").get<int>();
      const std::string kind = jc.at("kind").get<std::string>();
      if (kind == "light") {
        tc.kind = ControlKind::kLight;
      } else if (kind == "stop_sign") {
        tc.kind = ControlKind::kStopSign;
      } else {
        fail("traffic_controls[" + std::to_string(tc.id) + "].kind",
             "must be 'light' or 'stop_sign'");
      }
      tc.road_id = jc.at("road_id").get<int>();
      if (!map.has_road(tc.road_id)) {
        fail("traffic_controls[" + std::to_string(tc.id) + "].road_id",
             "unknown road id " + std::to_string(tc.road_id));
      }
      tc.s = jc.at("s").get<double>();
      const double road_len = road_polyline_length(map.road_by_id(tc.road_id));
      if (tc.s < 0.0 || tc.s > road_len + 1e-6) {
        fail("traffic_controls[" + std::to_string(tc.id) + "].s",
             "stop line lies outside its road");
      }
      if (jc.contains("phases")) {
        const auto& jp = jc["phases"];
        tc.phases.green = jp.value("green", tc.phases.green);
        tc.phases.yellow = jp.value("yellow", tc.phases.yellow);
        tc.phases.red = jp.value("red", tc.phases.red);
        tc.phases.offset = jp.value("offset", 0.0);
      }
      if (tc.kind == ControlKind::kLight &&
          (tc.phases.green <= 0.0 || tc.phases.yellow <= 0.0 ||
           tc.phases.red <= 0.0)) {
        fail("traffic_controls[" + std::to_string(tc.id) + "].phases",
             "phase durations must be > 0");
      }
      map.traffic_controls.push_back(tc);
    }
  }

  const auto& jroute = j.at("route");
  for (const auto& r : jroute.at("roads")) {
    const int id = r.get<int>();
    if (!map.has_road(id)) {
      fail("route.roads", "unknown road id " + std::to_string(id));
    }
    map.route.roads.push_back(id);
  }
  if (map.route.roads.empty()) {
    fail("route.roads", "must list at least one road");
  }
  const auto& js = jroute.at("start");
  map.route.start = {js.at("x").get<double>(), js.at("y").get<double>(),
                     js.value("yaw", 0.0)};
  const auto& jg = jroute.at("goal");
  map.route.goal = {jg.at("x").get<double>(), jg.at("y").get<double>()};
  return map;
}

WorldMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("map: cannot open " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("map: " + path + ": " + e.what());
  }
  return load_map(j);
}

}  // namespace strada
