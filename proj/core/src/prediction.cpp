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

#include "strada/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

namespace strada {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

using IndexPoint = bg::model::point<double, 2, bg::cs::cartesian>;
using IndexValue = std::pair<IndexPoint, int>;

struct RoadGraph::SpatialIndex {
  bgi::rtree<IndexValue, bgi::rstar<16>> tree;
};

RoadGraph::RoadGraph(std::vector<GraphNode> nodes,
                     std::vector<std::vector<GraphEdge>> adjacency)
    : nodes_(std::move(nodes)), adjacency_(std::move(adjacency)) {
  if (nodes_.size() != adjacency_.size()) {
    throw std::invalid_argument("graph adjacency size mismatch");
  }
  for (auto& edges : adjacency_) {
    std::sort(edges.begin(), edges.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return a.to < b.to; });
  }
  std::vector<IndexValue> values;
  values.reserve(nodes_.size());
  for (const GraphNode& n : nodes_) {
    values.emplace_back(IndexPoint(n.x, n.y), n.id);
  }
  index_ = std::make_unique<SpatialIndex>();
  index_->tree = bgi::rtree<IndexValue, bgi::rstar<16>>(values);
}

RoadGraph::~RoadGraph() = default;
RoadGraph::RoadGraph(RoadGraph&&) noexcept = default;
RoadGraph& RoadGraph::operator=(RoadGraph&&) noexcept = default;

std::span<const GraphEdge> RoadGraph::successors(int node_id) const {
  return adjacency_.at(static_cast<std::size_t>(node_id));
}

int RoadGraph::nearest(const Vec2& point) const {
  const IndexPoint q(point.x, point.y);
  IndexValue hit{};
  if (index_->tree.query(bgi::nearest(q, 1), &hit) == 0) {
    throw std::logic_error("spatial query on an empty graph");
  }
  // The tree gives one nearest value with no tie order guarantee; rescan the
  // tie neighborhood so equidistant nodes resolve to the lowest id.
  const double d = std::sqrt(bg::comparable_distance(q, hit.first));
  const double pad = d + 1e-9;
  const bg::model::box<IndexPoint> window(
      IndexPoint(point.x - pad, point.y - pad),
      IndexPoint(point.x + pad, point.y + pad));
  int best_id = hit.second;
  double best_d2 = bg::comparable_distance(q, hit.first);
  for (auto it = index_->tree.qbegin(bgi::intersects(window));
       it != index_->tree.qend(); ++it) {
    const double d2 = bg::comparable_distance(q, it->first);
    if (d2 < best_d2 - 1e-12 ||
        (std::abs(d2 - best_d2) <= 1e-12 && it->second < best_id)) {
      best_d2 = d2;
      best_id = it->second;
    }
  }
  return best_id;
}

int spatial_query(const RoadGraph& graph, const Vec2& point) {
  return graph.nearest(point);
}

namespace {

// Resamples a polyline at uniform arc-length spacing (adjusted so a whole
// number of intervals fits) and returns points plus headings.
std::vector<GraphNode> resample_polyline(const std::vector<Vec2>& pts,
                                         double ds) {
  std::vector<double> cum(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    cum[i] = cum[i - 1] + (pts[i] - pts[i - 1]).norm();
  }
  const double total = cum.back();
  const auto n = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(total / ds)));
  const double step = total / static_cast<double>(n);

  std::vector<GraphNode> out;
  out.reserve(n + 1);
  std::size_t seg = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double s = std::min(total, step * static_cast<double>(k));
    while (seg + 2 < pts.size() && cum[seg + 1] < s) {
      ++seg;
    }
    const double seg_len = cum[seg + 1] - cum[seg];
    const double w = seg_len > 1e-12 ? (s - cum[seg]) / seg_len : 0.0;
    const Vec2 p = pts[seg] + (pts[seg + 1] - pts[seg]) * w;
    const Vec2 dir = pts[seg + 1] - pts[seg];
    out.push_back(GraphNode{.id = 0, .x = p.x, .y = p.y,
                            .heading = std::atan2(dir.y, dir.x)});
  }
  return out;
}

}  // namespace

RoadGraph build_dense_graph(const WorldMap& map, double ds) {
  if (map.roads.empty()) {
    throw std::invalid_argument("cannot build a road graph from an empty map");
  }
  if (!(ds > 0.0)) {
    throw std::invalid_argument("graph sampling distance must be positive");
  }

  std::vector<GraphNode> nodes;
  std::vector<std::vector<GraphEdge>> adjacency;
  std::vector<int> road_first(map.roads.size(), -1);
  std::vector<int> road_last(map.roads.size(), -1);

  const auto add_node = [&](GraphNode n) {
    n.id = static_cast<int>(nodes.size());
    nodes.push_back(n);
    adjacency.emplace_back();
    return n.id;
  };

  for (std::size_t r = 0; r < map.roads.size(); ++r) {
    const auto chain = resample_polyline(map.roads[r].waypoints, ds);
    int prev = -1;
    for (const GraphNode& gn : chain) {
      const int id = add_node(gn);
      if (prev >= 0) {
        const Vec2 a{nodes[prev].x, nodes[prev].y};
        const Vec2 b{gn.x, gn.y};
        adjacency[prev].push_back(GraphEdge{id, (b - a).norm()});
      } else {
        road_first[r] = id;
      }
      prev = id;
    }
    road_last[r] = prev;
  }

  // Junction stitching: when a successor road starts exactly where this road
  // ends, skip the duplicated node so edge lengths stay near ds.
  for (std::size_t r = 0; r < map.roads.size(); ++r) {
    for (int succ_id : map.roads[r].successors) {
      std::size_t sr = 0;
      for (; sr < map.roads.size(); ++sr) {
        if (map.roads[sr].id == succ_id) break;
      }
      const int from = road_last[r];
      const int entry = road_first[sr];
      const Vec2 a{nodes[from].x, nodes[from].y};
      const Vec2 b{nodes[entry].x, nodes[entry].y};
      const double gap = (b - a).norm();
      if (gap < 1e-6) {
        for (const GraphEdge& e : adjacency[entry]) {
          adjacency[from].push_back(e);
        }
      } else {
        adjacency[from].push_back(GraphEdge{entry, gap});
      }
    }
  }

  RoadGraph graph(std::move(nodes), std::move(adjacency));
  graph.sampling_distance_ = ds;
  return graph;
}

std::vector<std::vector<int>> extract_paths(const RoadGraph& graph,
                                            int start_node, double desired_len,
                                            double tol) {
  if (!(desired_len >= 0.0)) {
    throw std::invalid_argument("desired path length must be non-negative");
  }

  struct Partial {
    std::vector<int> nodes;
    double length = 0.0;
  };

  std::vector<std::vector<int>> out;
  std::deque<Partial> queue;
  queue.push_back(Partial{{start_node}, 0.0});

  while (!queue.empty()) {
    Partial cur = std::move(queue.front());
    queue.pop_front();

    if (cur.length >= desired_len) {
      // Keep whichever of this prefix or its one-shorter parent lands
      // closer to the target; ties favor the longer prefix.
      out.push_back(std::move(cur.nodes));
      continue;
    }

    const auto succs = graph.successors(cur.nodes.back());
    bool extended = false;
    bool parent_emitted = false;
    for (const GraphEdge& e : succs) {
      if (std::find(cur.nodes.begin(), cur.nodes.end(), e.to) !=
          cur.nodes.end()) {
        continue;  // keep paths simple
      }
      Partial next;
      next.nodes = cur.nodes;
      next.nodes.push_back(e.to);
      next.length = cur.length + e.length;
      if (next.length >= desired_len) {
        const double over = next.length - desired_len;
        const double under = desired_len - cur.length;
        if (over <= under) {
          if (over <= tol) {
            out.push_back(std::move(next.nodes));
          }
        } else if (under <= tol && !parent_emitted) {
          out.push_back(cur.nodes);
          parent_emitted = true;
        }
      } else {
        queue.push_back(std::move(next));
      }
      extended = true;
    }
    if (!extended) {
      out.push_back(std::move(cur.nodes));  // dead end: truncated path
    }
  }
  return out;
}

PredictedPoint PredictedTrajectory::sample_at(double t) const {
  if (points.empty()) {
    throw std::logic_error("sampling an empty prediction");
  }
  if (t <= points.front().t) {
    return points.front();
  }
  if (t >= points.back().t) {
    PredictedPoint p = points.back();
    p.t = t;
    return p;  // last predicted state held
  }
  const double step = points.size() > 1 ? points[1].t - points[0].t : 1.0;
  const auto i = std::min(points.size() - 2,
                          static_cast<std::size_t>((t - points.front().t) / step));
  const PredictedPoint& a = points[i];
  const PredictedPoint& b = points[i + 1];
  const double w = (t - a.t) / (b.t - a.t);
  PredictedPoint p;
  p.t = t;
  p.x = a.x + w * (b.x - a.x);
  p.y = a.y + w * (b.y - a.y);
  p.theta = wrap_angle(a.theta + w * angle_diff(b.theta, a.theta));
  p.v = a.v + w * (b.v - a.v);
  return p;
}

namespace {

PredictedTrajectory straight_prediction(const ObstacleState& obstacle,
                                        double horizon, double dt,
                                        double speed_cap) {
  PredictedTrajectory traj;
  traj.obstacle_id = obstacle.id;
  const auto steps = static_cast<std::size_t>(std::llround(horizon / dt));
  traj.points.reserve(steps + 1);
  double x = obstacle.x;
  double y = obstacle.y;
  double v = std::clamp(obstacle.v, 0.0, speed_cap);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    traj.points.push_back(
        PredictedPoint{.t = t, .x = x, .y = y, .theta = obstacle.yaw, .v = v});
    x += v * std::cos(obstacle.yaw) * dt;
    y += v * std::sin(obstacle.yaw) * dt;
  }
  return traj;
}

}  // namespace

PredictedTrajectory pure_pursuit_rollout(const ObstacleState& obstacle,
                                         std::span<const int> path,
                                         const RoadGraph& graph,
                                         double horizon, double dt,
                                         const PredictionParams& params) {
  if (path.empty()) {
    throw std::invalid_argument("pure pursuit needs a non-empty path");
  }

  std::vector<Vec2> pts;
  pts.reserve(path.size());
  std::vector<double> cum(path.size(), 0.0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const GraphNode& n = graph.nodes()[static_cast<std::size_t>(path[i])];
    pts.push_back({n.x, n.y});
    if (i > 0) {
      cum[i] = cum[i - 1] + (pts[i] - pts[i - 1]).norm();
    }
  }

  // Arc-length position of the projection of q onto the path polyline.
  const auto project_s = [&](const Vec2& q) {
    double best_s = 0.0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Vec2 ab = pts[i + 1] - pts[i];
      const double len2 = ab.squared_norm();
      const double w =
          len2 > 1e-12 ? std::clamp((q - pts[i]).dot(ab) / len2, 0.0, 1.0) : 0.0;
      const Vec2 foot = pts[i] + ab * w;
      const double d2 = (q - foot).squared_norm();
      if (d2 < best_d2) {
        best_d2 = d2;
        best_s = cum[i] + std::sqrt(len2) * w;
      }
    }
    return best_s;
  };

  const auto point_at_s = [&](double s) {
    if (s >= cum.back()) {
      return std::optional<Vec2>{};  // past the end
    }
    std::size_t i = 0;
    while (i + 2 < pts.size() && cum[i + 1] < s) {
      ++i;
    }
    const double seg = cum[i + 1] - cum[i];
    const double w = seg > 1e-12 ? (s - cum[i]) / seg : 0.0;
    return std::optional<Vec2>{pts[i] + (pts[i + 1] - pts[i]) * w};
  };

  PredictedTrajectory traj;
  traj.obstacle_id = obstacle.id;
  const auto steps = static_cast<std::size_t>(std::llround(horizon / dt));
  traj.points.reserve(steps + 1);

  double x = obstacle.x;
  double y = obstacle.y;
  double theta = obstacle.yaw;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double v =
        std::clamp(obstacle.v + obstacle.a * t, 0.0, params.speed_cap);
    traj.points.push_back(
        PredictedPoint{.t = t, .x = x, .y = y, .theta = theta, .v = v});
    if (k == steps) break;

    const double lookahead = std::clamp(params.lookahead_gain * v,
                                        params.lookahead_min,
                                        params.lookahead_max);
    const double s_here = project_s({x, y});
    const auto target = point_at_s(s_here + lookahead);
    double kappa = 0.0;
    if (target && pts.size() >= 2) {
      const Vec2 local = Pose2{x, y, theta}.inverse_transform(*target);
      const double alpha = std::atan2(local.y, local.x);
      kappa = 2.0 * std::sin(alpha) / lookahead;
    }
    x += v * std::cos(theta) * dt;
    y += v * std::sin(theta) * dt;
    theta = wrap_angle(theta + v * kappa * dt);
  }
  return traj;
}

std::vector<PredictedTrajectory> predict_all(
    std::span<const ObstacleState> obstacles, const RoadGraph& graph,
    const PredictionParams& params) {
  std::vector<const ObstacleState*> ordered;
  ordered.reserve(obstacles.size());
  for (const ObstacleState& o : obstacles) {
    ordered.push_back(&o);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const ObstacleState* a, const ObstacleState* b) {
              return a->id < b->id;
            });

  std::vector<PredictedTrajectory> out;
  for (const ObstacleState* o : ordered) {
    if (o->kind == ObstacleKind::kPedestrian) {
      // Pedestrians are not bound to the lane graph.
      out.push_back(straight_prediction(*o, params.horizon, params.dt,
                                        params.speed_cap));
      out.back().path_id = 0;
      continue;
    }
    const int node = graph.nearest({o->x, o->y});
    const GraphNode& gn = graph.nodes()[static_cast<std::size_t>(node)];
    const double attach_dist = std::hypot(gn.x - o->x, gn.y - o->y);
    if (attach_dist > params.graph_attach_radius) {
      out.push_back(straight_prediction(*o, params.horizon, params.dt,
                                        params.speed_cap));
      out.back().path_id = 0;
      continue;
    }
    const double desired = std::max(
        0.0, o->v * params.horizon + 0.5 * o->a * params.horizon * params.horizon);
    const auto paths = extract_paths(graph, node, desired, params.path_tol);
    int path_id = 0;
    for (const auto& path : paths) {
      auto traj = pure_pursuit_rollout(*o, path, graph, params.horizon,
                                       params.dt, params);
      traj.path_id = path_id++;
      out.push_back(std::move(traj));
    }
    if (paths.empty()) {
      out.push_back(straight_prediction(*o, params.horizon, params.dt,
                                        params.speed_cap));
      out.back().path_id = 0;
    }
  }
  return out;
}

}  // namespace strada
