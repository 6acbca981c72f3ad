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

#ifndef STRADA_PREDICTION_HPP_
#define STRADA_PREDICTION_HPP_

#include <memory>
#include <span>
#include <vector>

#include "strada/geometry.hpp"
#include "strada/map.hpp"
#include "strada/obstacle.hpp"

namespace strada {

struct GraphNode {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
};

struct GraphEdge {
  int to = 0;
  double length = 0.0;
};

/// Lane centerlines densely resampled into a directed graph with a spatial
/// index over node positions. Immutable once built.
class RoadGraph {
 public:
  RoadGraph(std::vector<GraphNode> nodes,
            std::vector<std::vector<GraphEdge>> adjacency);
  ~RoadGraph();
  RoadGraph(RoadGraph&&) noexcept;
  RoadGraph& operator=(RoadGraph&&) noexcept;
  RoadGraph(const RoadGraph&) = delete;
  RoadGraph& operator=(const RoadGraph&) = delete;

  std::span<const GraphNode> nodes() const { return nodes_; }
  std::span<const GraphEdge> successors(int node_id) const;
  double sampling_distance() const { return sampling_distance_; }

  /// Exact nearest node by Euclidean distance; equidistant candidates
  /// resolve to the lowest node id. The R-tree only accelerates the search.
  int nearest(const Vec2& point) const;

 private:
  friend RoadGraph build_dense_graph(const WorldMap&, double);
  struct SpatialIndex;
  std::vector<GraphNode> nodes_;
  std::vector<std::vector<GraphEdge>> adjacency_;
  std::unique_ptr<SpatialIndex> index_;
  double sampling_distance_ = 1.0;
};

/// Resamples every road centerline at (close to) ds and connects successor
/// roads, deduplicating coincident junction nodes. Throws on an empty map.
RoadGraph build_dense_graph(const WorldMap& map, double ds);

int spatial_query(const RoadGraph& graph, const Vec2& point);

/// All simple directed paths from start_node whose length is as close to
/// desired_len as the edge granularity allows, kept when within +-tol.
/// Branches that dead-end earlier are returned truncated. Expansion is
/// breadth-first with successors ordered by node id.
std::vector<std::vector<int>> extract_paths(const RoadGraph& graph,
                                            int start_node, double desired_len,
                                            double tol);

struct PredictedPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
};

struct PredictedTrajectory {
  std::vector<PredictedPoint> points;
  int obstacle_id = 0;
  int path_id = 0;

  /// Pose at time t; linear interpolation between samples, last state held
  /// beyond the final sample.
  PredictedPoint sample_at(double t) const;
};

struct PredictionParams {
  double graph_ds = 1.0;
  double path_tol = 1.0;
  double horizon = 5.0;
  double dt = 0.1;
  double lookahead_gain = 0.5;
  double lookahead_min = 3.0;
  double lookahead_max = 15.0;
  double speed_cap = 30.0;
  double graph_attach_radius = 10.0;  // farther obstacles fall back to straight
};

/// Pure-pursuit rollout of an obstacle chasing the polyline spanned by
/// `path` (graph node ids): curvature 2 sin(alpha) / L_d toward the
/// lookahead point, speed v0 + a0 t clamped to [0, speed_cap]. Overrunning
/// the path end continues straight along the last heading.
PredictedTrajectory pure_pursuit_rollout(const ObstacleState& obstacle,
                                         std::span<const int> path,
                                         const RoadGraph& graph,
                                         double horizon, double dt,
                                         const PredictionParams& params);

/// Predictions for every obstacle, ordered by obstacle id and then BFS path
/// order. Vehicles roll out along graph paths sized by v*t_h + a*t_h^2/2;
/// pedestrians and off-graph vehicles get straight constant-velocity
/// predictions.
std::vector<PredictedTrajectory> predict_all(
    std::span<const ObstacleState> obstacles, const RoadGraph& graph,
    const PredictionParams& params);

}  // namespace strada

#endif  // STRADA_PREDICTION_HPP_
