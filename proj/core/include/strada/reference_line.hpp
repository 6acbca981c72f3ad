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

#ifndef STRADA_REFERENCE_LINE_HPP_
#define STRADA_REFERENCE_LINE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "strada/geometry.hpp"

namespace strada {

/// Kinematic state decoupled along a reference line: longitudinal arc
/// length s and signed lateral offset d (positive to the left of travel),
/// each with time derivatives.
struct FrenetState {
  double s = 0.0;
  double s_dot = 0.0;
  double s_ddot = 0.0;
  double d = 0.0;
  double d_dot = 0.0;
  double d_ddot = 0.0;
};

/// One arc-length sample of a reference line.
struct ReferencePoint {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double curvature = 0.0;
};

/// Full Cartesian kinematic state produced by a Frenet conversion.
struct CartesianState {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  double a = 0.0;
  double kappa = 0.0;
};

/// Pose observed in the world frame; acceleration is assumed tangential.
struct CartesianPose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  double a = 0.0;
};

/// Arc-length-parameterized lane reference. Samples are uniformly spaced;
/// between samples the curve is interpolated with a C1 Hermite segment whose
/// node tangents match the stored headings, so conversions in both
/// directions see the same geometry.
class ReferenceLine {
 public:
  /// Maximum lateral distance at which a pose is still considered to belong
  /// to this reference's corridor.
  static constexpr double kCorridorHalfWidth = 50.0;

  /// Validates and adopts pre-computed samples. Throws std::invalid_argument
  /// when spacing is non-uniform or fewer than two samples are given.
  explicit ReferenceLine(std::vector<ReferencePoint> samples);

  double length() const { return samples_.back().s; }
  double spacing() const { return spacing_; }
  std::span<const ReferencePoint> samples() const { return samples_; }

  struct LinePoint {
    Vec2 position;
    Vec2 tangent;  // unit
    double heading = 0.0;
    double curvature = 0.0;
    double curvature_rate = 0.0;  // d(curvature)/ds
  };

  /// Geometry at arc length s, clamped to [0, length].
  LinePoint at(double s) const;

  /// Frenet-to-Cartesian conversion. Returns nullopt when the state folds
  /// over the local center of curvature (1 - kappa*d <= 0) or when s leaves
  /// [0, length]; such candidates are discarded upstream.
  std::optional<CartesianState> to_cartesian(const FrenetState& state) const;

  /// Cartesian-to-Frenet projection: nearest point on the line by arc
  /// length, ties resolved toward the smallest s. Throws std::out_of_range
  /// when the pose lies farther than kCorridorHalfWidth from the line.
  FrenetState to_frenet(const CartesianPose& pose) const;

 private:
  std::vector<ReferencePoint> samples_;
  double spacing_ = 0.0;

  struct Segment {
    Vec2 p0, p1, m0, m1;  // Hermite data, tangents scaled by segment length
    double s0 = 0.0;
    double h = 0.0;
  };
  Segment segment(std::size_t i) const;
  std::size_t segment_index(double s) const;
};

/// Fits a cubic spline through the waypoints and resamples it at (close to)
/// the requested arc-length spacing; the actual spacing is adjusted so an
/// integer number of intervals covers the curve exactly. Throws
/// std::invalid_argument for fewer than two waypoints, duplicate consecutive
/// waypoints, or non-positive ds.
ReferenceLine build_reference(std::span<const Vec2> waypoints, double ds);

}  // namespace strada

#endif  // STRADA_REFERENCE_LINE_HPP_
