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

#ifndef STRADA_GEOMETRY_HPP_
#define STRADA_GEOMETRY_HPP_

#include <array>
#include <cmath>

namespace strada {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double k) const { return {x * k, y * k}; }
  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  constexpr double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  constexpr double squared_norm() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }

  Vec2 rotated(double angle) const {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * x - s * y, s * x + c * y};
  }
};

inline constexpr Vec2 operator*(double k, const Vec2& v) { return v * k; }

struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;

  Vec2 position() const { return {x, y}; }
  /// Maps a point given in the pose's body frame into the world frame.
  Vec2 transform(const Vec2& local) const {
    return position() + local.rotated(heading);
  }
  /// Maps a world-frame point into the pose's body frame.
  Vec2 inverse_transform(const Vec2& world) const {
    return (world - position()).rotated(-heading);
  }
};

/// Normalizes an angle to (-pi, pi].
double wrap_angle(double angle);

/// Shortest signed rotation taking `from` onto `to`, in (-pi, pi].
double angle_diff(double to, double from);

/// Axis-aligned-in-body rectangle footprint (vehicle, pedestrian, barrier).
struct OrientedBox {
  Pose2 pose;
  double length = 0.0;  // extent along the heading axis
  double width = 0.0;   // extent across the heading axis

  std::array<Vec2, 4> corners() const;
};

/// Exact separating-axis overlap test. Touching boundaries do not count as
/// overlap; a positive-area intersection does.
bool boxes_overlap(const OrientedBox& a, const OrientedBox& b);

}  // namespace strada

#endif  // STRADA_GEOMETRY_HPP_
