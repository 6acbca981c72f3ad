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

#include "strada/geometry.hpp"

#include <algorithm>
#include <limits>

namespace strada {

double wrap_angle(double angle) {
  constexpr double kTwoPi = 2.0 * M_PI;
  double r = std::fmod(angle + M_PI, kTwoPi);
  if (r <= 0.0) {
    r += kTwoPi;
  }
  return r - M_PI;
}

double angle_diff(double to, double from) { return wrap_angle(to - from); }

std::array<Vec2, 4> OrientedBox::corners() const {
  const double hl = 0.5 * length;
  const double hw = 0.5 * width;
  return {pose.transform({hl, hw}), pose.transform({hl, -hw}),
          pose.transform({-hl, -hw}), pose.transform({-hl, hw})};
}

namespace {

// Projects box corners onto `axis` and returns the [min, max] interval.
std::pair<double, double> project(const std::array<Vec2, 4>& corners,
                                  const Vec2& axis) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Vec2& c : corners) {
    const double p = c.dot(axis);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return {lo, hi};
}

}  // namespace

bool boxes_overlap(const OrientedBox& a, const OrientedBox& b) {
  const auto ca = a.corners();
  const auto cb = b.corners();
  const std::array<Vec2, 4> axes = {
      Vec2{std::cos(a.pose.heading), std::sin(a.pose.heading)},
      Vec2{-std::sin(a.pose.heading), std::cos(a.pose.heading)},
      Vec2{std::cos(b.pose.heading), std::sin(b.pose.heading)},
      Vec2{-std::sin(b.pose.heading), std::cos(b.pose.heading)}};
  for (const Vec2& axis : axes) {
    const auto [alo, ahi] = project(ca, axis);
    const auto [blo, bhi] = project(cb, axis);
    if (ahi <= blo || bhi <= alo) {
      return false;
    }
  }
  return true;
}

}  // namespace strada
