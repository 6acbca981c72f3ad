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

#include "strada/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strada {

namespace {

// Samples a profile at t, continuing past its horizon with the terminal
// state under constant velocity.
MotionPoly::Sample sample_padded(const MotionPoly& poly, double t) {
  if (t <= poly.horizon()) {
    return poly.eval(t);
  }
  MotionPoly::Sample s = poly.eval(poly.horizon());
  s.pos += s.vel * (t - poly.horizon());
  s.acc = 0.0;
  s.jerk = 0.0;
  return s;
}

}  // namespace

TrajectoryPoint Trajectory::sample_at(double t) const {
  if (points.empty()) {
    throw std::logic_error("sampling an empty trajectory");
  }
  const double t0 = points.front().t;
  const double t1 = points.back().t;
  if (t >= t1) {
    TrajectoryPoint p = points.back();
    const double dt = t - t1;
    p.t = t;
    p.x += p.v * std::cos(p.theta) * dt;
    p.y += p.v * std::sin(p.theta) * dt;
    p.a = 0.0;
    return p;
  }
  if (t <= t0) {
    return points.front();
  }
  const double step = points.size() > 1 ? points[1].t - points[0].t : 1.0;
  const auto i = std::min(points.size() - 2,
                          static_cast<std::size_t>((t - t0) / step));
  const TrajectoryPoint& a = points[i];
  const TrajectoryPoint& b = points[i + 1];
  const double w = (t - a.t) / (b.t - a.t);
  TrajectoryPoint p;
  p.t = t;
  p.x = a.x + w * (b.x - a.x);
  p.y = a.y + w * (b.y - a.y);
  p.theta = wrap_angle(a.theta + w * angle_diff(b.theta, a.theta));
  p.v = a.v + w * (b.v - a.v);
  p.a = a.a + w * (b.a - a.a);
  p.kappa = a.kappa + w * (b.kappa - a.kappa);
  return p;
}

std::optional<Trajectory> realize_trajectory(const ReferenceLine& ref,
                                             const MotionPoly& lateral,
                                             const MotionPoly& longitudinal,
                                             double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("trajectory sampling step must be positive");
  }
  const double horizon = std::max(lateral.horizon(), longitudinal.horizon());

  // Fixed-step sampling; the final step lands on the horizon when it is a
  // multiple of dt (the default grids make sure it is).
  auto steps = static_cast<std::size_t>(std::floor(horizon / dt + 1e-9));
  if (std::abs(static_cast<double>(steps) * dt - horizon) > 1e-9 &&
      std::abs(static_cast<double>(steps + 1) * dt - horizon) < 1e-9) {
    ++steps;
  }

  Trajectory traj{
      .points = {},
      .lateral = lateral,
      .longitudinal = longitudinal,
      .start_s = longitudinal.eval(0.0).pos,
      .horizon = horizon,
      .target_offset = lateral.eval(lateral.horizon()).pos,
  };
  traj.points.reserve(steps + 1);

  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const MotionPoly::Sample lon = sample_padded(longitudinal, t);
    const MotionPoly::Sample lat = sample_padded(lateral, t);
    if (lon.vel < -1e-6) {
      return std::nullopt;  // reverse motion is not a valid candidate
    }

    const FrenetState f{
        .s = lon.pos,
        .s_dot = std::max(0.0, lon.vel),
        .s_ddot = lon.acc,
        .d = lat.pos,
        .d_dot = lat.vel,
        .d_ddot = lat.acc,
    };
    const auto cart = ref.to_cartesian(f);
    if (!cart) {
      return std::nullopt;
    }
    traj.points.push_back(TrajectoryPoint{
        .t = t,
        .x = cart->x,
        .y = cart->y,
        .theta = cart->theta,
        .v = cart->v,
        .a = cart->a,
        .kappa = cart->kappa,
    });
  }
  return traj;
}

}  // namespace strada
