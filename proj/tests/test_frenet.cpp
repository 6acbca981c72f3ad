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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "strada/reference_line.hpp"
#include "strada/trajectory.hpp"

namespace strada {
namespace {

std::vector<Vec2> straight_waypoints(double length, double step = 5.0) {
  std::vector<Vec2> out;
  for (double x = 0.0; x <= length + 1e-9; x += step) {
    out.push_back({x, 0.0});
  }
  return out;
}

std::vector<Vec2> circle_waypoints(double radius, double arc_fraction,
                                   int count) {
  std::vector<Vec2> out;
  for (int i = 0; i < count; ++i) {
    const double phi =
        arc_fraction * 2.0 * M_PI * static_cast<double>(i) / (count - 1);
    out.push_back({radius * std::cos(phi), radius * std::sin(phi)});
  }
  return out;
}

std::vector<Vec2> s_curve_waypoints() {
  std::vector<Vec2> out;
  for (double x = 0.0; x <= 60.0 + 1e-9; x += 2.0) {
    out.push_back({x, 4.0 * std::sin(x / 12.0)});
  }
  return out;
}

TEST(BuildReference, StraightLine) {
  const auto wps = straight_waypoints(10.0, 10.0);
  const ReferenceLine ref = build_reference(wps, 1.0);
  ASSERT_EQ(11u, ref.samples().size());
  EXPECT_NEAR(10.0, ref.length(), 1e-9);
  for (const ReferencePoint& p : ref.samples()) {
    EXPECT_NEAR(0.0, p.y, 1e-9);
    EXPECT_NEAR(0.0, p.heading, 1e-9);
    EXPECT_NEAR(0.0, p.curvature, 1e-9);
    EXPECT_NEAR(p.s, p.x, 1e-9);
  }
}

TEST(BuildReference, QuarterCircleLengthAndCurvature) {
  const auto wps = circle_waypoints(10.0, 0.25, 20);
  const ReferenceLine ref = build_reference(wps, 0.5);
  const double expected_len = 0.5 * M_PI * 10.0;
  EXPECT_NEAR(expected_len, ref.length(), 0.02 * expected_len);
  for (const ReferencePoint& p : ref.samples()) {
    if (p.s < 0.15 * ref.length() || p.s > 0.85 * ref.length()) {
      continue;  // natural spline ends distort curvature
    }
    EXPECT_NEAR(0.1, p.curvature, 0.005);
  }
  // Endpoints interpolate the first/last waypoints.
  EXPECT_NEAR(wps.front().x, ref.samples().front().x, 1e-6);
  EXPECT_NEAR(wps.front().y, ref.samples().front().y, 1e-6);
  EXPECT_NEAR(wps.back().x, ref.samples().back().x, 1e-6);
  EXPECT_NEAR(wps.back().y, ref.samples().back().y, 1e-6);
}

TEST(BuildReference, ArcLengthParameterizationHolds) {
  const ReferenceLine ref = build_reference(s_curve_waypoints(), 0.5);
  const auto samples = ref.samples();
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double chord = std::hypot(samples[i].x - samples[i - 1].x,
                                    samples[i].y - samples[i - 1].y);
    EXPECT_NEAR(ref.spacing(), chord, 0.01 * ref.spacing());
  }
}

TEST(BuildReference, RejectsDegenerateInput) {
  EXPECT_THROW(build_reference(std::vector<Vec2>{{0, 0}}, 1.0),
               std::invalid_argument);
  EXPECT_THROW(
      build_reference(std::vector<Vec2>{{0, 0}, {0, 0}, {1, 0}}, 1.0),
      std::invalid_argument);
  EXPECT_THROW(build_reference(straight_waypoints(10.0), 0.0),
               std::invalid_argument);
}

TEST(FrenetToCartesian, StraightOffset) {
  const ReferenceLine ref = build_reference(straight_waypoints(20.0), 0.5);
  const auto cart = ref.to_cartesian(
      {.s = 5.0, .s_dot = 10.0, .s_ddot = 0.0, .d = 2.0, .d_dot = 0.0,
       .d_ddot = 0.0});
  ASSERT_TRUE(cart.has_value());
  EXPECT_NEAR(5.0, cart->x, 1e-9);
  EXPECT_NEAR(2.0, cart->y, 1e-9);
  EXPECT_NEAR(0.0, cart->theta, 1e-9);
  EXPECT_NEAR(10.0, cart->v, 1e-9);
  EXPECT_NEAR(0.0, cart->a, 1e-9);
  EXPECT_NEAR(0.0, cart->kappa, 1e-9);
}

TEST(FrenetToCartesian, FullCircleAntipode) {
  // Counterclockwise circle of radius 10 from (10, 0): half the
  // circumference (s = 10*pi) lands at (-10, 0) with the tangent pointing
  // in the -y direction.
  const auto wps = circle_waypoints(10.0, 1.0, 73);
  const ReferenceLine ref = build_reference(wps, 0.5);
  const double half = 10.0 * M_PI;
  const auto cart =
      ref.to_cartesian({.s = half, .s_dot = 1.0, .s_ddot = 0.0, .d = 0.0,
                        .d_dot = 0.0, .d_ddot = 0.0});
  ASSERT_TRUE(cart.has_value());
  EXPECT_NEAR(-10.0, cart->x, 0.05);
  EXPECT_NEAR(0.0, cart->y, 0.05);
  const Vec2 tangent{std::cos(cart->theta), std::sin(cart->theta)};
  EXPECT_NEAR(0.0, tangent.x, 0.02);
  EXPECT_NEAR(-1.0, tangent.y, 0.02);
  // A quarter of the way around sits at (0, 10).
  const auto quarter =
      ref.to_cartesian({.s = 5.0 * M_PI, .s_dot = 1.0, .s_ddot = 0.0,
                        .d = 0.0, .d_dot = 0.0, .d_ddot = 0.0});
  ASSERT_TRUE(quarter.has_value());
  EXPECT_NEAR(0.0, quarter->x, 0.05);
  EXPECT_NEAR(10.0, quarter->y, 0.05);
}

TEST(FrenetToCartesian, OnLineStatesLandOnTheLine) {
  const ReferenceLine ref = build_reference(s_curve_waypoints(), 0.5);
  for (double s = 0.0; s <= ref.length(); s += 3.7) {
    const auto cart = ref.to_cartesian(
        {.s = s, .s_dot = 3.0, .s_ddot = 0.0, .d = 0.0, .d_dot = 0.0,
         .d_ddot = 0.0});
    ASSERT_TRUE(cart.has_value());
    const auto lp = ref.at(s);
    EXPECT_NEAR(lp.position.x, cart->x, 1e-6);
    EXPECT_NEAR(lp.position.y, cart->y, 1e-6);
  }
}

TEST(FrenetToCartesian, FoldoverRejected) {
  const auto wps = circle_waypoints(10.0, 0.5, 40);
  const ReferenceLine ref = build_reference(wps, 0.5);
  // Left offset equal to the curvature radius folds over the center.
  const auto cart = ref.to_cartesian(
      {.s = 0.5 * ref.length(), .s_dot = 1.0, .s_ddot = 0.0, .d = 10.5,
       .d_dot = 0.0, .d_ddot = 0.0});
  EXPECT_FALSE(cart.has_value());
}

TEST(CartesianToFrenet, StraightPose) {
  const ReferenceLine ref = build_reference(straight_waypoints(20.0), 0.5);
  const FrenetState f = ref.to_frenet({5.0, 2.0, 0.0, 10.0, 0.0});
  EXPECT_NEAR(5.0, f.s, 1e-9);
  EXPECT_NEAR(2.0, f.d, 1e-9);
  EXPECT_NEAR(10.0, f.s_dot, 1e-9);
  EXPECT_NEAR(0.0, f.d_dot, 1e-9);
}

TEST(CartesianToFrenet, OutOfCorridor) {
  const ReferenceLine ref = build_reference(straight_waypoints(20.0), 0.5);
  EXPECT_THROW(ref.to_frenet({10.0, 60.0, 0.0, 1.0, 0.0}), std::out_of_range);
}

TEST(CartesianToFrenet, RoundTripOnCurvedReferences) {
  std::mt19937 rng(20260810);
  std::uniform_real_distribution<double> d_dist(-4.0, 4.0);
  std::uniform_real_distribution<double> v_dist(0.0, 15.0);
  std::uniform_real_distribution<double> rate_dist(-1.5, 1.5);
  std::uniform_real_distribution<double> acc_dist(-3.0, 3.0);

  const std::vector<ReferenceLine> refs = [] {
    std::vector<ReferenceLine> out;
    out.push_back(build_reference(straight_waypoints(100.0), 0.5));
    out.push_back(build_reference(circle_waypoints(10.0, 1.0, 73), 0.5));
    out.push_back(build_reference(s_curve_waypoints(), 0.5));
    return out;
  }();

  for (const ReferenceLine& ref : refs) {
    std::uniform_real_distribution<double> s_dist(0.05 * ref.length(),
                                                  0.95 * ref.length());
    for (int i = 0; i < 500; ++i) {
      FrenetState f;
      f.s = s_dist(rng);
      f.d = d_dist(rng);
      f.s_dot = v_dist(rng);
      f.d_dot = rate_dist(rng);
      f.s_ddot = acc_dist(rng);
      f.d_ddot = acc_dist(rng);
      const auto cart = ref.to_cartesian(f);
      if (!cart) {
        continue;  // folded-over sample, regenerate implicitly
      }
      const FrenetState back =
          ref.to_frenet({cart->x, cart->y, cart->theta, cart->v, cart->a});
      EXPECT_NEAR(f.s, back.s, 1e-3);
      EXPECT_NEAR(f.d, back.d, 1e-3);
    }
  }
}

TEST(RealizeTrajectory, StraightConstantSpeed) {
  const ReferenceLine ref = build_reference(straight_waypoints(100.0), 0.5);
  const MotionPoly lat = MotionPoly::solve_quintic({0, 0, 0}, {0, 0, 0}, 5.0);
  const MotionPoly lon = MotionPoly::solve_quartic({0, 10, 0}, 10, 0, 5.0);
  const auto traj = realize_trajectory(ref, lat, lon, 0.1);
  ASSERT_TRUE(traj.has_value());
  ASSERT_EQ(51u, traj->points.size());
  for (const TrajectoryPoint& p : traj->points) {
    EXPECT_NEAR(10.0 * p.t, p.x, 1e-9);
    EXPECT_NEAR(0.0, p.y, 1e-9);
    EXPECT_NEAR(10.0, p.v, 1e-9);
    EXPECT_NEAR(0.0, p.a, 1e-9);
  }
}

TEST(RealizeTrajectory, IdentityOnStraightReference) {
  // On a straight reference the frame is the identity map: the realized
  // (x, y) equal (s(t), d(t)) exactly.
  const ReferenceLine ref = build_reference(straight_waypoints(100.0), 0.5);
  const MotionPoly lat = MotionPoly::solve_quintic({1, 0, 0}, {-2, 0, 0}, 4.0);
  const MotionPoly lon = MotionPoly::solve_quintic({5, 3, 0}, {40, 6, 0}, 4.0);
  const auto traj = realize_trajectory(ref, lat, lon, 0.1);
  ASSERT_TRUE(traj.has_value());
  for (const TrajectoryPoint& p : traj->points) {
    EXPECT_NEAR(lon.eval(p.t).pos, p.x, 1e-9);
    EXPECT_NEAR(lat.eval(p.t).pos, p.y, 1e-9);
  }
}

TEST(RealizeTrajectory, UnitLateralShiftHasNoOvershoot) {
  const ReferenceLine ref = build_reference(straight_waypoints(100.0), 0.5);
  const MotionPoly lat = MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 3.0);
  const MotionPoly lon = MotionPoly::solve_quartic({0, 8, 0}, 8, 0, 3.0);
  const auto traj = realize_trajectory(ref, lat, lon, 0.05);
  ASSERT_TRUE(traj.has_value());
  EXPECT_NEAR(1.0, traj->back().y, 1e-6);
  for (const TrajectoryPoint& p : traj->points) {
    EXPECT_GE(p.y, -0.05);
    EXPECT_LE(p.y, 1.05);
  }
}

TEST(RealizeTrajectory, MismatchedHorizonsHoldLateralTerminalState) {
  const ReferenceLine ref = build_reference(straight_waypoints(100.0), 0.5);
  const MotionPoly lat = MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 2.0);
  const MotionPoly lon = MotionPoly::solve_quartic({0, 5, 0}, 5, 0, 3.0);
  const auto traj = realize_trajectory(ref, lat, lon, 0.1);
  ASSERT_TRUE(traj.has_value());
  EXPECT_NEAR(3.0, traj->back().t, 1e-9);
  for (const TrajectoryPoint& p : traj->points) {
    if (p.t >= 2.0) {
      EXPECT_NEAR(1.0, p.y, 1e-9);  // lateral state held after its horizon
    }
  }
}

TEST(RealizeTrajectory, ReverseMotionIsInfeasible) {
  const ReferenceLine ref = build_reference(straight_waypoints(100.0), 0.5);
  const MotionPoly lat = MotionPoly::solve_quintic({0, 0, 0}, {0, 0, 0}, 3.0);
  // Strong deceleration through zero makes s_dot negative mid-profile.
  const MotionPoly lon = MotionPoly::solve_quintic({20, 2, 0}, {10, 0, 0}, 3.0);
  const auto traj = realize_trajectory(ref, lat, lon, 0.1);
  EXPECT_FALSE(traj.has_value());
}

TEST(RealizeTrajectory, SpeedsAreNonNegative) {
  const ReferenceLine ref = build_reference(s_curve_waypoints(), 0.5);
  const MotionPoly lat = MotionPoly::solve_quintic({0, 0, 0}, {2, 0, 0}, 4.0);
  const MotionPoly lon = MotionPoly::solve_quintic({0, 6, 0}, {20, 0, 0}, 4.0);
  const auto traj = realize_trajectory(ref, lat, lon, 0.1);
  ASSERT_TRUE(traj.has_value());
  for (const TrajectoryPoint& p : traj->points) {
    EXPECT_GE(p.v, 0.0);
  }
}

TEST(RealizeTrajectory, HeadingsConsistentWithDisplacement) {
  const ReferenceLine ref = build_reference(s_curve_waypoints(), 0.5);
  const MotionPoly lat = MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 4.0);
  const MotionPoly lon = MotionPoly::solve_quartic({5, 7, 0}, 7, 0, 4.0);
  const auto traj = realize_trajectory(ref, lat, lon, 0.05);
  ASSERT_TRUE(traj.has_value());
  for (std::size_t i = 1; i < traj->points.size(); ++i) {
    const TrajectoryPoint& a = traj->points[i - 1];
    const TrajectoryPoint& b = traj->points[i];
    if (a.v < 0.5) {
      continue;
    }
    const double motion = std::atan2(b.y - a.y, b.x - a.x);
    EXPECT_LT(std::abs(angle_diff(motion, a.theta)), 0.1);
  }
}

}  // namespace
}  // namespace strada
