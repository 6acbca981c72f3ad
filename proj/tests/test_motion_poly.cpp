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

#include "strada/motion_poly.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace strada {
namespace {

TEST(SolveQuintic, IdentityCase) {
  const MotionPoly poly = MotionPoly::solve_quintic({0, 0, 0}, {0, 0, 0}, 1.0);
  for (double c : poly.coefficients()) {
    EXPECT_DOUBLE_EQ(0.0, c);
  }
}

TEST(SolveQuintic, UnitDisplacementMatchesEliminationOracle) {
  const MotionPoly poly = MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 1.0);
  const auto oracle = testing::quintic_by_elimination(0, 0, 0, 1, 0, 0, 1.0);
  ASSERT_EQ(6u, poly.coefficients().size());
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_NEAR(oracle[i], poly.coefficients()[i], 1e-12);
  }
  const double expected[6] = {0, 0, 0, 10, -15, 6};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_NEAR(expected[i], poly.coefficients()[i], 1e-12);
  }
}

TEST(SolveQuintic, BoundaryConditionsReproduced) {
  const MotionPoly poly =
      MotionPoly::solve_quintic({2, 1, -0.5}, {10, 0, 0}, 3.0);
  const auto s0 = poly.eval(0.0);
  EXPECT_NEAR(2.0, s0.pos, 1e-9);
  EXPECT_NEAR(1.0, s0.vel, 1e-9);
  EXPECT_NEAR(-0.5, s0.acc, 1e-9);
  const auto s1 = poly.eval(3.0);
  EXPECT_NEAR(10.0, s1.pos, 1e-9);
  EXPECT_NEAR(0.0, s1.vel, 1e-9);
  EXPECT_NEAR(0.0, s1.acc, 1e-9);
}

TEST(SolveQuintic, RejectsBadHorizon) {
  EXPECT_THROW(MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 0.0),
               std::domain_error);
  EXPECT_THROW(MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, -1.0),
               std::domain_error);
  EXPECT_THROW(MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 1e-4),
               std::domain_error);
  EXPECT_THROW(
      MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0},
                                std::numeric_limits<double>::quiet_NaN()),
      std::domain_error);
}

TEST(SolveQuintic, RejectsNonFiniteBoundary) {
  EXPECT_THROW(MotionPoly::solve_quintic(
                   {std::numeric_limits<double>::infinity(), 0, 0}, {1, 0, 0},
                   1.0),
               std::invalid_argument);
}

TEST(SolveQuartic, IdentityCase) {
  const MotionPoly poly = MotionPoly::solve_quartic({0, 0, 0}, 0, 0, 1.0);
  for (double c : poly.coefficients()) {
    EXPECT_DOUBLE_EQ(0.0, c);
  }
}

TEST(SolveQuartic, UnitVelocityMatchesEliminationOracle) {
  const MotionPoly poly = MotionPoly::solve_quartic({0, 0, 0}, 1, 0, 1.0);
  const auto oracle = testing::quartic_by_elimination(0, 0, 0, 1, 0, 1.0);
  ASSERT_EQ(5u, poly.coefficients().size());
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(oracle[i], poly.coefficients()[i], 1e-12);
  }
  const double expected[5] = {0, 0, 0, 1, -0.5};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(expected[i], poly.coefficients()[i], 1e-12);
  }
  EXPECT_NEAR(1.0, poly.eval(1.0).vel, 1e-12);
  EXPECT_NEAR(0.0, poly.eval(1.0).acc, 1e-12);
}

TEST(SolveQuartic, ConstantVelocityLineStaysLinear) {
  const MotionPoly poly = MotionPoly::solve_quartic({0, 5, 0}, 5, 0, 2.0);
  const auto c = poly.coefficients();
  EXPECT_NEAR(0.0, c[0], 1e-12);
  EXPECT_NEAR(5.0, c[1], 1e-12);
  EXPECT_NEAR(0.0, c[2], 1e-12);
  EXPECT_NEAR(0.0, c[3], 1e-12);
  EXPECT_NEAR(0.0, c[4], 1e-12);
}

TEST(Eval, ZeroPolynomial) {
  const std::array<double, 6> zero{};
  const MotionPoly poly({zero.data(), zero.size()}, 2.0);
  for (double t : {0.0, 0.7, 2.0}) {
    const auto s = poly.eval(t);
    EXPECT_DOUBLE_EQ(0.0, s.pos);
    EXPECT_DOUBLE_EQ(0.0, s.vel);
    EXPECT_DOUBLE_EQ(0.0, s.acc);
    EXPECT_DOUBLE_EQ(0.0, s.jerk);
  }
}

TEST(Eval, HandDifferentiatedQuartic) {
  // s(t) = t^3 - 0.5 t^4 at t = 1: derivatives done by hand.
  const std::array<double, 5> coeffs = {0, 0, 0, 1, -0.5};
  const MotionPoly poly({coeffs.data(), coeffs.size()}, 1.0);
  const auto s = poly.eval(1.0);
  EXPECT_NEAR(0.5, s.pos, 1e-12);
  EXPECT_NEAR(1.0, s.vel, 1e-12);
  EXPECT_NEAR(0.0, s.acc, 1e-12);
  EXPECT_NEAR(-6.0, s.jerk, 1e-12);
}

TEST(Eval, MinJerkQuinticInitialJerk) {
  const std::array<double, 6> coeffs = {0, 0, 0, 10, -15, 6};
  const MotionPoly poly({coeffs.data(), coeffs.size()}, 1.0);
  EXPECT_NEAR(60.0, poly.eval(0.0).jerk, 1e-12);
}

TEST(Eval, RejectsOutOfDomain) {
  const MotionPoly poly = MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 1.0);
  EXPECT_THROW(poly.eval(-0.1), std::domain_error);
  EXPECT_THROW(poly.eval(1.1), std::domain_error);
}

TEST(JerkIntegral, ZeroPolynomial) {
  const std::array<double, 6> zero{};
  const MotionPoly poly({zero.data(), zero.size()}, 1.0);
  EXPECT_DOUBLE_EQ(0.0, poly.jerk_integral());
}

TEST(JerkIntegral, MinJerkQuinticAgainstQuadrature) {
  const MotionPoly poly = MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 1.0);
  const double quad = testing::integrate(
      [&](double t) {
        const double j = poly.eval(t).jerk;
        return j * j;
      },
      0.0, 1.0);
  EXPECT_NEAR(720.0, poly.jerk_integral(), 1e-9);
  EXPECT_NEAR(quad, poly.jerk_integral(), 1e-6);
}

TEST(JerkIntegral, QuarticAgainstQuadrature) {
  const std::array<double, 5> coeffs = {0, 0, 0, 1, -0.5};
  const MotionPoly poly({coeffs.data(), coeffs.size()}, 1.0);
  const double quad = testing::integrate(
      [&](double t) {
        const double j = poly.eval(t).jerk;
        return j * j;
      },
      0.0, 1.0);
  EXPECT_NEAR(12.0, poly.jerk_integral(), 1e-12);
  EXPECT_NEAR(quad, poly.jerk_integral(), 1e-8);
}

TEST(MaxAbsJerk, ZeroPolynomial) {
  const std::array<double, 5> zero{};
  const MotionPoly poly({zero.data(), zero.size()}, 1.0);
  EXPECT_DOUBLE_EQ(0.0, poly.max_abs_jerk());
}

TEST(MaxAbsJerk, MinJerkQuinticPeaksAtEndpoints) {
  // Jerk is 60 - 360 t + 360 t^2: 60 at both ends, -30 at the vertex.
  const MotionPoly poly = MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 1.0);
  EXPECT_NEAR(60.0, poly.max_abs_jerk(), 1e-12);
}

TEST(MaxAbsJerk, LinearJerkQuartic) {
  const std::array<double, 5> coeffs = {0, 0, 0, 1, -0.5};
  const MotionPoly poly({coeffs.data(), coeffs.size()}, 1.0);
  EXPECT_NEAR(6.0, poly.max_abs_jerk(), 1e-12);
}

TEST(MaxAbsJerk, InteriorVertexDominatesWhenLarger) {
  // Force a quintic whose jerk parabola peaks inside the horizon.
  const std::array<double, 6> coeffs = {0, 0, 0, -1.0, 3.0, -1.2};
  const MotionPoly poly({coeffs.data(), coeffs.size()}, 1.0);
  double brute = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double t = 1e-4 * i;
    brute = std::max(brute, std::abs(poly.eval(t).jerk));
  }
  EXPECT_NEAR(brute, poly.max_abs_jerk(), 1e-6);
}

TEST(MotionPolyProperty, RandomBoundariesRoundTrip) {
  std::mt19937 rng(20260810);
  std::uniform_real_distribution<double> value(-50.0, 50.0);
  std::uniform_real_distribution<double> horizon(0.5, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const MotionState start{value(rng), value(rng), value(rng)};
    const double T = horizon(rng);
    if (i % 2 == 0) {
      const MotionState end{value(rng), value(rng), value(rng)};
      const MotionPoly poly = MotionPoly::solve_quintic(start, end, T);
      const auto s0 = poly.eval(0.0);
      const auto s1 = poly.eval(T);
      EXPECT_NEAR(start.pos, s0.pos, 1e-6);
      EXPECT_NEAR(start.vel, s0.vel, 1e-6);
      EXPECT_NEAR(start.acc, s0.acc, 1e-6);
      EXPECT_NEAR(end.pos, s1.pos, 1e-6);
      EXPECT_NEAR(end.vel, s1.vel, 1e-6);
      EXPECT_NEAR(end.acc, s1.acc, 1e-6);
    } else {
      const double ev = value(rng);
      const double ea = value(rng);
      const MotionPoly poly = MotionPoly::solve_quartic(start, ev, ea, T);
      const auto s0 = poly.eval(0.0);
      const auto s1 = poly.eval(T);
      EXPECT_NEAR(start.pos, s0.pos, 1e-6);
      EXPECT_NEAR(start.vel, s0.vel, 1e-6);
      EXPECT_NEAR(start.acc, s0.acc, 1e-6);
      EXPECT_NEAR(ev, s1.vel, 1e-6);
      EXPECT_NEAR(ea, s1.acc, 1e-6);
    }
  }
}

TEST(MotionPolyProperty, JerkIntegralNonNegativeAndZeroOnlyForLowOrder) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> value(-5.0, 5.0);
  for (int i = 0; i < 300; ++i) {
    std::array<double, 6> coeffs;
    for (double& c : coeffs) {
      c = value(rng);
    }
    const MotionPoly poly({coeffs.data(), coeffs.size()}, 2.0);
    EXPECT_GE(poly.jerk_integral(), 0.0);
  }
  // Quadratic content only: zero jerk integral.
  const std::array<double, 6> quad = {3.0, -2.0, 0.5, 0.0, 0.0, 0.0};
  EXPECT_DOUBLE_EQ(0.0, MotionPoly({quad.data(), quad.size()}, 2.0).jerk_integral());
  // Any cubic-or-higher coefficient makes it positive.
  const std::array<double, 6> cubic = {3.0, -2.0, 0.5, 1e-3, 0.0, 0.0};
  EXPECT_GT(MotionPoly({cubic.data(), cubic.size()}, 2.0).jerk_integral(), 0.0);
}

TEST(MotionPolyProperty, ClosedFormMatchesQuadratureOnRandomPolys) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::uniform_real_distribution<double> horizon(0.5, 8.0);
  for (int i = 0; i < 100; ++i) {
    std::array<double, 6> coeffs;
    for (double& c : coeffs) {
      c = value(rng);
    }
    const double T = horizon(rng);
    const MotionPoly poly({coeffs.data(), coeffs.size()}, T);
    const double quad = testing::integrate(
        [&](double t) {
          const double j = poly.eval(t).jerk;
          return j * j;
        },
        0.0, T);
    const double closed = poly.jerk_integral();
    EXPECT_NEAR(quad, closed, 1e-8 * std::max(1.0, std::abs(closed)));
  }
}

TEST(MotionPolyProperty, MinJerkQuinticIsOptimalAmongBoundaryRespectingCurves) {
  // Competitors: quintic plus a bump beta * t^3 (T - t)^3, which keeps
  // position, velocity and acceleration pinned at both ends.
  const MotionPoly quintic =
      MotionPoly::solve_quintic({0, 0, 0}, {1, 0, 0}, 1.0);
  const double base = quintic.jerk_integral();
  EXPECT_NEAR(720.0, base, 1e-9);

  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> beta_dist(-40.0, 40.0);
  for (int i = 0; i < 50; ++i) {
    const double beta = beta_dist(rng);
    const auto third_derivative = [&](double t) {
      // d^3/dt^3 of beta * t^3 (1 - t)^3 = beta * (t^3 - 3t^4 + 3t^5 - t^6).
      const double bump3 =
          beta * (6.0 - 72.0 * t + 180.0 * t * t - 120.0 * t * t * t);
      return quintic.eval(t).jerk + bump3;
    };
    const double perturbed = testing::integrate(
        [&](double t) {
          const double j = third_derivative(t);
          return j * j;
        },
        0.0, 1.0);
    EXPECT_GE(perturbed, base - 1e-6);
  }
}

}  // namespace
}  // namespace strada
