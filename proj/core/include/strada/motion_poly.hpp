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

#ifndef STRADA_MOTION_POLY_HPP_
#define STRADA_MOTION_POLY_HPP_

#include <array>
#include <cstddef>
#include <span>

namespace strada {

/// Position, velocity and acceleration of a 1-D motion profile.
struct MotionState {
  double pos = 0.0;
  double vel = 0.0;
  double acc = 0.0;
};

/// One-dimensional quartic or quintic motion polynomial over a fixed time
/// horizon. Coefficients are stored lowest degree first. All boundary-value
/// solvers use the explicit closed form of the respective linear system, so
/// results are deterministic and exact up to floating-point rounding.
class MotionPoly {
 public:
  struct Sample {
    double pos = 0.0;
    double vel = 0.0;
    double acc = 0.0;
    double jerk = 0.0;
  };

  /// Horizons below this are rejected: the boundary system conditions like
  /// T^-5 and the solve becomes meaningless.
  static constexpr double kMinHorizon = 1e-3;

  /// Builds a polynomial from raw coefficients (5 for quartic, 6 for
  /// quintic). Throws std::invalid_argument on bad sizes or values and
  /// std::domain_error on a bad horizon.
  MotionPoly(std::span<const double> coefficients, double horizon);

  /// Quintic with full position/velocity/acceleration constraints at both
  /// ends of the horizon.
  static MotionPoly solve_quintic(const MotionState& start,
                                  const MotionState& end, double horizon);

  /// Quartic with a free terminal position: start is fully constrained,
  /// the end constrains velocity and acceleration only.
  static MotionPoly solve_quartic(const MotionState& start, double end_vel,
                                  double end_acc, double horizon);

  std::span<const double> coefficients() const {
    return {coeffs_.data(), size_};
  }
  double horizon() const { return horizon_; }
  std::size_t degree() const { return size_ - 1; }
  bool is_quintic() const { return size_ == 6; }

  /// Value and first three derivatives at time t. Throws std::domain_error
  /// when t falls outside [0, horizon].
  Sample eval(double t) const;

  MotionState state_at(double t) const {
    const Sample s = eval(t);
    return {s.pos, s.vel, s.acc};
  }

  /// Integral of the squared third derivative over the full horizon,
  /// evaluated in closed form.
  double jerk_integral() const;

  /// Maximum of |third derivative| over the horizon. The jerk of a quartic
  /// is linear in t and that of a quintic quadratic, so the maximum sits at
  /// an endpoint or the single interior stationary point.
  double max_abs_jerk() const;

 private:
  std::array<double, 6> coeffs_{};
  std::size_t size_ = 6;
  double horizon_ = 0.0;
};

}  // namespace strada

#endif  // STRADA_MOTION_POLY_HPP_
