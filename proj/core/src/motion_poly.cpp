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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace strada {

namespace {

void check_horizon(double horizon) {
  if (!std::isfinite(horizon) || horizon <= 0.0) {
    throw std::domain_error("motion polynomial horizon must be finite and > 0");
  }
  if (horizon < MotionPoly::kMinHorizon) {
    throw std::domain_error("motion polynomial horizon below conditioning limit");
  }
}

void check_finite(const MotionState& s, const char* what) {
  if (!std::isfinite(s.pos) || !std::isfinite(s.vel) || !std::isfinite(s.acc)) {
    throw std::invalid_argument(std::string("non-finite ") + what +
                                " boundary state");
  }
}

}  // namespace

MotionPoly::MotionPoly(std::span<const double> coefficients, double horizon) {
  if (coefficients.size() != 5 && coefficients.size() != 6) {
    throw std::invalid_argument("coefficient list must have length 5 or 6");
  }
  check_horizon(horizon);
  for (double c : coefficients) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("non-finite polynomial coefficient");
    }
  }
  size_ = coefficients.size();
  std::copy(coefficients.begin(), coefficients.end(), coeffs_.begin());
  horizon_ = horizon;
}

MotionPoly MotionPoly::solve_quintic(const MotionState& start,
                                     const MotionState& end, double horizon) {
  check_horizon(horizon);
  check_finite(start, "start");
  check_finite(end, "end");

  const double T = horizon;
  const double a0 = start.pos;
  const double a1 = start.vel;
  const double a2 = 0.5 * start.acc;

  // Residual boundary values once the start-determined terms are removed.
  const double dp = end.pos - (a0 + a1 * T + a2 * T * T);
  const double dv = end.vel - (a1 + 2.0 * a2 * T);
  const double da = end.acc - 2.0 * a2;

  const double T2 = T * T;
  const double T3 = T2 * T;
  const double T4 = T3 * T;
  const double T5 = T4 * T;

  const double a3 = (20.0 * dp - 8.0 * T * dv + T2 * da) / (2.0 * T3);
  const double a4 = (-30.0 * dp + 14.0 * T * dv - 2.0 * T2 * da) / (2.0 * T4);
  const double a5 = (12.0 * dp - 6.0 * T * dv + T2 * da) / (2.0 * T5);

  const std::array<double, 6> coeffs = {a0, a1, a2, a3, a4, a5};
  return MotionPoly({coeffs.data(), coeffs.size()}, horizon);
}

MotionPoly MotionPoly::solve_quartic(const MotionState& start, double end_vel,
                                     double end_acc, double horizon) {
  check_horizon(horizon);
  check_finite(start, "start");
  if (!std::isfinite(end_vel) || !std::isfinite(end_acc)) {
    throw std::invalid_argument("non-finite end boundary state");
  }

  const double T = horizon;
  const double a0 = start.pos;
  const double a1 = start.vel;
  const double a2 = 0.5 * start.acc;

  const double dv = end_vel - (a1 + 2.0 * a2 * T);
  const double da = end_acc - 2.0 * a2;

  const double T2 = T * T;
  const double T3 = T2 * T;

  const double a3 = (3.0 * dv - T * da) / (3.0 * T2);
  const double a4 = (T * da - 2.0 * dv) / (4.0 * T3);

  const std::array<double, 5> coeffs = {a0, a1, a2, a3, a4};
  return MotionPoly({coeffs.data(), coeffs.size()}, horizon);
}

MotionPoly::Sample MotionPoly::eval(double t) const {
  constexpr double kSlack = 1e-9;
  if (!(t >= -kSlack && t <= horizon_ + kSlack)) {
    throw std::domain_error("evaluation time outside [0, horizon]");
  }
  t = std::clamp(t, 0.0, horizon_);

  Sample out;
  // Horner pass for the value and each derivative order.
  for (std::size_t i = size_; i-- > 0;) {
    const double c = coeffs_[i];
    const double di = static_cast<double>(i);
    out.pos = out.pos * t + c;
    if (i >= 1) {
      out.vel = out.vel * t + di * c;
    }
    if (i >= 2) {
      out.acc = out.acc * t + di * (di - 1.0) * c;
    }
    if (i >= 3) {
      out.jerk = out.jerk * t + di * (di - 1.0) * (di - 2.0) * c;
    }
  }
  return out;
}

double MotionPoly::jerk_integral() const {
  // Third-derivative coefficients j0 + j1 t + j2 t^2 (j2 only for quintics).
  const double j0 = 6.0 * coeffs_[3];
  const double j1 = 24.0 * coeffs_[4];
  const double j2 = size_ == 6 ? 60.0 * coeffs_[5] : 0.0;

  const double T = horizon_;
  const double T2 = T * T;
  const double T3 = T2 * T;
  const double T4 = T3 * T;
  const double T5 = T4 * T;

  // Integral of (j0 + j1 t + j2 t^2)^2 term by term.
  return j0 * j0 * T + j0 * j1 * T2 +
         (j1 * j1 + 2.0 * j0 * j2) * T3 / 3.0 + 0.5 * j1 * j2 * T4 +
         j2 * j2 * T5 / 5.0;
}

double MotionPoly::max_abs_jerk() const {
  const double j0 = 6.0 * coeffs_[3];
  const double j1 = 24.0 * coeffs_[4];
  const double j2 = size_ == 6 ? 60.0 * coeffs_[5] : 0.0;

  const auto jerk_at = [&](double t) { return j0 + t * (j1 + t * j2); };

  double peak = std::max(std::abs(jerk_at(0.0)), std::abs(jerk_at(horizon_)));
  if (j2 != 0.0) {
    const double t_star = -j1 / (2.0 * j2);
    if (t_star > 0.0 && t_star < horizon_) {
      peak = std::max(peak, std::abs(jerk_at(t_star)));
    }
  }
  return peak;
}

}  // namespace strada
