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

#include "strada/reference_line.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace strada {

namespace {

constexpr double kFoldoverEps = 1e-6;

// Natural cubic spline through (u_i, value_i) with a Thomas-algorithm solve
// for the second derivatives.
class CubicSpline1d {
 public:
  CubicSpline1d(std::vector<double> u, std::vector<double> v)
      : u_(std::move(u)), v_(std::move(v)) {
    const std::size_t n = u_.size();
    m_.assign(n, 0.0);
    if (n < 3) {
      return;  // linear segment, second derivatives stay zero
    }
    std::vector<double> diag(n, 2.0), rhs(n, 0.0), upper(n, 0.0);
    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = u_[i + 1] - u_[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      diag[i] = 2.0 * (h[i - 1] + h[i]);
      upper[i] = h[i];
      rhs[i] = 6.0 * ((v_[i + 1] - v_[i]) / h[i] - (v_[i] - v_[i - 1]) / h[i - 1]);
    }
    // Forward sweep over the interior rows (natural ends: m_0 = m_{n-1} = 0).
    for (std::size_t i = 2; i + 1 < n; ++i) {
      const double w = h[i - 1] / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
      if (i == 1) break;
    }
  }

  double value(double u) const {
    const std::size_t i = segment(u);
    const double h = u_[i + 1] - u_[i];
    const double a = (u_[i + 1] - u) / h;
    const double b = (u - u_[i]) / h;
    return a * v_[i] + b * v_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
  }

  double derivative(double u) const {
    const std::size_t i = segment(u);
    const double h = u_[i + 1] - u_[i];
    const double a = (u_[i + 1] - u) / h;
    const double b = (u - u_[i]) / h;
    return (v_[i + 1] - v_[i]) / h +
           ((3.0 * b * b - 1.0) * m_[i + 1] - (3.0 * a * a - 1.0) * m_[i]) * h / 6.0;
  }

  double second_derivative(double u) const {
    const std::size_t i = segment(u);
    const double h = u_[i + 1] - u_[i];
    const double a = (u_[i + 1] - u) / h;
    const double b = (u - u_[i]) / h;
    return a * m_[i] + b * m_[i + 1];
  }

 private:
  std::size_t segment(double u) const {
    const auto it = std::upper_bound(u_.begin(), u_.end(), u);
    const std::size_t idx = static_cast<std::size_t>(
        std::distance(u_.begin(), it));
    return std::clamp<std::size_t>(idx, 1, u_.size() - 1) - 1;
  }

  std::vector<double> u_, v_, m_;
};

struct PlanarSpline {
  CubicSpline1d x, y;

  Vec2 position(double u) const { return {x.value(u), y.value(u)}; }
  Vec2 velocity(double u) const { return {x.derivative(u), y.derivative(u)}; }
  double speed(double u) const { return velocity(u).norm(); }
  double heading(double u) const {
    const Vec2 v = velocity(u);
    return std::atan2(v.y, v.x);
  }
  double curvature(double u) const {
    const Vec2 v = velocity(u);
    const Vec2 a = {x.second_derivative(u), y.second_derivative(u)};
    const double sp2 = v.squared_norm();
    return v.cross(a) / (sp2 * std::sqrt(sp2));
  }
};

// 5-point Gauss-Legendre nodes/weights on [0, 1].
constexpr std::array<double, 5> kGlNodes = {
    0.046910077030668, 0.230765344947158, 0.5, 0.769234655052841,
    0.953089922969332};
constexpr std::array<double, 5> kGlWeights = {
    0.118463442528095, 0.239314335249683, 0.284444444444444,
    0.239314335249683, 0.118463442528095};

double arc_length_increment(const PlanarSpline& spline, double u0, double u1) {
  const double h = u1 - u0;
  double sum = 0.0;
  for (std::size_t k = 0; k < kGlNodes.size(); ++k) {
    sum += kGlWeights[k] * spline.speed(u0 + h * kGlNodes[k]);
  }
  return h * sum;
}

}  // namespace

ReferenceLine::ReferenceLine(std::vector<ReferencePoint> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    throw std::invalid_argument("reference line needs at least two samples");
  }
  if (std::abs(samples_.front().s) > 1e-9) {
    throw std::invalid_argument("reference line must start at s = 0");
  }
  spacing_ = samples_[1].s - samples_[0].s;
  if (spacing_ <= 0.0) {
    throw std::invalid_argument("reference line spacing must be positive");
  }
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    const double step = samples_[i].s - samples_[i - 1].s;
    if (std::abs(step - spacing_) > 1e-9) {
      throw std::invalid_argument("reference line spacing must be uniform");
    }
  }
}

ReferenceLine::Segment ReferenceLine::segment(std::size_t i) const {
  const ReferencePoint& a = samples_[i];
  const ReferencePoint& b = samples_[i + 1];
  const double h = b.s - a.s;
  return Segment{
      .p0 = {a.x, a.y},
      .p1 = {b.x, b.y},
      .m0 = Vec2{std::cos(a.heading), std::sin(a.heading)} * h,
      .m1 = Vec2{std::cos(b.heading), std::sin(b.heading)} * h,
      .s0 = a.s,
      .h = h,
  };
}

std::size_t ReferenceLine::segment_index(double s) const {
  const double clamped = std::clamp(s, 0.0, length());
  const auto idx = static_cast<std::size_t>(clamped / spacing_);
  return std::min(idx, samples_.size() - 2);
}

ReferenceLine::LinePoint ReferenceLine::at(double s) const {
  const double sc = std::clamp(s, 0.0, length());
  const std::size_t i = segment_index(sc);
  const Segment seg = segment(i);
  const double x = (sc - seg.s0) / seg.h;

  const double x2 = x * x;
  const double x3 = x2 * x;
  const double h00 = 2.0 * x3 - 3.0 * x2 + 1.0;
  const double h10 = x3 - 2.0 * x2 + x;
  const double h01 = -2.0 * x3 + 3.0 * x2;
  const double h11 = x3 - x2;
  const Vec2 pos = seg.p0 * h00 + seg.m0 * h10 + seg.p1 * h01 + seg.m1 * h11;

  const double d00 = 6.0 * x2 - 6.0 * x;
  const double d10 = 3.0 * x2 - 4.0 * x + 1.0;
  const double d01 = -d00;
  const double d11 = 3.0 * x2 - 2.0 * x;
  Vec2 deriv = (seg.p0 * d00 + seg.m0 * d10 + seg.p1 * d01 + seg.m1 * d11) *
               (1.0 / seg.h);
  const double norm = deriv.norm();
  if (norm > 1e-12) {
    deriv = deriv * (1.0 / norm);
  }

  const ReferencePoint& a = samples_[i];
  const ReferencePoint& b = samples_[i + 1];
  LinePoint out;
  out.position = pos;
  out.tangent = deriv;
  out.heading = std::atan2(deriv.y, deriv.x);
  out.curvature = a.curvature + (b.curvature - a.curvature) * x;
  out.curvature_rate = (b.curvature - a.curvature) / seg.h;
  return out;
}

std::optional<CartesianState> ReferenceLine::to_cartesian(
    const FrenetState& state) const {
  if (state.s < -1e-9 || state.s > length() + 1e-9) {
    return std::nullopt;
  }
  const LinePoint ref = at(state.s);
  const double one_minus_kd = 1.0 - ref.curvature * state.d;
  if (one_minus_kd <= kFoldoverEps) {
    return std::nullopt;  // folded past the center of curvature
  }

  const Vec2 normal = {-ref.tangent.y, ref.tangent.x};
  const Vec2 pos = ref.position + normal * state.d;

  // Arc-length derivatives of d, defined whenever the state is moving along
  // the line; a (near-)standstill degenerates to motion along the tangent.
  double dp = 0.0;   // d' = dd/ds
  double dpp = 0.0;  // d'' = d2d/ds2
  if (std::abs(state.s_dot) > 1e-9) {
    dp = state.d_dot / state.s_dot;
    dpp = (state.d_ddot - dp * state.s_ddot) / (state.s_dot * state.s_dot);
  }

  const double delta_theta = std::atan2(dp, one_minus_kd);
  const double cos_dt = std::cos(delta_theta);
  const double tan_dt = dp / one_minus_kd;

  const double kd_prime =
      ref.curvature_rate * state.d + ref.curvature * dp;
  const double kappa =
      ((dpp + kd_prime * tan_dt) * cos_dt * cos_dt / one_minus_kd +
       ref.curvature) *
      cos_dt / one_minus_kd;

  const double v = std::sqrt(one_minus_kd * one_minus_kd * state.s_dot *
                                 state.s_dot +
                             state.d_dot * state.d_dot);

  const double delta_theta_prime = one_minus_kd / cos_dt * kappa - ref.curvature;
  const double a = state.s_ddot * one_minus_kd / cos_dt +
                   state.s_dot * state.s_dot / cos_dt *
                       (dp * delta_theta_prime - kd_prime);

  CartesianState out;
  out.x = pos.x;
  out.y = pos.y;
  out.theta = wrap_angle(ref.heading + delta_theta);
  out.v = v;
  out.a = a;
  out.kappa = kappa;
  return out;
}

FrenetState ReferenceLine::to_frenet(const CartesianPose& pose) const {
  const Vec2 q = {pose.x, pose.y};

  // Coarse pass: nearest sample, first (smallest s) on exact ties.
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const Vec2 p = {samples_[i].x, samples_[i].y};
    const double d2 = (q - p).squared_norm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }

  // Refine the foot point with a few Newton steps on (q - p(s)) . p'(s) = 0
  // inside the neighborhood of the winning sample.
  const double s_lo = std::max(0.0, samples_[best].s - spacing_);
  const double s_hi = std::min(length(), samples_[best].s + spacing_);
  double s = samples_[best].s;
  for (int iter = 0; iter < 20; ++iter) {
    const LinePoint lp = at(s);
    const Vec2 diff = q - lp.position;
    const double g = diff.dot(lp.tangent);
    // p'' = kappa * n for the unit-speed curve.
    const Vec2 normal = {-lp.tangent.y, lp.tangent.x};
    const double gp = -1.0 + diff.dot(normal * lp.curvature);
    if (std::abs(gp) < 1e-12) break;
    const double step = g / gp;
    s = std::clamp(s - step, s_lo, s_hi);
    if (std::abs(step) < 1e-10) break;
  }

  const LinePoint lp = at(s);
  const Vec2 normal = {-lp.tangent.y, lp.tangent.x};
  const Vec2 diff = q - lp.position;
  const double d = diff.dot(normal);
  if (std::abs(d) > kCorridorHalfWidth) {
    throw std::out_of_range("pose outside the reference-line corridor");
  }

  const double delta_theta = angle_diff(pose.theta, lp.heading);
  const double one_minus_kd = 1.0 - lp.curvature * d;

  FrenetState out;
  out.s = s;
  out.d = d;
  out.s_dot = pose.v * std::cos(delta_theta) / one_minus_kd;
  out.d_dot = pose.v * std::sin(delta_theta);
  // The observed acceleration is treated as tangential to the body path.
  out.s_ddot = pose.a * std::cos(delta_theta) / one_minus_kd;
  out.d_ddot = pose.a * std::sin(delta_theta);
  return out;
}

ReferenceLine build_reference(std::span<const Vec2> waypoints, double ds) {
  if (waypoints.size() < 2) {
    throw std::invalid_argument("reference needs at least two waypoints");
  }
  if (!(ds > 0.0)) {
    throw std::invalid_argument("reference sampling step must be positive");
  }

  std::vector<double> u(waypoints.size()), xs(waypoints.size()),
      ys(waypoints.size());
  u[0] = 0.0;
  xs[0] = waypoints[0].x;
  ys[0] = waypoints[0].y;
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    const double chord = (waypoints[i] - waypoints[i - 1]).norm();
    if (chord < 1e-9) {
      throw std::invalid_argument("duplicate consecutive waypoints");
    }
    u[i] = u[i - 1] + chord;
    xs[i] = waypoints[i].x;
    ys[i] = waypoints[i].y;
  }

  const double u_end = u.back();
  const PlanarSpline spline{CubicSpline1d(u, xs), CubicSpline1d(u, ys)};

  // Dense arc-length table over the chord parameter.
  const double du = std::min(ds, u_end) / 8.0;
  const auto n_table = static_cast<std::size_t>(std::ceil(u_end / du));
  std::vector<double> table_u(n_table + 1), table_s(n_table + 1);
  table_u[0] = 0.0;
  table_s[0] = 0.0;
  for (std::size_t i = 1; i <= n_table; ++i) {
    table_u[i] = u_end * static_cast<double>(i) / static_cast<double>(n_table);
    table_s[i] =
        table_s[i - 1] + arc_length_increment(spline, table_u[i - 1], table_u[i]);
  }
  const double total = table_s.back();

  const auto n = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(total / ds)));
  const double step = total / static_cast<double>(n);

  // Inverts s -> u through the table plus a Newton polish.
  const auto u_of_s = [&](double s_target) {
    const auto it = std::lower_bound(table_s.begin(), table_s.end(), s_target);
    std::size_t hi = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::distance(table_s.begin(), it)), 1,
        n_table);
    const double s0 = table_s[hi - 1];
    const double s1 = table_s[hi];
    const double frac = s1 > s0 ? (s_target - s0) / (s1 - s0) : 0.0;
    double uu = table_u[hi - 1] + frac * (table_u[hi] - table_u[hi - 1]);
    for (int k = 0; k < 4; ++k) {
      const double lo_idx_u = table_u[hi - 1];
      const double err =
          s0 + arc_length_increment(spline, lo_idx_u, uu) - s_target;
      const double sp = spline.speed(uu);
      if (sp < 1e-12) break;
      uu = std::clamp(uu - err / sp, 0.0, u_end);
    }
    return uu;
  };

  std::vector<ReferencePoint> samples(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double s = step * static_cast<double>(k);
    const double uu = k == 0 ? 0.0 : (k == n ? u_end : u_of_s(s));
    ReferencePoint& p = samples[k];
    p.s = s;
    const Vec2 pos = spline.position(uu);
    p.x = pos.x;
    p.y = pos.y;
    p.heading = spline.heading(uu);
    p.curvature = spline.curvature(uu);
  }
  return ReferenceLine(std::move(samples));
}

}  // namespace strada
