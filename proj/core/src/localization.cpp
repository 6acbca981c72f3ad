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

#include "strada/localization.hpp"

#include <cmath>

namespace strada {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

}  // namespace

Vec2 GeoProjection::to_local(double latitude, double longitude) const {
  const double cos_lat0 = std::cos(origin_latitude * kDegToRad);
  return {
      kEarthRadius * (longitude - origin_longitude) * kDegToRad * cos_lat0,
      kEarthRadius * (latitude - origin_latitude) * kDegToRad,
  };
}

std::pair<double, double> GeoProjection::to_geodetic(const Vec2& local) const {
  const double cos_lat0 = std::cos(origin_latitude * kDegToRad);
  const double latitude = origin_latitude + local.y / kEarthRadius / kDegToRad;
  const double longitude =
      origin_longitude + local.x / (kEarthRadius * cos_lat0) / kDegToRad;
  return {latitude, longitude};
}

EgoEstimate kf_predict(const EgoEstimate& est, const ImuInput& imu, double dt,
                       const Eigen::Matrix<double, 5, 5>& process_noise) {
  EgoEstimate out = est;
  const double c = std::cos(est.theta);
  const double s = std::sin(est.theta);

  out.x = est.x + est.v * c * dt;
  out.y = est.y + est.v * s * dt;
  out.theta = wrap_angle(est.theta + imu.yaw_rate * dt);
  out.v = std::max(0.0, est.v + est.a * dt);
  out.a = imu.forward_accel;

  Eigen::Matrix<double, 5, 5> F = Eigen::Matrix<double, 5, 5>::Identity();
  F(0, 2) = -est.v * s * dt;
  F(0, 3) = c * dt;
  F(1, 2) = est.v * c * dt;
  F(1, 3) = s * dt;
  F(3, 4) = dt;

  out.covariance = F * est.covariance * F.transpose() + process_noise * dt;
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  return out;
}

EgoEstimate kf_update(const EgoEstimate& est, double meas_x, double meas_y,
                      double meas_yaw, const Eigen::Matrix3d& meas_noise) {
  Eigen::Matrix<double, 3, 5> H = Eigen::Matrix<double, 3, 5>::Zero();
  H(0, 0) = 1.0;
  H(1, 1) = 1.0;
  H(2, 2) = 1.0;

  Eigen::Vector3d residual;
  residual << meas_x - est.x, meas_y - est.y, angle_diff(meas_yaw, est.theta);

  const Eigen::Matrix3d S =
      H * est.covariance * H.transpose() + meas_noise;
  const Eigen::Matrix<double, 5, 3> K =
      est.covariance * H.transpose() * S.inverse();
  const Eigen::Matrix<double, 5, 1> delta = K * residual;

  EgoEstimate out = est;
  out.x += delta(0);
  out.y += delta(1);
  out.theta = wrap_angle(est.theta + delta(2));
  out.v = std::max(0.0, est.v + delta(3));
  out.a += delta(4);

  const Eigen::Matrix<double, 5, 5> I = Eigen::Matrix<double, 5, 5>::Identity();
  const Eigen::Matrix<double, 5, 5> IKH = I - K * H;
  out.covariance = IKH * est.covariance * IKH.transpose() +
                   K * meas_noise * K.transpose();
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  return out;
}

FrenetState estimate_to_frenet(const EgoEstimate& est,
                               const ReferenceLine& ref) {
  return ref.to_frenet({est.x, est.y, est.theta, est.v, est.a});
}

Localizer::Localizer(const LocalizerConfig& config) : config_(config) {
  process_noise_ = config.process_diag.asDiagonal();
  meas_noise_ = Eigen::Vector3d(config.gnss_sigma * config.gnss_sigma,
                                config.gnss_sigma * config.gnss_sigma,
                                config.compass_sigma * config.compass_sigma)
                    .asDiagonal();
  estimate_.covariance = config.initial_variance.asDiagonal();
}

void Localizer::reset(const Pose2& pose, double v, double a) {
  estimate_.x = pose.x;
  estimate_.y = pose.y;
  estimate_.theta = pose.heading;
  estimate_.v = v;
  estimate_.a = a;
  estimate_.covariance = config_.initial_variance.asDiagonal();
}

void Localizer::step(const NavSignals& signals, double dt) {
  estimate_ = kf_predict(
      estimate_,
      {signals.angular_velocity_z, signals.linear_accel_x}, dt,
      process_noise_);
  const Vec2 fix =
      config_.projection.to_local(signals.latitude, signals.longitude);
  estimate_ = kf_update(estimate_, fix.x, fix.y, signals.compass_yaw,
                        meas_noise_);
}

}  // namespace strada
