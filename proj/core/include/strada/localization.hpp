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

#ifndef STRADA_LOCALIZATION_HPP_
#define STRADA_LOCALIZATION_HPP_

#include <Eigen/Dense>

#include "strada/geometry.hpp"
#include "strada/reference_line.hpp"

namespace strada {

/// Raw navigational sensor bundle: geodetic fix, 3-axis rates and
/// accelerations, compass yaw. The planar filter consumes the yaw rate
/// (angular_velocity.z), the forward acceleration (linear_accel.x) and the
/// projected fix; the off-plane components ride along unused.
struct NavSignals {
  double latitude = 0.0;   // deg
  double longitude = 0.0;  // deg
  double altitude = 0.0;   // m
  double angular_velocity_x = 0.0;  // rad/s
  double angular_velocity_y = 0.0;
  double angular_velocity_z = 0.0;
  double linear_accel_x = 0.0;  // m/s^2
  double linear_accel_y = 0.0;
  double linear_accel_z = 0.0;
  double compass_yaw = 0.0;  // rad, in (-pi, pi]
};

/// Equirectangular projection anchored at the map origin; adequate for the
/// small planar scenes the simulator runs.
struct GeoProjection {
  double origin_latitude = 0.0;   // deg
  double origin_longitude = 0.0;  // deg

  static constexpr double kEarthRadius = 6378137.0;  // m

  Vec2 to_local(double latitude, double longitude) const;
  std::pair<double, double> to_geodetic(const Vec2& local) const;
};

/// Filtered planar ego state [x, y, theta, v, a] with its covariance.
struct EgoEstimate {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  double a = 0.0;
  Eigen::Matrix<double, 5, 5> covariance =
      Eigen::Matrix<double, 5, 5>::Identity();
};

struct ImuInput {
  double yaw_rate = 0.0;       // rad/s
  double forward_accel = 0.0;  // m/s^2
};

/// Propagates the planar constant-turn-rate-and-acceleration model one step:
/// position advances with v along theta, theta integrates the gyro rate, v
/// integrates the acceleration state, which is then refreshed from the IMU.
/// Covariance propagates through the model Jacobian plus Q * dt.
EgoEstimate kf_predict(const EgoEstimate& est, const ImuInput& imu, double dt,
                       const Eigen::Matrix<double, 5, 5>& process_noise);

/// Linear measurement update on (x, y, yaw) with the yaw residual wrapped
/// across the +-pi seam; Joseph form keeps the covariance PSD.
EgoEstimate kf_update(const EgoEstimate& est, double meas_x, double meas_y,
                      double meas_yaw, const Eigen::Matrix3d& meas_noise);

/// Projects the estimate onto the reference line; propagates the projection
/// errors of the underlying conversion.
FrenetState estimate_to_frenet(const EgoEstimate& est,
                               const ReferenceLine& ref);

struct LocalizerConfig {
  GeoProjection projection;
  double gnss_sigma = 0.5;      // m, per horizontal axis
  double compass_sigma = 0.05;  // rad
  double imu_sigma = 0.1;       // rad/s and m/s^2, simulated IMU noise
  Eigen::Matrix<double, 5, 1> process_diag{0.01, 0.01, 0.001, 0.1, 0.5};
  Eigen::Matrix<double, 5, 1> initial_variance{1.0, 1.0, 0.1, 1.0, 1.0};
};

/// Stateful wrapper over the predict/update pair; single owner, snapshots
/// of the estimate are safe to share.
class Localizer {
 public:
  explicit Localizer(const LocalizerConfig& config);

  void reset(const Pose2& pose, double v, double a);

  /// One filter step from a sensor bundle sampled dt after the previous one.
  void step(const NavSignals& signals, double dt);

  const EgoEstimate& estimate() const { return estimate_; }

 private:
  LocalizerConfig config_;
  EgoEstimate estimate_;
  Eigen::Matrix<double, 5, 5> process_noise_;
  Eigen::Matrix3d meas_noise_;
};

}  // namespace strada

#endif  // STRADA_LOCALIZATION_HPP_
