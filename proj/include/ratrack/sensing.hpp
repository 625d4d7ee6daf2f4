// Copyright 2026 The Authors.
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

// Range and bearing measurement models with distance-dependent noise.
//
// A robot at (x1, x2, theta) observing a target at (y1, y2) measures
//   range   r     = |y - x|
//   bearing gamma = atan2(y2 - x2, y1 - x1) - theta
// each with zero-mean Gaussian noise whose standard deviation grows affinely
// with distance: sigma0 + kappa * d. Jacobians are taken with respect to the
// target position, so they do not depend on the robot heading.

#ifndef RATRACK_SENSING_HPP_
#define RATRACK_SENSING_HPP_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "ratrack/core.hpp"

namespace ratrack {

enum class SensorKind { kRangeBearing, kRangeOnly, kBearingOnly };
enum class Channel { kRange, kBearing };

struct SensorConfig {
  SensorKind kind = SensorKind::kRangeBearing;
  double sigma_r0 = 0.25;   // m
  double kappa_r = 0.03;    // m per m
  double sigma_b0 = 0.02;   // rad
  double kappa_b = 0.004;   // rad per m

  void validate() const;
};

// Robots closer than this to the target are treated as co-located.
inline constexpr double kMinSensingDistance = 1e-9;

struct ObservationModel {
  Eigen::Matrix<double, Eigen::Dynamic, 2> H;
  Eigen::VectorXd noise_var;      // diagonal of R
  std::vector<Channel> channels;  // one per row of H

  int rows() const { return static_cast<int>(H.rows()); }
  Eigen::MatrixXd R() const { return noise_var.asDiagonal(); }
};

double range_measure(const RobotState& robot, const Vec2& target_pos);
double bearing_measure(const RobotState& robot, const Vec2& target_pos);

Eigen::RowVector2d range_jacobian(const Vec2& robot_pos, const Vec2& target_mean);
Eigen::RowVector2d bearing_jacobian(const Vec2& robot_pos, const Vec2& target_mean);

double noise_std(Channel channel, double distance, const SensorConfig& cfg);

// Channels each robot contributes under cfg.kind, in stacking order.
std::vector<Channel> channels_for(SensorKind kind);

// Stacked linearized model, one block per robot. RangeBearing takes exactly
// one robot; RangeOnly/BearingOnly take one or more.
ObservationModel build_observation(std::span<const RobotState> robots,
                                   const Vec2& target_mean,
                                   const SensorConfig& cfg);

// Noise-free stacked measurement h(x, y).
Eigen::VectorXd predict_measurement(std::span<const RobotState> robots,
                                    const Vec2& target_pos,
                                    const SensorConfig& cfg);

// h(x, y) + v with per-channel std evaluated at the true distance. Bearing
// channels are wrapped.
Eigen::VectorXd sample_measurement(std::span<const RobotState> robots,
                                   const Vec2& target_true,
                                   const SensorConfig& cfg, Rng& rng);

}  // namespace ratrack

#endif  // RATRACK_SENSING_HPP_
