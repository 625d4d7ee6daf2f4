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

#include "ratrack/sensing.hpp"

#include <cmath>

namespace ratrack {
namespace {

double checked_distance(const Vec2& robot_pos, const Vec2& target_pos) {
  const double d = (target_pos - robot_pos).norm();
  if (!(d > kMinSensingDistance)) {
    throw DegenerateGeometryError("robot and target are co-located");
  }
  return d;
}

void check_tuple(std::span<const RobotState> robots, SensorKind kind) {
  if (robots.empty()) {
    throw std::invalid_argument("observation needs at least one robot");
  }
  if (kind == SensorKind::kRangeBearing && robots.size() != 1) {
    throw std::invalid_argument("range-bearing observation takes exactly one robot");
  }
}

}  // namespace

void SensorConfig::validate() const {
  if (!(sigma_r0 > 0.0) || !(sigma_b0 > 0.0)) {
    throw std::invalid_argument("SensorConfig: base stds must be > 0");
  }
  if (!(kappa_r >= 0.0) || !(kappa_b >= 0.0)) {
    throw std::invalid_argument("SensorConfig: growth rates must be >= 0");
  }
}

double range_measure(const RobotState& robot, const Vec2& target_pos) {
  return checked_distance(robot.position(), target_pos);
}

double bearing_measure(const RobotState& robot, const Vec2& target_pos) {
  checked_distance(robot.position(), target_pos);
  const Vec2 delta = target_pos - robot.position();
  return wrap_angle(std::atan2(delta.y(), delta.x()) - robot.theta);
}

Eigen::RowVector2d range_jacobian(const Vec2& robot_pos, const Vec2& target_mean) {
  const double d = checked_distance(robot_pos, target_mean);
  const Vec2 delta = target_mean - robot_pos;
  return {delta.x() / d, delta.y() / d};
}

Eigen::RowVector2d bearing_jacobian(const Vec2& robot_pos, const Vec2& target_mean) {
  const double d = checked_distance(robot_pos, target_mean);
  const Vec2 delta = target_mean - robot_pos;
  const double d2 = d * d;
  return {-delta.y() / d2, delta.x() / d2};
}

double noise_std(Channel channel, double distance, const SensorConfig& cfg) {
  if (channel == Channel::kRange) return cfg.sigma_r0 + cfg.kappa_r * distance;
  return cfg.sigma_b0 + cfg.kappa_b * distance;
}

std::vector<Channel> channels_for(SensorKind kind) {
  switch (kind) {
    case SensorKind::kRangeBearing:
      return {Channel::kRange, Channel::kBearing};
    case SensorKind::kRangeOnly:
      return {Channel::kRange};
    case SensorKind::kBearingOnly:
      return {Channel::kBearing};
  }
  return {};
}

ObservationModel build_observation(std::span<const RobotState> robots,
                                   const Vec2& target_mean,
                                   const SensorConfig& cfg) {
  check_tuple(robots, cfg.kind);
  const auto per_robot = channels_for(cfg.kind);
  const Eigen::Index k =
      static_cast<Eigen::Index>(robots.size() * per_robot.size());

  ObservationModel obs;
  obs.H.resize(k, 2);
  obs.noise_var.resize(k);
  obs.channels.reserve(k);

  Eigen::Index row = 0;
  for (const RobotState& robot : robots) {
    const Vec2 p = robot.position();
    const double d = checked_distance(p, target_mean);
    for (Channel c : per_robot) {
      obs.H.row(row) = c == Channel::kRange ? range_jacobian(p, target_mean)
                                            : bearing_jacobian(p, target_mean);
      const double s = noise_std(c, d, cfg);
      obs.noise_var(row) = s * s;
      obs.channels.push_back(c);
      ++row;
    }
  }
  return obs;
}

Eigen::VectorXd predict_measurement(std::span<const RobotState> robots,
                                    const Vec2& target_pos,
                                    const SensorConfig& cfg) {
  check_tuple(robots, cfg.kind);
  const auto per_robot = channels_for(cfg.kind);
  Eigen::VectorXd z(static_cast<Eigen::Index>(robots.size() * per_robot.size()));
  Eigen::Index row = 0;
  for (const RobotState& robot : robots) {
    for (Channel c : per_robot) {
      z(row++) = c == Channel::kRange ? range_measure(robot, target_pos)
                                      : bearing_measure(robot, target_pos);
    }
  }
  return z;
}

Eigen::VectorXd sample_measurement(std::span<const RobotState> robots,
                                   const Vec2& target_true,
                                   const SensorConfig& cfg, Rng& rng) {
  Eigen::VectorXd z = predict_measurement(robots, target_true, cfg);
  const auto per_robot = channels_for(cfg.kind);
  std::normal_distribution<double> unit(0.0, 1.0);
  Eigen::Index row = 0;
  for (const RobotState& robot : robots) {
    const double d = (target_true - robot.position()).norm();
    for (Channel c : per_robot) {
      const double s = noise_std(c, d, cfg);
      // Draw even when s == 0 so the stream position does not depend on cfg.
      const double w = unit(rng);
      z(row) += s * w;
      if (c == Channel::kBearing) z(row) = wrap_angle(z(row));
      ++row;
    }
  }
  return z;
}

}  // namespace ratrack
