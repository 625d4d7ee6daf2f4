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

#include "ratrack/motion.hpp"

#include <cmath>

namespace ratrack {

void MotionConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("MotionConfig: dt must be > 0");
  if (!(world_half_extent > 0.0)) {
    throw std::invalid_argument("MotionConfig: world_half_extent must be > 0");
  }
}

RobotState robot_step(const RobotState& s, const Action& a, double dt) {
  RobotState out = s;
  out.x1 = s.x1 + a.v * dt * std::cos(s.theta);
  out.x2 = s.x2 + a.v * dt * std::sin(s.theta);
  out.theta = wrap_angle(s.theta + dt * a.omega);
  return out;
}

Vec2 target_mean_step(const TargetTruth& t, double dt) {
  const double heading = t.phase + dt * t.omega;
  return t.pos + t.v * Vec2(std::cos(heading), std::sin(heading));
}

TargetTruth target_step_sample(const TargetTruth& t, double dt, Rng& rng) {
  TargetTruth out = t;
  out.pos = target_mean_step(t, dt);
  if (t.sigma > 0.0) {
    std::normal_distribution<double> noise(0.0, t.sigma);
    const double w1 = noise(rng);
    const double w2 = noise(rng);
    out.pos += Vec2(w1, w2);
  }
  out.phase = t.phase + dt * t.omega;
  return out;
}

}  // namespace ratrack
