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

#ifndef RATRACK_MOTION_HPP_
#define RATRACK_MOTION_HPP_

#include "ratrack/core.hpp"

namespace ratrack {

struct MotionConfig {
  double dt = 0.5;                  // seconds per step
  double world_half_extent = 10.0;  // 20 x 20 m world

  void validate() const;
};

// Unicycle step. The position increment uses the pre-step heading.
RobotState robot_step(const RobotState& s, const Action& a, double dt);

// Deterministic part of the circular target model:
//   pos + v * [cos(phase + dt*omega), sin(phase + dt*omega)].
// The displacement is v per step (not v*dt).
Vec2 target_mean_step(const TargetTruth& t, double dt);

// Noisy step: mean step plus N(0, sigma^2 I), phase advanced by dt*omega.
TargetTruth target_step_sample(const TargetTruth& t, double dt, Rng& rng);

}  // namespace ratrack

#endif  // RATRACK_MOTION_HPP_
