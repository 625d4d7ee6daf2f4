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

// Shared domain types for robot-action to target assignment: robot poses,
// action rosters, Gaussian target beliefs, ground-truth targets and the
// assignment container, plus angle arithmetic and a few small-matrix helpers.

#ifndef RATRACK_CORE_HPP_
#define RATRACK_CORE_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace ratrack {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Error hierarchy. Everything the library throws on a contract violation
// derives from std::runtime_error so callers can catch broadly.
class DegenerateGeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FilterDegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wraps an angle into (-pi, pi]. Throws std::invalid_argument on NaN/inf.
double wrap_angle(double theta);

struct RobotState {
  int id = 0;
  double x1 = 0.0;
  double x2 = 0.0;
  double theta = 0.0;  // always in (-pi, pi]

  RobotState() = default;
  RobotState(int id_, double x1_, double x2_, double theta_)
      : id(id_), x1(x1_), x2(x2_), theta(wrap_angle(theta_)) {}

  Vec2 position() const { return {x1, x2}; }
  bool operator==(const RobotState&) const = default;
};

struct Action {
  int robot_id = 0;
  int action_idx = 0;
  double v = 0.0;      // m/s
  double omega = 0.0;  // rad/s

  bool operator==(const Action&) const = default;
  bool is_null() const { return v == 0.0 && omega == 0.0; }
};

// Per-robot finite action sets. per_robot[i][k] has robot_id == i and
// action_idx == k.
struct ActionRoster {
  std::vector<std::vector<Action>> per_robot;

  ActionRoster() = default;
  explicit ActionRoster(std::vector<std::vector<Action>> actions);

  // Same (v, omega) list for every robot.
  static ActionRoster uniform(int num_robots,
                              std::span<const std::pair<double, double>> commands);

  int num_robots() const { return static_cast<int>(per_robot.size()); }
  std::size_t total_size() const;
  const std::vector<Action>& actions(int robot) const { return per_robot.at(robot); }
  bool contains(const Action& a) const;
};

struct TargetBelief {
  int id = 0;
  Vec2 mean = Vec2::Zero();
  Mat2 cov = Mat2::Identity();
};

struct TargetTruth {
  int id = 0;
  Vec2 pos = Vec2::Zero();
  double v = 0.0;      // speed
  double omega = 0.0;  // rad/s
  double phase = 0.0;  // accumulated heading, rad
  double sigma = 0.0;  // process-noise std, m
};

struct Assignment {
  int tuple_size = 1;
  // per_target[j] is the tuple for target j, ascending by robot_id.
  std::vector<std::vector<Action>> per_target;
  double total_quality = 0.0;
};

enum class ViolationKind {
  kRobotReused,
  kOneActionPerRobot,
  kUnorderedTuple,
  kWrongTupleSize,
  kWrongTargetCount,
  kUnknownAction,
  kNegativeQuality,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Empty result iff the assignment is feasible for the roster and covers
// exactly targets 0..num_targets-1.
std::vector<Violation> validate_assignment(const Assignment& a,
                                           const ActionRoster& roster,
                                           int num_targets);

// Small-matrix helpers.
Mat2 symmetrize(const Mat2& m);
bool is_symmetric_psd(const Mat2& m, double tol = 1e-9);
// Closed-form eigenvalues of a symmetric 2x2, ascending.
Eigen::Vector2d sym_eigenvalues(const Mat2& m);

// Deterministic seed derivation for independent random substreams. Mixing is
// SplitMix64, so nearby (seed, stream, index) triples give unrelated seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index = 0);

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t index = 0) {
  return Rng(derive_seed(seed, stream, index));
}

}  // namespace ratrack

#endif  // RATRACK_CORE_HPP_
