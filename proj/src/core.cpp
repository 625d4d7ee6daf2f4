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

#include "ratrack/core.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace ratrack {

double wrap_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("wrap_angle: non-finite angle");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  // remainder() is exact and lands in [-pi, pi].
  double r = std::remainder(theta, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

ActionRoster::ActionRoster(std::vector<std::vector<Action>> actions)
    : per_robot(std::move(actions)) {
  for (std::size_t i = 0; i < per_robot.size(); ++i) {
    if (per_robot[i].empty()) {
      throw std::invalid_argument("ActionRoster: robot " + std::to_string(i) +
                                  " has no actions");
    }
    for (std::size_t k = 0; k < per_robot[i].size(); ++k) {
      const Action& a = per_robot[i][k];
      if (a.robot_id != static_cast<int>(i) ||
          a.action_idx != static_cast<int>(k)) {
        throw std::invalid_argument("ActionRoster: action ids must be dense");
      }
    }
  }
}

ActionRoster ActionRoster::uniform(
    int num_robots, std::span<const std::pair<double, double>> commands) {
  std::vector<std::vector<Action>> per;
  per.reserve(num_robots);
  for (int i = 0; i < num_robots; ++i) {
    std::vector<Action> acts;
    for (std::size_t k = 0; k < commands.size(); ++k) {
      acts.push_back({i, static_cast<int>(k), commands[k].first,
                      commands[k].second});
    }
    per.push_back(std::move(acts));
  }
  return ActionRoster(std::move(per));
}

std::size_t ActionRoster::total_size() const {
  std::size_t n = 0;
  for (const auto& acts : per_robot) n += acts.size();
  return n;
}

bool ActionRoster::contains(const Action& a) const {
  if (a.robot_id < 0 || a.robot_id >= num_robots()) return false;
  const auto& acts = per_robot[a.robot_id];
  if (a.action_idx < 0 || a.action_idx >= static_cast<int>(acts.size())) {
    return false;
  }
  return acts[a.action_idx] == a;
}

std::vector<Violation> validate_assignment(const Assignment& a,
                                           const ActionRoster& roster,
                                           int num_targets) {
  std::vector<Violation> out;
  auto add = [&out](ViolationKind k, std::string msg) {
    out.push_back({k, std::move(msg)});
  };

  if (a.tuple_size < 1) {
    add(ViolationKind::kWrongTupleSize, "tuple size must be >= 1");
  }
  if (static_cast<int>(a.per_target.size()) != num_targets) {
    std::ostringstream os;
    os << "expected " << num_targets << " tuples, got " << a.per_target.size();
    add(ViolationKind::kWrongTargetCount, os.str());
  }
  if (!(a.total_quality >= 0.0)) {
    add(ViolationKind::kNegativeQuality, "total quality is negative or NaN");
  }

  std::set<int> used;
  for (std::size_t j = 0; j < a.per_target.size(); ++j) {
    const auto& tuple = a.per_target[j];
    const std::string where = "target " + std::to_string(j);
    if (static_cast<int>(tuple.size()) != a.tuple_size) {
      add(ViolationKind::kWrongTupleSize, where + ": wrong tuple size");
    }
    std::set<int> in_tuple;
    for (std::size_t l = 0; l < tuple.size(); ++l) {
      const Action& act = tuple[l];
      if (!roster.contains(act)) {
        add(ViolationKind::kUnknownAction, where + ": action not in roster");
      }
      if (!in_tuple.insert(act.robot_id).second) {
        add(ViolationKind::kOneActionPerRobot,
            where + ": one action per robot per step (robot " +
                std::to_string(act.robot_id) + ")");
        continue;
      }
      if (l > 0 && tuple[l - 1].robot_id > act.robot_id) {
        add(ViolationKind::kUnorderedTuple, where + ": tuple not ordered by robot id");
      }
    }
    for (int r : in_tuple) {
      if (!used.insert(r).second) {
        add(ViolationKind::kRobotReused,
            "robot reused: robot " + std::to_string(r) + " in " + where);
      }
    }
  }
  return out;
}

Mat2 symmetrize(const Mat2& m) { return 0.5 * (m + m.transpose()); }

Eigen::Vector2d sym_eigenvalues(const Mat2& m) {
  const double a = m(0, 0);
  const double d = m(1, 1);
  const double b = 0.5 * (m(0, 1) + m(1, 0));
  const double mid = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), b);
  return {mid - rad, mid + rad};
}

bool is_symmetric_psd(const Mat2& m, double tol) {
  if (std::abs(m(0, 1) - m(1, 0)) > tol) return false;
  return sym_eigenvalues(m)(0) >= -tol;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ stream) ^ index);
}

}  // namespace ratrack
