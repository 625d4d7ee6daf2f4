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

#include "ratrack/assign.hpp"

#include <algorithm>
#include <string>

namespace ratrack {
namespace {

void tuple_recurse(int n, std::span<const int> robots, std::size_t start,
                   const ActionRoster& roster, std::vector<Action>& buf,
                   const std::function<void(std::span<const Action>)>& visit,
                   std::size_t& count) {
  if (static_cast<int>(buf.size()) == n) {
    visit(buf);
    ++count;
    return;
  }
  const std::size_t need = static_cast<std::size_t>(n) - buf.size();
  for (std::size_t i = start; i + need <= robots.size(); ++i) {
    for (const Action& a : roster.actions(robots[i])) {
      buf.push_back(a);
      tuple_recurse(n, robots, i + 1, roster, buf, visit, count);
      buf.pop_back();
    }
  }
}

}  // namespace

bool candidate_key_less(int target_a, std::span<const Action> a, int target_b,
                        std::span<const Action> b) {
  if (target_a != target_b) return target_a < target_b;
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t l = 0; l < len; ++l) {
    if (a[l].robot_id != b[l].robot_id) return a[l].robot_id < b[l].robot_id;
    if (a[l].action_idx != b[l].action_idx) return a[l].action_idx < b[l].action_idx;
  }
  return a.size() < b.size();
}

std::size_t for_each_tuple(int n, std::span<const int> robots,
                           const ActionRoster& roster,
                           const std::function<void(std::span<const Action>)>& visit) {
  if (n < 1) throw std::invalid_argument("tuple size must be >= 1");
  std::vector<Action> buf;
  buf.reserve(n);
  std::size_t count = 0;
  tuple_recurse(n, robots, 0, roster, buf, visit, count);
  return count;
}

std::size_t count_tuples(int n, std::span<const int> robots, const ActionRoster& roster) {
  // Elementary symmetric polynomial of degree n in the action-set sizes.
  std::vector<std::size_t> e(n + 1, 0);
  e[0] = 1;
  for (int r : robots) {
    const std::size_t size = roster.actions(r).size();
    for (int k = n; k >= 1; --k) e[k] += e[k - 1] * size;
  }
  return e[n];
}

double evaluate_candidate(std::span<const Action> tuple,
                          std::span<const RobotState> robots,
                          const TargetBelief& belief, const SensorConfig& sensor,
                          const MotionConfig& motion, QualityMetric metric) {
  std::vector<RobotState> moved;
  moved.reserve(tuple.size());
  for (const Action& a : tuple) {
    moved.push_back(robot_step(robots[a.robot_id], a, motion.dt));
  }
  try {
    return quality(belief, build_observation(moved, belief.mean, sensor), metric);
  } catch (const DegenerateGeometryError&) {
    return 0.0;
  }
}

QualityFn make_quality_fn(std::vector<RobotState> robots,
                          std::vector<TargetBelief> beliefs, SensorConfig sensor,
                          MotionConfig motion, QualityMetric metric) {
  return [robots = std::move(robots), beliefs = std::move(beliefs), sensor, motion,
          metric](std::span<const Action> tuple, int target) {
    return evaluate_candidate(tuple, robots, beliefs.at(target), sensor, motion,
                              metric);
  };
}

void check_feasible(int n, int num_robots, int num_targets) {
  if (n < 1) throw InfeasibleError("tuple size must be >= 1");
  if (num_targets < 0) throw InfeasibleError("negative target count");
  if (static_cast<long long>(num_robots) <
      static_cast<long long>(n) * num_targets) {
    throw InfeasibleError("need at least " + std::to_string(n * num_targets) +
                          " robots for " + std::to_string(num_targets) +
                          " targets with tuple size " + std::to_string(n) +
                          ", have " + std::to_string(num_robots));
  }
}

Assignment greedy_assign(int n, const ActionRoster& roster, int num_targets,
                         const QualityFn& q, GreedyStats* stats) {
  check_feasible(n, roster.num_robots(), num_targets);

  std::vector<int> robots(roster.num_robots());
  for (int i = 0; i < roster.num_robots(); ++i) robots[i] = i;
  std::vector<int> targets(num_targets);
  for (int j = 0; j < num_targets; ++j) targets[j] = j;

  Assignment out;
  out.tuple_size = n;
  out.per_target.assign(num_targets, {});

  GreedyStats local;
  GreedyStats& st = stats ? *stats : local;
  st = GreedyStats{};

  while (!targets.empty()) {
    bool found = false;
    double best_q = 0.0;
    double max_seen = 0.0;
    int best_target = -1;
    std::vector<Action> best_tuple;

    for (int j : targets) {
      for_each_tuple(n, robots, roster, [&](std::span<const Action> tuple) {
        const double value = q(tuple, j);
        ++st.evaluations;
        if (!found || value > max_seen) max_seen = value;
        if (!found || value > best_q ||
            (value == best_q &&
             candidate_key_less(j, tuple, best_target, best_tuple))) {
          found = true;
          best_q = value;
          best_target = j;
          best_tuple.assign(tuple.begin(), tuple.end());
        }
      });
    }

    out.per_target[best_target] = best_tuple;
    out.total_quality += best_q;
    st.round_best.push_back(best_q);
    st.round_max_seen.push_back(max_seen);

    for (const Action& a : best_tuple) std::erase(robots, a.robot_id);
    std::erase(targets, best_target);
  }
  return out;
}

Assignment greedy_assign(int n, std::span<const RobotState> robots,
                         const ActionRoster& roster,
                         std::span<const TargetBelief> beliefs,
                         const SensorConfig& sensor, const MotionConfig& motion,
                         QualityMetric metric, GreedyStats* stats) {
  if (static_cast<int>(robots.size()) != roster.num_robots()) {
    throw std::invalid_argument("greedy_assign: robots and roster sizes differ");
  }
  const QualityFn fn = [&](std::span<const Action> tuple, int target) {
    return evaluate_candidate(tuple, robots, beliefs[target], sensor, motion, metric);
  };
  return greedy_assign(n, roster, static_cast<int>(beliefs.size()), fn, stats);
}

IdleAction idle_action(const ActionRoster& roster, int robot) {
  for (const Action& a : roster.actions(robot)) {
    if (a.is_null()) return {a, false};
  }
  return {roster.actions(robot).front(), true};
}

}  // namespace ratrack
