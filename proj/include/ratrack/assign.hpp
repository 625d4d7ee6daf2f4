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

// Greedy robot-action to target assignment.
//
// Each round scores every (tuple of n robot-actions on distinct robots,
// remaining target) candidate, commits the best one, and removes the chosen
// robots' whole action sets and the chosen target. With n = 1 this is the
// single-robot greedy (1/2 of optimal); with n = 2 the robot-pair greedy
// (1/3 of optimal); in general the total is at least 1/(n+1) of optimal.
// Running time is O(|A|^n M^2) quality evaluations.

#ifndef RATRACK_ASSIGN_HPP_
#define RATRACK_ASSIGN_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ratrack/core.hpp"
#include "ratrack/filter.hpp"
#include "ratrack/motion.hpp"
#include "ratrack/sensing.hpp"

namespace ratrack {

// Scores assigning a robot-action tuple (ascending robot ids) to a target.
using QualityFn = std::function<double(std::span<const Action> tuple, int target)>;

struct CandidateTuple {
  std::vector<Action> actions;
  int target = 0;
  double q = 0.0;
};

// Lexicographic order on (target, r1, a1, r2, a2, ...). Used to break ties
// between equal-quality candidates and between equal-total assignments.
bool candidate_key_less(int target_a, std::span<const Action> a,
                        int target_b, std::span<const Action> b);

// Calls visit(tuple) for every n-tuple of actions on distinct robots drawn
// from `robots` (ascending ids), in (r1, a1, r2, a2, ...) lexicographic
// order. Returns the number of tuples visited.
std::size_t for_each_tuple(int n, std::span<const int> robots,
                           const ActionRoster& roster,
                           const std::function<void(std::span<const Action>)>& visit);

// Number of tuples for_each_tuple would visit.
std::size_t count_tuples(int n, std::span<const int> robots, const ActionRoster& roster);

// Quality of a candidate: step each robot with its action, build the stacked
// observation at the post-action poses and the predicted mean, and score it.
// Co-located geometry scores 0.
double evaluate_candidate(std::span<const Action> tuple,
                          std::span<const RobotState> robots,
                          const TargetBelief& belief, const SensorConfig& sensor,
                          const MotionConfig& motion, QualityMetric metric);

// QualityFn over a fixed set of robots and predicted beliefs.
QualityFn make_quality_fn(std::vector<RobotState> robots,
                          std::vector<TargetBelief> beliefs, SensorConfig sensor,
                          MotionConfig motion, QualityMetric metric);

struct GreedyStats {
  std::size_t evaluations = 0;
  std::vector<double> round_best;     // q committed in each round
  std::vector<double> round_max_seen; // max q evaluated in each round
};

// Throws InfeasibleError when the roster has fewer than n * num_targets robots.
Assignment greedy_assign(int n, const ActionRoster& roster, int num_targets,
                         const QualityFn& q, GreedyStats* stats = nullptr);

Assignment greedy_assign(int n, std::span<const RobotState> robots,
                         const ActionRoster& roster,
                         std::span<const TargetBelief> beliefs,
                         const SensorConfig& sensor, const MotionConfig& motion,
                         QualityMetric metric, GreedyStats* stats = nullptr);

// Robots that no tuple uses keep the null action when their roster has one,
// otherwise their first action (flagged).
struct IdleAction {
  Action action;
  bool fallback = false;  // true when the robot has no null action
};
IdleAction idle_action(const ActionRoster& roster, int robot);

void check_feasible(int n, int num_robots, int num_targets);

}  // namespace ratrack

#endif  // RATRACK_ASSIGN_HPP_
