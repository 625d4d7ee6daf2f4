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

// Reference solvers the greedy assignment is measured against:
//  - exhaustive search for the exact optimum on small instances,
//  - a max-weight bipartite matching (Hungarian) upper bound obtained by
//    letting a robot use several of its actions in the same step.

#ifndef RATRACK_BASELINES_HPP_
#define RATRACK_BASELINES_HPP_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ratrack/assign.hpp"

namespace ratrack {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 100'000'000;

// Number of complete feasible assignments: ordered choice of disjoint
// n-robot tuples for targets 0..M-1, times the action choices.
// For a uniform roster this is prod_{m<M} C(N - n m, n) A^n.
BigCount count_combinations(int n, int num_robots, int num_targets,
                            int actions_per_robot);
BigCount count_combinations(int n, const ActionRoster& roster, int num_targets);

struct ExhaustiveStats {
  std::uint64_t leaves = 0;
  std::uint64_t evaluations = 0;
};

// Exact optimum by depth-first enumeration over targets in id order. Ties go
// to the lexicographically smallest assignment. Throws BudgetExceededError
// when count_combinations exceeds `budget`.
Assignment exhaustive_assign(int n, const ActionRoster& roster, int num_targets,
                             const QualityFn& q,
                             std::uint64_t budget = kDefaultExhaustiveBudget,
                             ExhaustiveStats* stats = nullptr);

struct WeightMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> w;  // row-major, nonnegative

  WeightMatrix() = default;
  WeightMatrix(int r, int c, double fill = 0.0) : rows(r), cols(c), w(std::size_t(r) * c, fill) {}
  double& operator()(int i, int j) { return w[std::size_t(i) * cols + j]; }
  double operator()(int i, int j) const { return w[std::size_t(i) * cols + j]; }
};

struct Matching {
  std::vector<int> left_to_right;  // -1 when unmatched
  double value = 0.0;
};

// Maximum-weight matching on the zero-padded square matrix, O(k^3).
Matching hungarian_max(const WeightMatrix& w);

// Upper bound on the optimum total quality. Left nodes are all robot-actions,
// right nodes are n copies of every target, and the weight of (a, copy of j)
// is (1/n) * max q(T, j) over tuples T on distinct robots containing a.
// For n = 1 this is the exact optimum of the relaxed problem where one robot
// may commit several actions at once.
double relaxed_upper_bound(int n, const ActionRoster& roster, int num_targets,
                           const QualityFn& q);

}  // namespace ratrack

#endif  // RATRACK_BASELINES_HPP_
