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


// Test-only reference solvers and quality stubs shared by several suites.

#ifndef RATRACK_TESTS_ORACLES_HPP_
#define RATRACK_TESTS_ORACLES_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "ratrack/assign.hpp"

namespace ratrack::oracle {

inline ActionRoster roster_of(int robots, int actions) {
  std::vector<std::pair<double, double>> cmds;
  for (int k = 0; k < actions; ++k) cmds.emplace_back(0.5 * k, 0.0);
  return ActionRoster::uniform(robots, cmds);
}

// Memoized i.i.d. uniform quality per (tuple, target).
class RandomQuality {
 public:
  explicit RandomQuality(std::uint64_t seed) : gen_(seed) {}
  double operator()(std::span<const Action> tuple, int target) {
    std::vector<int> key{target};
    for (const Action& a : tuple) {
      key.push_back(a.robot_id);
      key.push_back(a.action_idx);
    }
    auto it = table_.find(key);
    if (it == table_.end()) {
      it = table_.emplace(key, std::uniform_real_distribution<double>(0.0, 1.0)(gen_)).first;
    }
    return it->second;
  }

 private:
  std::mt19937_64 gen_;
  std::map<std::vector<int>, double> table_;
};

// Best value of giving the robots in `group` to `target`, over action choices.
inline double best_over_actions(const ActionRoster& roster, const std::vector<int>& group,
                                int target, const QualityFn& q) {
  double best = 0.0;
  std::vector<Action> buf;
  std::function<void(std::size_t)> rec = [&](std::size_t l) {
    if (l == group.size()) {
      best = std::max(best, q(buf, target));
      return;
    }
    for (const Action& a : roster.actions(group[l])) {
      buf.push_back(a);
      rec(l + 1);
      buf.pop_back();
    }
  };
  rec(0);
  return best;
}

// Optimum by permuting robots: target j takes robots perm[jn .. jn+n-1].
inline double brute_force_optimum(int n, const ActionRoster& roster, int m,
                                  const QualityFn& q) {
  std::vector<int> perm(roster.num_robots());
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      std::vector<int> group(perm.begin() + j * n, perm.begin() + (j + 1) * n);
      std::sort(group.begin(), group.end());
      total += best_over_actions(roster, group, j, q);
    }
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace ratrack::oracle

#endif  // RATRACK_TESTS_ORACLES_HPP_
