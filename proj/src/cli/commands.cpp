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

#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ratrack/cli.hpp"

namespace ratrack::cli {
namespace {

// Flag name -> config key, in the order overrides are applied.
const std::vector<std::pair<std::string, std::string>>& flag_keys() {
  static const std::vector<std::pair<std::string, std::string>> keys = {
      {"--seed", "seed"},           {"--n", "n"},
      {"--robots", "robots"},       {"--targets", "targets"},
      {"--actions", "actions"},     {"--steps", "steps"},
      {"--trials", "trials"},       {"--m-min", "m_min"},
      {"--m-max", "m_max"},         {"--sensor", "sensor"},
      {"--metric", "metric"},       {"--solver", "solver"},
      {"--budget", "budget"},       {"--format", "format"},
      {"--out", "out"},             {"--timings", "timings"},
      {"--exhaustive", "exhaustive"}, {"--dt", "dt"},
      {"--sigma-init", "sigma_init"}, {"--target-sigma", "target_sigma"},
  };
  return keys;
}

struct CommandArgs {
  std::string config_path;
  std::map<std::string, std::string> values;  // keyed by config key
  std::vector<CLI::Option*> options;
};

void add_common(CLI::App* cmd, CommandArgs& args) {
  cmd->add_option("--config", args.config_path, "key = value configuration file");
  for (const auto& [flag, key] : flag_keys()) {
    args.options.push_back(cmd->add_option(flag, args.values[key]));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

RunConfig resolve(const CommandArgs& args) {
  RunConfig cfg;
  if (!args.config_path.empty()) cfg = parse_run_config(read_file(args.config_path));
  const auto& keys = flag_keys();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (args.options[i]->count() > 0) {
      apply_key(cfg, keys[i].second, args.values.at(keys[i].second));
    }
  }
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + cfg.out + "'");
  file << body;
  file.flush();
  if (!file) throw IoError("failed writing output file '" + cfg.out + "'");
}

int cmd_track(const RunConfig& cfg, std::ostream& out) {
  const Solver solver = parse_solver(cfg.solver);
  const OutputFormat format = parse_format(cfg.format);
  const Scenario s = generate_scenario(cfg.seed, scenario_options(cfg, cfg.targets));
  TrackingOptions opts;
  opts.budget = cfg.budget;
  const TrackingResult result = run_tracking(s, solver, cfg.steps, opts);

  std::ostringstream body;
  if (format == OutputFormat::kCsv) {
    write_track_csv(body, result);
  } else {
    write_track_json(body, result);
  }
  emit(cfg, body.str(), out);
  return kOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const OutputFormat format = parse_format(cfg.format);
  const ComparisonResult result = run_comparison(comparison_config(cfg));

  if (!cfg.exhaustive) {
    err << "exhaustive search disabled; reporting greedy and matching bound only\n";
  } else {
    std::set<int> logged;
    for (const ComparisonRecord& rec : result.records) {
      if (!rec.q_opt && logged.insert(rec.num_targets).second) {
        err << "M=" << rec.num_targets << ": " << rec.skip_reason << '\n';
      }
    }
  }

  std::ostringstream body;
  if (format == OutputFormat::kCsv) {
    write_compare_csv(body, result, cfg.timings);
  } else {
    write_compare_json(body, result, cfg.timings);
  }
  emit(cfg, body.str(), out);
  return kOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const int robots = cfg.robots > 0 ? cfg.robots : cfg.n * cfg.targets;
  const BigCount count = count_combinations(cfg.n, robots, cfg.targets, cfg.actions);
  out << count.str() << '\n';
  out << "budget " << cfg.budget << ": "
      << (count > BigCount(cfg.budget) ? "exceeded" : "within") << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy robot-action to target assignment for multi-target tracking",
               "ratrack"};
  app.require_subcommand(1);

  CommandArgs track_args, compare_args, count_args;
  CLI::App* track = app.add_subcommand("track", "closed-loop tracking, per-step metrics");
  add_common(track, track_args);
  CLI::App* compare =
      app.add_subcommand("compare", "greedy vs exhaustive optimum vs matching bound");
  add_common(compare, compare_args);
  CLI::App* count = app.add_subcommand("count", "exact number of feasible assignments");
  add_common(count, count_args);
  std::vector<std::string> positional;
  count->add_option("sizes", positional, "n N M A")->expected(0, 4);

  std::vector<const char*> argv;
  argv.push_back("ratrack");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (track->parsed()) return cmd_track(resolve(track_args), out);
    if (compare->parsed()) return cmd_compare(resolve(compare_args), out, err);
    if (count->parsed()) {
      RunConfig cfg = resolve(count_args);
      if (!positional.empty()) {
        if (positional.size() != 4) throw ConfigError("count takes n N M A");
        apply_key(cfg, "n", positional[0]);
        apply_key(cfg, "robots", positional[1]);
        apply_key(cfg, "targets", positional[2]);
        apply_key(cfg, "actions", positional[3]);
      }
      return cmd_count(cfg, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceededError& e) {
    err << "refused: " << e.what() << '\n';
    return kBudgetRefused;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace ratrack::cli
