// Copyright 2026 The Coopetition Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "coopetition/report.hpp"
#include "coopetition/svg.hpp"
#include "coopetition/version.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNotSolvable = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw coopetition::ConfigError("cannot write output: " + path);
  out << content;
  if (!out) throw coopetition::ConfigError("cannot write output: " + path);
}

std::string plot_title(const coopetition::RunConfig& config) {
  std::ostringstream os;
  os << "coopetitive payoff space: " << config.model;
  if (config.model == "eurozone")
    os << " (m=" << config.m << ", n=" << config.n << ")";
  return os.str();
}

int run_solve_command(const coopetition::RunConfig& config) {
  const coopetition::SolveResult result = coopetition::run_solve(config);
  const auto doc = coopetition::report_json(config, result);
  write_output(config.out, coopetition::dump_json(doc));
  if (config.strict && !coopetition::all_concepts_exist(result)) {
    std::cerr << "strict mode: some requested solution concepts do not exist"
              << std::endl;
    return kExitNotSolvable;
  }
  return 0;
}

int run_plot_command(const coopetition::RunConfig& config) {
  const coopetition::SolveResult result = coopetition::run_solve(config);
  write_output(config.plot_out,
               coopetition::render_svg(result.analysis, plot_title(config)));
  if (config.strict && !coopetition::all_concepts_exist(result)) {
    std::cerr << "strict mode: some requested solution concepts do not exist"
              << std::endl;
    return kExitNotSolvable;
  }
  return 0;
}

int run_scan_command(const coopetition::RunConfig& config, double n_min,
                     double n_max, int samples) {
  if (config.m != 0.0)
    throw coopetition::ConfigError(
        "invalid --m: scan uses the m = 0 rebalancing construction");
  if (config.grid_resolution < 2)
    throw coopetition::ConfigError("invalid --grid: resolution must be >= 2");
  const std::string csv = coopetition::scan_csv(
      n_min, n_max, samples, coopetition::GridSpec{config.grid_resolution});
  write_output(config.out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coopetitive game solver: payoff spaces, Pareto fronts, "
               "bargaining and win-win compromises"};
  app.set_version_flag("--version", coopetition::kVersion);
  app.require_subcommand(1);

  coopetition::RunConfig config;
  double n_min = 0.5, n_max = 2.0;
  int samples = 4;

  auto add_model_flags = [&](CLI::App* cmd) {
    cmd->add_option("--model", config.model,
                    "builtin model name ('eurozone') or path to a game "
                    "definition file");
    cmd->add_option("--m", config.m, "investment-to-export quantity effect");
    cmd->add_option("--n", config.n, "cross-effect of the cooperative variable");
    cmd->add_option("--grid", config.grid_resolution,
                    "sample points per strategy axis");
    cmd->add_option("--zgrid", config.zgrid_size,
                    "sample points of the cooperative interval");
    cmd->add_flag("--strict", config.strict,
                  "exit 3 when a requested concept does not exist");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve a game, emit a JSON report");
  add_model_flags(solve);
  solve->add_option("--concepts", config.concepts,
                    "solution concepts to compute (comma separated)")
      ->delimiter(',');
  solve->add_option("--out", config.out, "report path (default stdout)");

  CLI::App* scan = app.add_subcommand(
      "scan", "sweep n, emit CSV of the rebalancing compromise (m = 0)");
  scan->add_option("--m", config.m, "must be 0 for scan");
  scan->add_option("--grid", config.grid_resolution,
                   "sample points per strategy axis");
  scan->add_option("--n-min", n_min, "lower end of the n range (> 0)");
  scan->add_option("--n-max", n_max, "upper end of the n range");
  scan->add_option("--samples", samples, "number of samples (>= 2)");
  scan->add_option("--out", config.out, "CSV path (default stdout)");

  CLI::App* plot = app.add_subcommand("plot", "render the payoff space as SVG");
  add_model_flags(plot);
  plot->add_option("--concepts", config.concepts,
                   "solution concepts to compute (comma separated)")
      ->delimiter(',');
  plot->add_option("--plot-out", config.plot_out, "SVG path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (solve->parsed()) return run_solve_command(config);
    if (scan->parsed()) return run_scan_command(config, n_min, n_max, samples);
    if (plot->parsed()) return run_plot_command(config);
  } catch (const coopetition::ConfigError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 0;
}
