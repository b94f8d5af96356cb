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

#ifndef COOPETITION_REPORT_HPP_
#define COOPETITION_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coopetition/analysis.hpp"
#include "coopetition/eurozone.hpp"

namespace coopetition {

// A run configuration the CLI refuses with exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration of one solver run: a builtin model name or the path of a
// game-definition file, model parameters, discretization, and outputs.
struct RunConfig {
  std::string model = "eurozone";
  double m = 0.0;
  double n = 1.0;
  int grid_resolution = 101;
  int zgrid_size = 11;
  std::vector<std::string> concepts = solution_concepts();
  std::string out;       // report JSON path; empty = stdout
  std::string plot_out;  // SVG path; empty = stdout (plot command)
  bool strict = false;

  void validate() const;  // throws ConfigError naming the offending field
};

struct SolveResult {
  CoopetitiveGame game;
  CoopetitiveAnalysis analysis;
  std::optional<ReferenceSolution> reference;  // eurozone, m = 0
  std::optional<WinWinPlan> plan;              // eurozone, m = 0
  std::vector<std::string> notes;
};

// Builds the game named by the config (builtin "eurozone" or a definition
// file) and runs the full analysis.
SolveResult run_solve(const RunConfig& config);

// Deterministic report document for run_solve output.
nlohmann::ordered_json report_json(const RunConfig& config,
                                   const SolveResult& result);

// Serializes with numbers at 17 significant digits so parsing reproduces
// the exact doubles; two runs with equal configs emit identical bytes.
std::string dump_json(const nlohmann::ordered_json& value, int indent = 2);

// True when every requested concept exists in the report (the --strict
// success condition).
bool all_concepts_exist(const SolveResult& result);

// CSV table n -> (K1, K2, pie, transfer) for the rebalancing compromise at
// m = 0, sampled uniformly over [n_min, n_max].
std::string scan_csv(double n_min, double n_max, int samples,
                     const GridSpec& grid = GridSpec{});

}  // namespace coopetition

#endif  // COOPETITION_REPORT_HPP_
