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

#ifndef COOPETITION_ANALYSIS_HPP_
#define COOPETITION_ANALYSIS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coopetition/bargaining.hpp"
#include "coopetition/game.hpp"
#include "coopetition/payoff_space.hpp"

namespace coopetition {

struct AnalysisOptions {
  GridSpec grid{101};
  int zgrid_size = 11;
  std::vector<std::string> concepts = solution_concepts();
};

// Everything a report needs about one coopetitive game, computed once.
struct CoopetitiveAnalysis {
  std::vector<double> zgrid;
  PayoffRegion region;          // whole-game payoff region
  PayoffRegion initial_region;  // region of the initial section G(c.lo)
  TUBoundary tu;
  std::vector<NashPathEntry> nash;
  std::vector<std::pair<double, PayoffPoint>> conservative;
  std::optional<PayoffPoint> initial_core_supremum;  // L, when the core exists
  std::optional<RebalancingTrace> rebalancing;
  SolutionReport solutions;
};

CoopetitiveAnalysis analyze(const CoopetitiveGame& game,
                            const AnalysisOptions& options);

}  // namespace coopetition

#endif  // COOPETITION_ANALYSIS_HPP_
