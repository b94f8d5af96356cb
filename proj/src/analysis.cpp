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

#include "coopetition/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace coopetition {

namespace {

bool requested(const AnalysisOptions& options, const std::string& name) {
  return std::find(options.concepts.begin(), options.concepts.end(), name) !=
         options.concepts.end();
}

}  // namespace

CoopetitiveAnalysis analyze(const CoopetitiveGame& game,
                            const AnalysisOptions& options) {
  for (const auto& name : options.concepts) {
    const auto& known = solution_concepts();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw std::invalid_argument("unknown solution concept '" + name + "'");
  }

  CoopetitiveAnalysis a;
  a.zgrid = z_nodes(game, options.zgrid_size);
  a.region = coopetitive_payoff_region(game, a.zgrid, options.grid);
  const NormalFormSection initial = section(game, game.cube.c.lo);
  a.initial_region = payoff_region(initial, options.grid);
  a.tu = tu_boundary(a.region);
  a.nash = nash_path(game, a.zgrid, options.grid);

  a.conservative.reserve(a.zgrid.size());
  for (double z : a.zgrid)
    a.conservative.emplace_back(
        z, conservative_bivalue(section(game, z), options.grid));

  try {
    a.initial_core_supremum = payoff_core_supremum(initial, options.grid);
  } catch (const NotSolvable&) {
    a.initial_core_supremum.reset();
  }

  std::vector<PayoffPoint> nash_zone;
  for (const auto& entry : a.nash)
    nash_zone.insert(nash_zone.end(), entry.payoffs.begin(),
                     entry.payoffs.end());
  std::vector<PayoffPoint> conservative_values;
  conservative_values.reserve(a.conservative.size());
  for (const auto& [z, v] : a.conservative) conservative_values.push_back(v);

  if (requested(options, "properly_coopetitive"))
    a.solutions.entries.push_back(properly_coopetitive_entry(nash_zone));

  const bool want_pareto = requested(options, "pareto_compromise");
  const bool want_nash_pareto = requested(options, "nash_pareto_compromise");
  const bool want_cons_pareto =
      requested(options, "conservative_pareto_compromise");
  if (want_pareto || want_nash_pareto || want_cons_pareto) {
    for (auto& entry :
         compromise_entries(a.region.front, nash_zone, conservative_values)) {
      if ((entry.concept_name == "pareto_compromise" && want_pareto) ||
          (entry.concept_name == "nash_pareto_compromise" && want_nash_pareto) ||
          (entry.concept_name == "conservative_pareto_compromise" &&
           want_cons_pareto))
        a.solutions.entries.push_back(std::move(entry));
    }
  }

  if (requested(options, "tu_rebalancing")) {
    SolutionEntry entry;
    entry.concept_name = "tu_rebalancing";
    try {
      const RebalancingTrace trace =
          rebalancing_from_regions(a.region, a.initial_region);
      a.rebalancing = trace;
      entry.exists = true;
      entry.point = trace.compromise;
      entry.problem =
          BargainingProblem{{trace.tu_portion.a, trace.tu_portion.b},
                            trace.threat,
                            trace.utopia};
      if (a.initial_core_supremum) {
        entry.note = win_win_check(trace.compromise, *a.initial_core_supremum)
                         ? "win-win versus the initial core supremum"
                         : "not a win-win versus the initial core supremum";
      }
    } catch (const NotSolvable& e) {
      entry.exists = false;
      entry.note = e.what();
    }
    a.solutions.entries.push_back(std::move(entry));
  }

  return a;
}

}  // namespace coopetition
