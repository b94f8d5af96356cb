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

#ifndef COOPETITION_BARGAINING_HPP_
#define COOPETITION_BARGAINING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coopetition/game.hpp"
#include "coopetition/geometry.hpp"
#include "coopetition/payoff_space.hpp"

namespace coopetition {

// Bargaining problem (S, (a, b)): a candidate polyline (usually a Pareto
// front) with a disagreement point a and a utopia point b. Well-posed
// problems have a < b strictly; the solver does not require (a, b) to lie
// in the bounding interval of S.
struct BargainingProblem {
  std::vector<PayoffPoint> candidate;
  PayoffPoint disagreement;
  PayoffPoint utopia;
};

// Line of payoff pairs whose sum equals the maximum collective payoff,
// reachable by side transfers. `clip` is the bounding interval of the
// region the maximum was taken over; `clipped()` is the portion of the
// line inside it.
struct TUBoundary {
  double vmax = 0.0;
  OrderInterval clip;
  PayoffPoint attained;  // region vertex realizing vmax

  std::optional<Segment> clipped() const;
};

// One named solution concept, with the data needed to re-derive its value.
struct SolutionEntry {
  std::string concept_name;
  bool exists = false;
  PayoffPoint point;
  std::optional<BargainingProblem> problem;
  std::string note;
};

struct SolutionReport {
  std::vector<SolutionEntry> entries;

  const SolutionEntry* find(const std::string& concept_name) const;
};

// Registry of the solution concepts the report can carry.
const std::vector<std::string>& solution_concepts();

// Full record of the rebalancing construction on the transferable utility
// line: the portion cut out by the band of the second player's maximal
// gains, the compromise segment from the initial supremum, and their
// intersection.
struct RebalancingTrace {
  double tu_level = 0.0;      // maximum collective payoff
  Segment tu_portion;         // s: TU line cut by the band
  Segment compromise_segment; // s': initial supremum -> sup s
  PayoffPoint threat;         // supremum of the initial section's region
  PayoffPoint utopia;         // sup s
  PayoffPoint compromise;     // K
  bool beyond_reference = false;  // band generalized past the m = 0 case
};

enum class UtopiaMode { kStandard, kNonStandard };

// Kalai-Smorodinsky (best compromise) solution: the unique point where the
// straight segment [a, b] crosses the candidate polyline. Throws
// NotSolvable when the problem is degenerate, the intersection is empty, or
// it is not a single point.
PayoffPoint kalai_smorodinsky(const BargainingProblem& problem,
                              double tol = kPointTol);

// Point of the front polyline maximizing (p1 - a1)(p2 - a2); ties break
// toward larger p1. Throws NotSolvable("degenerate Nash bargaining") when
// no front point strictly dominates the disagreement point.
PayoffPoint nash_bargaining(const std::vector<PayoffPoint>& front,
                            const PayoffPoint& disagreement);

// Kalai-Smorodinsky solution on the Pareto front of the Nash-path payoffs,
// with that front's extrema as (a, b).
PayoffPoint properly_coopetitive_solution(const CoopetitiveGame& game,
                                          const std::vector<double>& zgrid,
                                          const GridSpec& grid);

// The three compromise problems on the Pareto maximal boundary M of the
// coopetitive payoff space: (M,(a_M,b_M)), (M,(b_N,b_M)), (M,(b#,b_M)).
// Nonexistence is recorded per concept, never thrown.
std::vector<SolutionEntry> compromise_solutions(const CoopetitiveGame& game,
                                                const std::vector<double>& zgrid,
                                                const GridSpec& grid);

// Transferable utility boundary of a payoff region. vmax is exact for the
// convex polygonal hull (maximum over vertices).
TUBoundary tu_boundary(const PayoffRegion& region);

// Rebalancing win-win compromise: intersect the TU-line portion s cut by
// the band of player 2's maximal gains (in the initial section and in the
// whole game) with the segment from the initial supremum to sup s. Throws
// NotSolvable("no coopetitive gain") when player 2 gains nothing.
RebalancingTrace rebalancing_win_win(const CoopetitiveGame& game,
                                     const std::vector<double>& zgrid,
                                     const GridSpec& grid);

// Whether the candidate payoff strictly dominates the supremum L of the
// initial game's payoff core.
bool win_win_check(const PayoffPoint& candidate, const PayoffPoint& L);

// Utopia point on the (unclipped) TU line. Standard: supremum of the line
// portion dominating the threat. Non-standard: supremum of the portion
// bounded by the maximal values, in the initial region and in the whole
// region, of the player who gains more from coopetition; throws
// NotSolvable("tie - nonstandard utopia undefined") when the gains tie.
PayoffPoint utopia_point(const PayoffRegion& region, const TUBoundary& tu,
                         const PayoffPoint& threat, UtopiaMode mode,
                         const PayoffRegion& initial_region);
PayoffPoint utopia_point(const PayoffRegion& region, const TUBoundary& tu,
                         const PayoffPoint& threat);  // standard mode

// --- Assembly from precomputed parts, shared with the report pipeline. ---

// Properly coopetitive solution from the Nash-zone payoff cloud; records
// nonexistence instead of throwing.
SolutionEntry properly_coopetitive_entry(
    const std::vector<PayoffPoint>& nash_zone);

// The three compromise entries from the Pareto boundary M, the Nash-zone
// payoffs, and the family of conservative bi-values.
std::vector<SolutionEntry> compromise_entries(
    const ParetoFront& pareto_boundary,
    const std::vector<PayoffPoint>& nash_zone,
    const std::vector<PayoffPoint>& conservative_values);

// Rebalancing construction from already-computed regions.
RebalancingTrace rebalancing_from_regions(const PayoffRegion& region,
                                          const PayoffRegion& initial_region);

}  // namespace coopetition

#endif  // COOPETITION_BARGAINING_HPP_
