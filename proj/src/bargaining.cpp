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

#include "coopetition/bargaining.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coopetition {

namespace {

constexpr double kProductTieTol = 1e-12;

double product_gain(const PayoffPoint& p, const PayoffPoint& a) {
  return (p.p1 - a.p1) * (p.p2 - a.p2);
}

SolutionEntry attempt_ks(const std::string& name, BargainingProblem problem) {
  SolutionEntry entry;
  entry.concept_name = name;
  entry.problem = problem;
  try {
    entry.point = kalai_smorodinsky(problem);
    entry.exists = true;
  } catch (const NotSolvable& e) {
    entry.exists = false;
    entry.note = e.what();
  }
  return entry;
}

std::vector<PayoffPoint> nash_zone_cloud(const CoopetitiveGame& game,
                                         const std::vector<double>& zgrid,
                                         const GridSpec& grid) {
  std::vector<PayoffPoint> cloud;
  for (const NashPathEntry& entry : nash_path(game, zgrid, grid))
    cloud.insert(cloud.end(), entry.payoffs.begin(), entry.payoffs.end());
  return cloud;
}

std::vector<PayoffPoint> conservative_cloud(const CoopetitiveGame& game,
                                            const std::vector<double>& zgrid,
                                            const GridSpec& grid) {
  std::vector<PayoffPoint> cloud;
  cloud.reserve(zgrid.size());
  for (double z : zgrid)
    cloud.push_back(conservative_bivalue(section(game, z), grid));
  return cloud;
}

}  // namespace

const std::vector<std::string>& solution_concepts() {
  static const std::vector<std::string> kConcepts = {
      "properly_coopetitive", "pareto_compromise", "nash_pareto_compromise",
      "conservative_pareto_compromise", "tu_rebalancing"};
  return kConcepts;
}

const SolutionEntry* SolutionReport::find(const std::string& concept_name) const {
  for (const auto& e : entries)
    if (e.concept_name == concept_name) return &e;
  return nullptr;
}

std::optional<Segment> TUBoundary::clipped() const {
  const double lo1 = std::max(clip.lo.p1, vmax - clip.hi.p2);
  const double hi1 = std::min(clip.hi.p1, vmax - clip.lo.p2);
  if (lo1 > hi1 + kPointTol) return std::nullopt;
  return Segment{{lo1, vmax - lo1}, {hi1, vmax - hi1}};
}

PayoffPoint kalai_smorodinsky(const BargainingProblem& problem, double tol) {
  const auto& candidate = problem.candidate;
  if (candidate.empty()) throw std::invalid_argument("empty candidate set");
  const PayoffPoint a = problem.disagreement;
  const PayoffPoint b = problem.utopia;

  if (!(a.p1 < b.p1 && a.p2 < b.p2)) {
    // Degenerate segment: [a, b] collapses to a point that either lies on
    // the candidate polyline or misses it.
    if (approx_equal(a, b, tol)) {
      if (point_polyline_distance(a, candidate) <= tol) return a;
      throw NotSolvable("KS solution does not exist (a < b fails)");
    }
    throw NotSolvable("bargaining problem requires a < b strictly");
  }

  const std::vector<PayoffPoint> hits =
      segment_polyline_intersections(Segment{a, b}, candidate, tol);
  if (hits.empty()) throw NotSolvable("KS solution does not exist");
  if (hits.size() > 1) throw NotSolvable("KS solution is not unique");
  return hits.front();
}

PayoffPoint nash_bargaining(const std::vector<PayoffPoint>& front,
                            const PayoffPoint& disagreement) {
  if (front.empty()) throw std::invalid_argument("empty candidate front");

  PayoffPoint best = front.front();
  double best_gain = product_gain(best, disagreement);
  auto consider = [&](const PayoffPoint& p) {
    const double gain = product_gain(p, disagreement);
    if (gain > best_gain + kProductTieTol ||
        (std::fabs(gain - best_gain) <= kProductTieTol && p.p1 > best.p1)) {
      best = p;
      best_gain = gain;
    }
  };

  for (std::size_t i = 0; i + 1 < front.size(); ++i) {
    const PayoffPoint& u = front[i];
    const PayoffPoint& v = front[i + 1];
    const double d1 = v.p1 - u.p1;
    const double d2 = v.p2 - u.p2;
    consider(u);
    consider(v);
    // Interior stationary point of the quadratic gain along the edge.
    const double curvature = d1 * d2;
    if (std::fabs(curvature) > 0.0) {
      const double t = -((u.p1 - disagreement.p1) * d2 +
                         (u.p2 - disagreement.p2) * d1) /
                       (2.0 * curvature);
      if (t > 0.0 && t < 1.0) consider(Segment{u, v}.at(t));
    }
  }
  if (front.size() == 1) consider(front.front());

  if (!(best_gain > 0.0))
    throw NotSolvable("degenerate Nash bargaining");
  return best;
}

SolutionEntry properly_coopetitive_entry(
    const std::vector<PayoffPoint>& nash_zone) {
  SolutionEntry entry;
  entry.concept_name = "properly_coopetitive";
  if (nash_zone.empty()) {
    entry.note = "empty Nash zone";
    return entry;
  }
  const ParetoFront front = pareto_front(nash_zone);
  const OrderInterval box = extrema(front.points);
  return attempt_ks("properly_coopetitive",
                    BargainingProblem{front.points, box.lo, box.hi});
}

PayoffPoint properly_coopetitive_solution(const CoopetitiveGame& game,
                                          const std::vector<double>& zgrid,
                                          const GridSpec& grid) {
  const SolutionEntry entry =
      properly_coopetitive_entry(nash_zone_cloud(game, zgrid, grid));
  if (!entry.exists) throw NotSolvable(entry.note);
  return entry.point;
}

std::vector<SolutionEntry> compromise_entries(
    const ParetoFront& pareto_boundary,
    const std::vector<PayoffPoint>& nash_zone,
    const std::vector<PayoffPoint>& conservative_values) {
  const auto& M = pareto_boundary.points;
  std::vector<SolutionEntry> entries;
  if (M.empty()) {
    for (const char* name : {"pareto_compromise", "nash_pareto_compromise",
                             "conservative_pareto_compromise"}) {
      SolutionEntry e;
      e.concept_name = name;
      e.note = "empty Pareto boundary";
      entries.push_back(std::move(e));
    }
    return entries;
  }

  const OrderInterval boxM = extrema(M);
  entries.push_back(attempt_ks("pareto_compromise",
                               BargainingProblem{M, boxM.lo, boxM.hi}));

  if (nash_zone.empty()) {
    SolutionEntry e;
    e.concept_name = "nash_pareto_compromise";
    e.note = "empty Nash zone";
    entries.push_back(std::move(e));
  } else {
    const PayoffPoint b_nash = extrema(nash_zone).hi;
    entries.push_back(attempt_ks("nash_pareto_compromise",
                                 BargainingProblem{M, b_nash, boxM.hi}));
  }

  if (conservative_values.empty()) {
    SolutionEntry e;
    e.concept_name = "conservative_pareto_compromise";
    e.note = "no conservative values";
    entries.push_back(std::move(e));
  } else {
    const PayoffPoint b_cons = extrema(conservative_values).hi;
    entries.push_back(attempt_ks("conservative_pareto_compromise",
                                 BargainingProblem{M, b_cons, boxM.hi}));
  }
  return entries;
}

std::vector<SolutionEntry> compromise_solutions(const CoopetitiveGame& game,
                                                const std::vector<double>& zgrid,
                                                const GridSpec& grid) {
  const PayoffRegion region = coopetitive_payoff_region(game, zgrid, grid);
  return compromise_entries(region.front, nash_zone_cloud(game, zgrid, grid),
                            conservative_cloud(game, zgrid, grid));
}

TUBoundary tu_boundary(const PayoffRegion& region) {
  const auto& v = region.hull.vertices;
  if (v.empty()) throw std::invalid_argument("degenerate payoff region");
  TUBoundary tu;
  tu.vmax = -std::numeric_limits<double>::infinity();
  for (const auto& p : v) {
    const double sum = p.p1 + p.p2;
    if (sum > tu.vmax) {
      tu.vmax = sum;
      tu.attained = p;
    }
  }
  tu.clip = extrema(v);
  return tu;
}

RebalancingTrace rebalancing_from_regions(const PayoffRegion& region,
                                          const PayoffRegion& initial_region) {
  const TUBoundary tu = tu_boundary(region);
  const OrderInterval box0 = extrema(initial_region.hull.vertices);
  const OrderInterval box_all = extrema(region.hull.vertices);

  const double band_lo = box0.hi.p2;      // player 2's maximal initial gain
  const double band_hi = box_all.hi.p2;   // player 2's maximal coopetitive gain
  const PayoffPoint threat = box0.hi;

  if (band_hi - band_lo <= kPointTol ||
      threat.p1 + threat.p2 >= tu.vmax - kPointTol)
    throw NotSolvable("no coopetitive gain");

  RebalancingTrace trace;
  trace.tu_level = tu.vmax;
  trace.tu_portion = Segment{{tu.vmax - band_lo, band_lo},
                             {tu.vmax - band_hi, band_hi}};
  trace.threat = threat;
  trace.utopia = PayoffPoint{tu.vmax - band_lo, band_hi};  // sup of the portion
  trace.compromise_segment = Segment{threat, trace.utopia};

  const auto hit =
      segment_intersection(trace.tu_portion, trace.compromise_segment);
  if (!hit) throw NotSolvable("rebalancing compromise does not exist");
  trace.compromise = *hit;
  return trace;
}

RebalancingTrace rebalancing_win_win(const CoopetitiveGame& game,
                                     const std::vector<double>& zgrid,
                                     const GridSpec& grid) {
  const PayoffRegion region = coopetitive_payoff_region(game, zgrid, grid);
  const PayoffRegion initial =
      payoff_region(section(game, game.cube.c.lo), grid);
  return rebalancing_from_regions(region, initial);
}

bool win_win_check(const PayoffPoint& candidate, const PayoffPoint& L) {
  return strictly_dominates(candidate, L);
}

PayoffPoint utopia_point(const PayoffRegion& region, const TUBoundary& tu,
                         const PayoffPoint& threat, UtopiaMode mode,
                         const PayoffRegion& initial_region) {
  if (mode == UtopiaMode::kStandard) {
    if (threat.p1 > tu.vmax - threat.p2 + kPointTol)
      throw NotSolvable("empty TU portion above threat");
    return {tu.vmax - threat.p2, tu.vmax - threat.p1};
  }

  const OrderInterval box_all = extrema(region.hull.vertices);
  const OrderInterval box0 = extrema(initial_region.hull.vertices);
  const double gain1 = box_all.hi.p1 - box0.hi.p1;
  const double gain2 = box_all.hi.p2 - box0.hi.p2;
  if (std::fabs(gain1 - gain2) <= kPointTol)
    throw NotSolvable("tie - nonstandard utopia undefined");

  if (gain2 > gain1) {
    if (box0.hi.p2 > box_all.hi.p2 + kPointTol)
      throw NotSolvable("empty TU portion");
    return {tu.vmax - box0.hi.p2, box_all.hi.p2};
  }
  if (box0.hi.p1 > box_all.hi.p1 + kPointTol)
    throw NotSolvable("empty TU portion");
  return {box_all.hi.p1, tu.vmax - box0.hi.p1};
}

PayoffPoint utopia_point(const PayoffRegion& region, const TUBoundary& tu,
                         const PayoffPoint& threat) {
  return utopia_point(region, tu, threat, UtopiaMode::kStandard, region);
}

}  // namespace coopetition
