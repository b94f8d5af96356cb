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

#ifndef COOPETITION_GAME_HPP_
#define COOPETITION_GAME_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "coopetition/geometry.hpp"

namespace coopetition {

// Closed real interval of strategies.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double v, double tol = 0.0) const {
    return v >= lo - tol && v <= hi + tol;
  }
  double width() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Strategy triple (E, F, C): individual strategy intervals of the two
// players plus the shared cooperative interval. Defaults to the unit cube.
struct StrategyCube {
  Interval e;
  Interval f;
  Interval c;
};

// Best-response tolerance on payoff differences for grid equilibria.
inline constexpr double kBestResponseTol = 1e-9;

// Two-player coopetitive gain game: a payoff map on the strategy cube with
// the component-wise order on the payoff plane.
struct CoopetitiveGame {
  StrategyCube cube;
  std::function<PayoffPoint(double x, double y, double z)> payoff;
};

// Normal-form game obtained by fixing the cooperative strategy z.
struct NormalFormSection {
  Interval e;
  Interval f;
  double z = 0.0;
  std::function<PayoffPoint(double x, double y)> payoff;
};

// Number of sample points per axis for grid-based solvers.
struct GridSpec {
  int resolution = 101;

  void validate() const;
  // Sample nodes of [iv.lo, iv.hi]; first and last are the exact endpoints.
  std::vector<double> nodes(const Interval& iv) const;
};

// Section G_z of the game: payoff (x, y) -> game.payoff(x, y, z).
// Throws std::invalid_argument("cooperative strategy out of range") when z
// lies outside C.
NormalFormSection section(const CoopetitiveGame& game, double z);

// Inverse of sectioning for a finite family: rebuilds a game whose payoff at
// any section z equals that section's payoff exactly; between section nodes
// the payoff is interpolated linearly in z, and z is clamped to the family's
// range. Sections must share the bistrategy rectangle and have distinct z.
CoopetitiveGame reassemble(const std::vector<NormalFormSection>& sections);

// All grid bistrategies where each strategy is a best response (within tol)
// against the other, best responses taken over the grid. Sorted by (x, y).
std::vector<std::pair<double, double>> nash_equilibria(
    const NormalFormSection& g, const GridSpec& grid,
    double tol = kBestResponseTol);

// Maximin value of each player over the grid.
PayoffPoint conservative_bivalue(const NormalFormSection& g,
                                 const GridSpec& grid);

// Supremum of the payoff core: component-wise supremum of the Pareto-front
// points of the sampled payoff cloud that dominate the conservative
// bi-value. Throws NotSolvable("empty payoff core") when no front point
// does.
PayoffPoint payoff_core_supremum(const NormalFormSection& g,
                                 const GridSpec& grid);

struct NashPathEntry {
  double z = 0.0;
  std::vector<std::pair<double, double>> equilibria;
  std::vector<PayoffPoint> payoffs;
};

// Nash path z -> payoff images of the Nash equilibria of G_z.
std::vector<NashPathEntry> nash_path(const CoopetitiveGame& game,
                                     const std::vector<double>& zgrid,
                                     const GridSpec& grid);

// Evenly spaced cooperative strategies spanning C (both endpoints included).
std::vector<double> z_nodes(const CoopetitiveGame& game, int count);

}  // namespace coopetition

#endif  // COOPETITION_GAME_HPP_
