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

#ifndef COOPETITION_PAYOFF_SPACE_HPP_
#define COOPETITION_PAYOFF_SPACE_HPP_

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coopetition/game.hpp"
#include "coopetition/geometry.hpp"

namespace coopetition {

// 2x2 Jacobian of a section payoff map at a bistrategy, row-major:
// [ d f1/dx  d f1/dy ; d f2/dx  d f2/dy ].
using JacobianFn = std::function<std::array<double, 4>(double x, double y)>;

// Tolerance below which |det J| marks a bistrategy as critical.
inline constexpr double kCriticalDetTol = 1e-6;
// Step for the central finite-difference Jacobian. The payoff map is
// evaluated up to this far outside the strategy rectangle.
inline constexpr double kJacobianStep = 1e-5;

// Bistrategies where the payoff map's Jacobian determinant vanishes.
struct CriticalZone {
  std::vector<std::pair<double, double>> points;
};

// Polygonal payoff region of a game or section: the convex hull of the
// sampled payoff image, with the Pareto maximal front of its boundary.
struct PayoffRegion {
  Polygon hull;
  ParetoFront front;
  std::string source;  // which game/section and which grid produced it
};

// Payoff images of densely sampled points of the four sides of the strategy
// rectangle; sampling density per side equals the grid resolution.
std::vector<PayoffPoint> transform_boundary(const NormalFormSection& g,
                                            const GridSpec& grid);

// Central finite-difference Jacobian of the section payoff map.
JacobianFn finite_difference_jacobian(const NormalFormSection& g,
                                      double step = kJacobianStep);

// Grid bistrategies with |det J| < tol. Pass an analytic Jacobian when one
// is available; otherwise it is approximated by central differences.
CriticalZone critical_zone(const NormalFormSection& g,
                           const JacobianFn& jacobian, const GridSpec& grid,
                           double tol = kCriticalDetTol);
CriticalZone critical_zone(const NormalFormSection& g, const GridSpec& grid,
                           double tol = kCriticalDetTol);

// Payoff region of a section: hull of the boundary images together with the
// images of the critical zone; the front is extracted from the hull
// boundary densified along its edges.
PayoffRegion payoff_region(const NormalFormSection& g, const GridSpec& grid);
PayoffRegion payoff_region(const NormalFormSection& g, const GridSpec& grid,
                           const JacobianFn& jacobian);

// Payoff region of the whole coopetitive game: hull of the union of the
// section regions over zgrid. The result equals the full payoff space only
// when zgrid spans C; include both endpoints of C for that.
PayoffRegion coopetitive_payoff_region(const CoopetitiveGame& game,
                                       const std::vector<double>& zgrid,
                                       const GridSpec& grid);

// Pareto front of a convex hull, read off its boundary densified with
// `samples` points per edge and simplified back to polyline vertices.
ParetoFront hull_pareto_front(const Polygon& hull, int samples);

}  // namespace coopetition

#endif  // COOPETITION_PAYOFF_SPACE_HPP_
