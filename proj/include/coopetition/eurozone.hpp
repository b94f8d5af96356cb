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

#ifndef COOPETITION_EUROZONE_HPP_
#define COOPETITION_EUROZONE_HPP_

#include <functional>
#include <utility>

#include "coopetition/bargaining.hpp"
#include "coopetition/game.hpp"
#include "coopetition/payoff_space.hpp"

namespace coopetition {

// Parameters of the Germany-Greece instance: m is the quantity effect of
// Greek investment on Greek exports, n the cross-effect of the cooperative
// variable on Greek investment. n must be strictly positive; m may be zero
// (the worked reference case) or positive.
struct EurozoneParams {
  double m = 0.0;
  double n = 1.0;

  void validate() const;
};

// Gross-domestic-demand components of the two payoff functions, kept as
// explicit maps (including the zero ones) so the identity
// f = c + I + X - M stays visible.
struct ModelComponents {
  std::function<double(double, double, double)> c1, I1, X1, M1;
  std::function<double(double, double, double)> c2, I2, X2, M2;

  double f1(double x, double y, double z) const;
  double f2(double x, double y, double z) const;
};

ModelComponents model_components(const EurozoneParams& params);

// The coopetitive game on the unit cube with payoff
//   f(x, y, z) = (x + 1/(x+1) - z, (1+m) y + (1+n) z).
// The payoff is evaluated as base(x, y) + v(z) with the same v as
// translation_vector, so sections satisfy G(z) = G(0) + v(z) bitwise.
CoopetitiveGame build_model(const EurozoneParams& params);

// Cooperative translation vector v(z) = z (-1, 1+n).
PayoffPoint translation_vector(const EurozoneParams& params, double z);

// The analytic Jacobian matrix of the section payoff map as printed in the
// model's derivation; its determinant never vanishes on the square. The
// finite-difference Jacobian of the same map vanishes along the x = 0 edge
// instead; both variants are meaningful inputs to critical_zone.
JacobianFn printed_jacobian(const EurozoneParams& params);

// Closed-form reference for the rebalancing compromise at m = 0, checked
// against the generic construction.
struct ReferenceSolution {
  EurozoneParams params;
  PayoffPoint initial_supremum;    // supremum of the initial section G(0)
  double tu_level = 0.0;           // 5/2 + n
  Segment tu_portion;              // s
  Segment compromise_segment;      // s'
  PayoffPoint compromise;          // K, closed form
  RebalancingTrace generic;        // same construction via the solvers
};

// Requires m = 0 and n > 0. Throws std::invalid_argument otherwise; throws
// std::logic_error if the closed form and the generic path disagree beyond
// 1e-9 (they never should).
ReferenceSolution reference_solution(const EurozoneParams& params,
                                     const GridSpec& grid = GridSpec{});

// The agreed cooperative strategy, the Nash play of the corresponding
// section, and the split of the maximum collective payoff according to the
// rebalancing compromise.
struct WinWinPlan {
  double z_star = 1.0;
  std::pair<double, double> bistrategy{1.0, 1.0};
  double social_pie = 0.0;
  PayoffPoint raw;        // payoff actually realized at (x, y, z_star)
  PayoffPoint split;      // the compromise K
  double transfer = 0.0;  // split1 - raw1; positive: player 2 pays player 1
};

// Requires m = 0 and n > 0.
WinWinPlan win_win_procedure(const EurozoneParams& params,
                             const GridSpec& grid = GridSpec{});

}  // namespace coopetition

#endif  // COOPETITION_EUROZONE_HPP_
