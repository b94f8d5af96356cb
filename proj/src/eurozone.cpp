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

#include "coopetition/eurozone.hpp"

#include <cmath>
#include <stdexcept>

namespace coopetition {

void EurozoneParams::validate() const {
  if (!(m >= 0.0) || !std::isfinite(m))
    throw std::invalid_argument("m must be >= 0");
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("n must be > 0");
}

double ModelComponents::f1(double x, double y, double z) const {
  return c1(x, y, z) + I1(x, y, z) + X1(x, y, z) - M1(x, y, z);
}

double ModelComponents::f2(double x, double y, double z) const {
  return c2(x, y, z) + I2(x, y, z) + X2(x, y, z) - M2(x, y, z);
}

ModelComponents model_components(const EurozoneParams& params) {
  params.validate();
  const double m = params.m;
  const double n = params.n;
  ModelComponents comp;
  comp.c1 = [](double x, double, double) { return x; };
  comp.I1 = [](double, double, double) { return 0.0; };
  comp.X1 = [](double x, double, double) { return 1.0 / (x + 1.0); };
  comp.M1 = [](double, double, double z) { return z; };
  comp.c2 = [](double, double, double) { return 0.0; };
  comp.I2 = [n](double, double y, double z) { return y + n * z; };
  comp.X2 = [m](double, double y, double z) { return z + m * y; };
  comp.M2 = [](double, double, double) { return 0.0; };
  return comp;
}

PayoffPoint translation_vector(const EurozoneParams& params, double z) {
  return {-z, (1.0 + params.n) * z};
}

CoopetitiveGame build_model(const EurozoneParams& params) {
  params.validate();
  const EurozoneParams p = params;
  const double one_plus_m = 1.0 + params.m;
  auto payoff = [p, one_plus_m](double x, double y, double z) -> PayoffPoint {
    // Evaluated as base(x, y) + v(z); the shared v makes the section
    // translation identity hold bitwise.
    const PayoffPoint v = translation_vector(p, z);
    const double base1 = x + 1.0 / (x + 1.0);
    const double base2 = one_plus_m * y;
    return {base1 + v.p1, base2 + v.p2};
  };
  return CoopetitiveGame{StrategyCube{}, std::move(payoff)};
}

JacobianFn printed_jacobian(const EurozoneParams& params) {
  params.validate();
  const double one_plus_m = 1.0 + params.m;
  return [one_plus_m](double x, double) -> std::array<double, 4> {
    const double inv = 1.0 / ((1.0 + x) * (1.0 + x));
    return {1.0 + inv, 0.0, 0.0, one_plus_m};
  };
}

ReferenceSolution reference_solution(const EurozoneParams& params,
                                     const GridSpec& grid) {
  params.validate();
  if (params.m != 0.0)
    throw std::invalid_argument("reference construction requires m = 0");
  const double n = params.n;

  ReferenceSolution ref;
  ref.params = params;
  ref.initial_supremum = {1.5, 1.0};
  ref.tu_level = 2.5 + n;
  ref.tu_portion = Segment{{1.5 + n, 1.0}, {0.5, 2.0 + n}};
  ref.compromise_segment = Segment{{1.5, 1.0}, {1.5 + n, 2.0 + n}};
  // The compromise segment meets the TU line at parameter t = n / (1 + 2n).
  ref.compromise = {1.5 + n * n / (1.0 + 2.0 * n),
                    1.0 + n * (1.0 + n) / (1.0 + 2.0 * n)};

  const CoopetitiveGame game = build_model(params);
  ref.generic = rebalancing_win_win(game, z_nodes(game, 2), grid);
  const PayoffPoint diff = ref.generic.compromise - ref.compromise;
  if (std::fabs(diff.p1) > 1e-9 || std::fabs(diff.p2) > 1e-9)
    throw std::logic_error(
        "closed-form and generic rebalancing compromises disagree");
  return ref;
}

WinWinPlan win_win_procedure(const EurozoneParams& params,
                             const GridSpec& grid) {
  const ReferenceSolution ref = reference_solution(params, grid);
  const CoopetitiveGame game = build_model(params);

  WinWinPlan plan;
  plan.z_star = game.cube.c.hi;
  plan.bistrategy = {game.cube.e.hi, game.cube.f.hi};
  plan.raw = game.payoff(plan.bistrategy.first, plan.bistrategy.second,
                         plan.z_star);
  plan.social_pie = ref.tu_level;
  plan.split = ref.compromise;
  plan.transfer = plan.split.p1 - plan.raw.p1;
  return plan;
}

}  // namespace coopetition
