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
#include <random>

#include "doctest.h"

namespace coopetition {
namespace {

TEST_CASE("model payoffs at the anchor profiles") {
  const double m = 0.3, n = 0.5;
  const auto game = build_model(EurozoneParams{m, n});
  CHECK(game.payoff(0.0, 0.0, 0.0) == PayoffPoint{1.0, 0.0});
  CHECK(game.payoff(1.0, 1.0, 0.0) == PayoffPoint{1.5, 1.0 + m});
  CHECK(approx_equal(game.payoff(1.0, 1.0, 1.0), {0.5, 2.0 + m + n}, 1e-12));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH_AS(build_model(EurozoneParams{-0.1, 1.0}),
                       "m must be >= 0", std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_model(EurozoneParams{0.0, 0.0}),
                       "n must be > 0", std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_model(EurozoneParams{0.0, -1.0}),
                       "n must be > 0", std::invalid_argument);
}

TEST_CASE("translation vector values") {
  CHECK(translation_vector({0.0, 1.0}, 0.0) == PayoffPoint{0.0, 0.0});
  CHECK(translation_vector({0.0, 1.0}, 1.0) == PayoffPoint{-1.0, 2.0});
  CHECK(translation_vector({0.0, 2.0}, 0.5) == PayoffPoint{-0.5, 1.5});
}

TEST_CASE("the z-section is the zero-section translated, bitwise") {
  const EurozoneParams params{0.3, 1.7};
  const auto game = build_model(params);
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const PayoffPoint v = translation_vector(params, z);
    const PayoffPoint base = game.payoff(x, y, 0.0);
    const PayoffPoint moved = game.payoff(x, y, z);
    // The payoff shares v's rounding, so the identity is exact.
    CHECK(moved.p1 == base.p1 + v.p1);
    CHECK(moved.p2 == base.p2 + v.p2);
  }
}

TEST_CASE("GDP components reproduce the closed form") {
  const EurozoneParams params{0.3, 0.5};
  const auto comp = model_components(params);
  const auto game = build_model(params);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const PayoffPoint p = game.payoff(x, y, z);
    CHECK(std::fabs(comp.f1(x, y, z) - p.p1) < 1e-12);
    CHECK(std::fabs(comp.f2(x, y, z) - p.p2) < 1e-12);
  }
  // The explicit zero components stay zero.
  CHECK(comp.I1(0.4, 0.2, 0.9) == 0.0);
  CHECK(comp.c2(0.4, 0.2, 0.9) == 0.0);
  CHECK(comp.M2(0.4, 0.2, 0.9) == 0.0);
}

TEST_CASE("player 2's payoff does not depend on x") {
  const auto game = build_model(EurozoneParams{0.3, 0.5});
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double y = u(rng), z = u(rng);
    const double x1 = u(rng), x2 = u(rng);
    CHECK(game.payoff(x1, y, z).p2 == game.payoff(x2, y, z).p2);
  }
}

TEST_CASE("player 1's payoff is increasing in x and decreasing in z") {
  const auto game = build_model(EurozoneParams{0.0, 1.0});
  const double h = 1e-3;
  for (int i = 0; i < 100; ++i) {
    const double x = i / 100.0, z = (i % 10) / 10.0;
    if (x + h <= 1.0)
      CHECK(game.payoff(x + h, 0.5, z).p1 >= game.payoff(x, 0.5, z).p1);
    if (z + h <= 1.0)
      CHECK(game.payoff(x, 0.5, z + h).p1 < game.payoff(x, 0.5, z).p1);
  }
}

TEST_CASE("every section's Nash equilibrium is (1,1)") {
  const auto game = build_model(EurozoneParams{0.0, 1.0});
  for (double z : z_nodes(game, 11)) {
    const auto eq = nash_equilibria(section(game, z), GridSpec{101});
    REQUIRE(eq.size() == 1);
    CHECK(eq[0] == std::pair<double, double>{1.0, 1.0});
  }
}

TEST_CASE("reference solution closed forms") {
  {
    const auto ref = reference_solution(EurozoneParams{0.0, 1.0});
    CHECK(approx_equal(ref.compromise, {11.0 / 6.0, 5.0 / 3.0}, 1e-12));
    CHECK(std::fabs(ref.compromise.p1 + ref.compromise.p2 - 3.5) < 1e-12);
    CHECK(ref.initial_supremum == PayoffPoint{1.5, 1.0});
    CHECK(ref.tu_level == 3.5);
    CHECK(approx_equal(ref.tu_portion.a, {2.5, 1.0}, 1e-12));
    CHECK(approx_equal(ref.tu_portion.b, {0.5, 3.0}, 1e-12));
    CHECK(approx_equal(ref.compromise_segment.a, {1.5, 1.0}, 1e-12));
    CHECK(approx_equal(ref.compromise_segment.b, {2.5, 3.0}, 1e-12));
  }
  {
    const auto ref = reference_solution(EurozoneParams{0.0, 0.5});
    CHECK(approx_equal(ref.compromise, {1.625, 1.375}, 1e-12));
    CHECK(std::fabs(ref.compromise.p1 + ref.compromise.p2 - 3.0) < 1e-12);
  }
  {
    // Vanishing-gain limit: K approaches the initial supremum.
    const auto ref = reference_solution(EurozoneParams{0.0, 1e-4});
    CHECK(approx_equal(ref.compromise, {1.5, 1.0}, 1e-3));
  }
}

TEST_CASE("reference solution refuses m > 0") {
  CHECK_THROWS_WITH_AS(reference_solution(EurozoneParams{0.3, 1.0}),
                       "reference construction requires m = 0",
                       std::invalid_argument);
}

TEST_CASE("closed form and generic construction agree across n") {
  for (double n : {0.1, 0.5, 1.0, 2.0}) {
    const auto ref = reference_solution(EurozoneParams{0.0, n});
    CHECK(approx_equal(ref.compromise, ref.generic.compromise, 1e-9));
    CHECK(std::fabs(ref.tu_level - ref.generic.tu_level) < 1e-9);
    CHECK(win_win_check(ref.compromise, {1.5, 1.0}));
  }
}

TEST_CASE("win-win procedure splits the social pie") {
  {
    const auto plan = win_win_procedure(EurozoneParams{0.0, 1.0});
    CHECK(plan.z_star == 1.0);
    CHECK(plan.bistrategy == std::pair<double, double>{1.0, 1.0});
    CHECK(approx_equal(plan.raw, {0.5, 3.0}, 1e-12));
    CHECK(plan.social_pie == doctest::Approx(3.5).epsilon(1e-12));
    CHECK(approx_equal(plan.split, {11.0 / 6.0, 5.0 / 3.0}, 1e-12));
    CHECK(plan.transfer == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  }
  {
    const auto plan = win_win_procedure(EurozoneParams{0.0, 0.5});
    CHECK(approx_equal(plan.raw, {0.5, 2.5}, 1e-12));
    CHECK(plan.social_pie == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(approx_equal(plan.split, {1.625, 1.375}, 1e-12));
    CHECK(plan.transfer == doctest::Approx(1.125).epsilon(1e-12));
  }
  for (double n : {0.2, 0.7, 1.3}) {
    const auto plan = win_win_procedure(EurozoneParams{0.0, n});
    CHECK(std::fabs(plan.split.p1 + plan.split.p2 - plan.social_pie) < 1e-12);
    CHECK(std::fabs((plan.raw.p1 + plan.transfer) - plan.split.p1) < 1e-12);
    CHECK(std::fabs((plan.raw.p2 - plan.transfer) - plan.split.p2) < 1e-9);
  }
}

}  // namespace
}  // namespace coopetition
