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

#include "coopetition/game.hpp"

#include <cmath>
#include <random>

#include "coopetition/eurozone.hpp"
#include "doctest.h"

namespace coopetition {
namespace {

CoopetitiveGame greek_game(double m = 0.0, double n = 1.0) {
  return build_model(EurozoneParams{m, n});
}

TEST_CASE("section payoff equals the game payoff at the fixed z") {
  const double m = 0.3, n = 1.0;
  const auto game = greek_game(m, n);

  const auto g0 = section(game, 0.0);
  CHECK(g0.payoff(1.0, 1.0) == PayoffPoint{1.5, 1.0 + m});

  const auto g1 = section(game, 1.0);
  CHECK(approx_equal(g1.payoff(1.0, 1.0), {0.5, 2.0 + m + n}, 1e-12));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const auto gz = section(game, z);
    CHECK(gz.payoff(x, y) == game.payoff(x, y, z));
  }
}

TEST_CASE("section rejects z outside the cooperative interval") {
  const auto game = greek_game();
  CHECK_THROWS_WITH_AS(section(game, 1.5), "cooperative strategy out of range",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(section(game, -0.1),
                       "cooperative strategy out of range",
                       std::invalid_argument);
}

TEST_CASE("reassemble round-trips the section family on the grid") {
  const auto game = greek_game(0.0, 1.0);
  const std::vector<double> zgrid = {0.0, 0.5, 1.0};
  std::vector<NormalFormSection> sections;
  for (double z : zgrid) sections.push_back(section(game, z));
  const auto rebuilt = reassemble(sections);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double z : zgrid)
    for (int i = 0; i < 50; ++i) {
      const double x = u(rng), y = u(rng);
      CHECK(rebuilt.payoff(x, y, z) == game.payoff(x, y, z));
    }
}

TEST_CASE("reassemble of a single section is constant in z") {
  const auto game = greek_game();
  const auto rebuilt = reassemble({section(game, 0.0)});
  CHECK(rebuilt.payoff(0.3, 0.7, 0.0) == game.payoff(0.3, 0.7, 0.0));
  CHECK(rebuilt.cube.c.lo == rebuilt.cube.c.hi);
}

TEST_CASE("two sections differ by the cooperative translation vector") {
  const double n = 1.0;
  const auto game = greek_game(0.0, n);
  const auto s0 = section(game, 0.0);
  const auto s1 = section(game, 1.0);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng), y = u(rng);
    const PayoffPoint diff = s1.payoff(x, y) - s0.payoff(x, y);
    CHECK(std::fabs(diff.p1 - (-1.0)) < 1e-12);
    CHECK(std::fabs(diff.p2 - (1.0 + n)) < 1e-12);
  }
}

TEST_CASE("reassemble rejects inconsistent rectangles") {
  const auto game = greek_game();
  auto s0 = section(game, 0.0);
  auto s1 = section(game, 1.0);
  s1.e = Interval{0.0, 2.0};
  CHECK_THROWS_WITH_AS(reassemble({s0, s1}), "inconsistent strategy rectangles",
                       std::invalid_argument);
}

TEST_CASE("the unique Nash equilibrium of every section is (1,1)") {
  for (double m : {0.0, 0.3})
    for (double n : {0.5, 1.0, 2.0}) {
      const auto game = greek_game(m, n);
      for (int res : {11, 101})
        for (double z : {0.0, 0.25, 0.5, 1.0}) {
          const auto eq = nash_equilibria(section(game, z), GridSpec{res});
          REQUIRE(eq.size() == 1);
          CHECK(eq[0].first == 1.0);
          CHECK(eq[0].second == 1.0);
        }
    }
}

TEST_CASE("every bistrategy of a constant game is an equilibrium") {
  const NormalFormSection flat{
      {}, {}, 0.0, [](double, double) { return PayoffPoint{1.0, 2.0}; }};
  const GridSpec grid{5};
  CHECK(nash_equilibria(flat, grid).size() == 25);
}

TEST_CASE("matching pennies has no pure equilibrium at the corners") {
  const NormalFormSection pennies{
      {}, {}, 0.0, [](double x, double y) {
        const double v = (2.0 * x - 1.0) * (2.0 * y - 1.0);
        return PayoffPoint{v, -v};
      }};
  CHECK(nash_equilibria(pennies, GridSpec{2}).empty());
}

TEST_CASE("conservative bi-value of the translated sections") {
  const double m = 0.3, n = 0.5;
  const auto game = greek_game(m, n);
  const GridSpec grid{101};

  const auto v0 = conservative_bivalue(section(game, 0.0), grid);
  CHECK(approx_equal(v0, {1.5, 1.0 + m}, 1e-12));

  for (double z : {0.25, 0.5, 1.0}) {
    const auto vz = conservative_bivalue(section(game, z), grid);
    CHECK(approx_equal(vz, {1.5 - z, 1.0 + m + (1.0 + n) * z}, 1e-12));
  }
}

TEST_CASE("conservative bi-value of the zero game is zero") {
  const NormalFormSection zero{
      {}, {}, 0.0, [](double, double) { return PayoffPoint{0.0, 0.0}; }};
  CHECK(conservative_bivalue(zero, GridSpec{11}) == PayoffPoint{0.0, 0.0});
}

TEST_CASE("payoff core supremum of the initial section") {
  const auto grid = GridSpec{101};
  CHECK(approx_equal(payoff_core_supremum(section(greek_game(0.0), 0.0), grid),
                     {1.5, 1.0}, 1e-12));
  const double m = 0.3;
  CHECK(approx_equal(
      payoff_core_supremum(section(greek_game(m, 1.0), 0.0), grid),
      {1.5, 1.0 + m}, 1e-12));
}

TEST_CASE("payoff core supremum of a single-point payoff space") {
  const NormalFormSection point{
      {}, {}, 0.0, [](double, double) { return PayoffPoint{2.0, -1.0}; }};
  CHECK(payoff_core_supremum(point, GridSpec{5}) == PayoffPoint{2.0, -1.0});
}

TEST_CASE("core supremum dominates the conservative bi-value") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const GridSpec grid{21};
  for (int trial = 0; trial < 20; ++trial) {
    const double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    const NormalFormSection g{
        {}, {}, 0.0, [a, b, c, d](double x, double y) {
          return PayoffPoint{a * x + b * y + c * x * y,
                             d * x + a * y + b * x * y};
        }};
    const auto v = conservative_bivalue(g, grid);
    const auto L = payoff_core_supremum(g, grid);
    CHECK(L.p1 >= v.p1 - 1e-9);
    CHECK(L.p2 >= v.p2 - 1e-9);
  }
}

TEST_CASE("nash path of the Greek model traces the translated supremum") {
  const double m = 0.0, n = 1.0;
  const auto game = greek_game(m, n);
  const GridSpec grid{101};

  const auto path = nash_path(game, {0.0, 1.0}, grid);
  REQUIRE(path.size() == 2);
  REQUIRE(path[0].payoffs.size() == 1);
  REQUIRE(path[1].payoffs.size() == 1);
  CHECK(approx_equal(path[0].payoffs[0], {1.5, 1.0}, 1e-12));
  CHECK(approx_equal(path[1].payoffs[0], {0.5, 3.0}, 1e-12));

  // All Nash payoffs lie on the line through (3/2, 1+m) with direction
  // (-1, 1+n).
  const auto dense = nash_path(game, z_nodes(game, 11), grid);
  for (const auto& entry : dense)
    for (const auto& p : entry.payoffs) {
      const double cross = (p.p1 - 1.5) * (1.0 + n) - (p.p2 - (1.0 + m)) * (-1.0);
      CHECK(std::fabs(cross) < 1e-9);
    }
}

TEST_CASE("nash path of a constant game is constant") {
  const CoopetitiveGame constant{
      StrategyCube{}, [](double, double, double) {
        return PayoffPoint{1.0, 1.0};
      }};
  const auto path = nash_path(constant, {0.0, 0.5, 1.0}, GridSpec{3});
  for (const auto& entry : path) {
    REQUIRE(!entry.payoffs.empty());
    for (const auto& p : entry.payoffs) CHECK(p == PayoffPoint{1.0, 1.0});
  }
}

TEST_CASE("grid nodes hit the interval endpoints exactly") {
  const GridSpec grid{7};
  const auto nodes = grid.nodes(Interval{0.1, 0.9});
  CHECK(nodes.front() == 0.1);
  CHECK(nodes.back() == 0.9);
  CHECK(nodes.size() == 7);
  CHECK_THROWS_AS(GridSpec{1}.validate(), std::invalid_argument);
}

TEST_CASE("round-trip is exact for random polynomial games") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  for (int trial = 0; trial < 25; ++trial) {
    const double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng),
                 e = coef(rng), f = coef(rng);
    const CoopetitiveGame game{
        StrategyCube{}, [=](double x, double y, double z) {
          return PayoffPoint{a + b * x + c * y * z + d * x * y * z,
                             e * z + f * x * y + a * y};
        }};
    std::vector<double> zgrid;
    for (int i = 0; i < 5; ++i) zgrid.push_back(u(rng));
    std::sort(zgrid.begin(), zgrid.end());
    zgrid.erase(std::unique(zgrid.begin(), zgrid.end()), zgrid.end());

    std::vector<NormalFormSection> sections;
    for (double z : zgrid) sections.push_back(section(game, z));
    const auto rebuilt = reassemble(sections);

    for (double z : zgrid)
      for (int i = 0; i < 20; ++i) {
        const double x = u(rng), y = u(rng);
        CHECK(rebuilt.payoff(x, y, z) == game.payoff(x, y, z));
      }
  }
}

}  // namespace
}  // namespace coopetition
