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

#include "coopetition/expression.hpp"

#include <cmath>
#include <random>

#include "coopetition/eurozone.hpp"
#include "doctest.h"

namespace coopetition {
namespace {

const char* kGreekDefinition = R"(# Germany-Greece instance with m = 0.3, n = 1
E = 0 1
F = 0 1
C = 0 1
f1 = x + 1/(x + 1) - z
f2 = 1.3*y + 2*z
)";

TEST_CASE("expression evaluation basics") {
  CHECK(Expression::parse("1 + 2*3").eval(0, 0, 0) == 7.0);
  CHECK(Expression::parse("(1 + 2)*3").eval(0, 0, 0) == 9.0);
  CHECK(Expression::parse("-x + y*z").eval(1.0, 2.0, 3.0) == 5.0);
  CHECK(Expression::parse("x^3").eval(2.0, 0, 0) == 8.0);
  CHECK(Expression::parse("2^2*x").eval(3.0, 0, 0) == 12.0);
  CHECK(Expression::parse("1/(x + 1)").eval(1.0, 0, 0) == 0.5);
}

TEST_CASE("expression parse errors") {
  CHECK_THROWS_AS(Expression::parse("x +"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("(x"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("x y"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("w + 1"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("x^y"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("x^0"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse(""), std::invalid_argument);
}

TEST_CASE("division guard trips on vanishing denominators") {
  const auto expr = Expression::parse("1/(x - 0.5)");
  CHECK(expr.eval(1.0, 0, 0) == 2.0);
  CHECK_THROWS_AS(expr.eval(0.5, 0, 0), std::domain_error);
}

TEST_CASE("definition file encoding the builtin model matches it") {
  const auto def = parse_game_definition(kGreekDefinition);
  const auto file_game = game_from_definition(def);
  const auto builtin = build_model(EurozoneParams{0.3, 1.0});

  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const PayoffPoint a = file_game.payoff(x, y, z);
    const PayoffPoint b = builtin.payoff(x, y, z);
    CHECK(std::fabs(a.p1 - b.p1) < 1e-12);
    CHECK(std::fabs(a.p2 - b.p2) < 1e-12);
  }
}

TEST_CASE("definition file errors carry the line and field") {
  CHECK_THROWS_WITH_AS(parse_game_definition("E = 0 1\nF = 0 1\nC = 0 1\n"
                                             "f1 = x\n"),
                       "missing field f2", std::invalid_argument);

  const std::string dup = "E = 0 1\nE = 0 2\nF = 0 1\nC = 0 1\nf1 = x\nf2 = y\n";
  CHECK_THROWS_AS(parse_game_definition(dup), std::invalid_argument);

  const std::string bad_interval =
      "E = 1 0\nF = 0 1\nC = 0 1\nf1 = x\nf2 = y\n";
  CHECK_THROWS_AS(parse_game_definition(bad_interval), std::invalid_argument);

  const std::string unknown = "E = 0 1\nF = 0 1\nC = 0 1\nG = 0 1\nf1 = x\nf2 = y\n";
  CHECK_THROWS_AS(parse_game_definition(unknown), std::invalid_argument);

  const std::string no_eq = "E 0 1\nF = 0 1\nC = 0 1\nf1 = x\nf2 = y\n";
  CHECK_THROWS_AS(parse_game_definition(no_eq), std::invalid_argument);
}

TEST_CASE("loading rejects denominators that vanish on the cube") {
  const std::string risky =
      "E = 0 1\nF = 0 1\nC = 0 1\nf1 = 1/(x - 0.5)\nf2 = y\n";
  try {
    parse_game_definition(risky);
    FAIL("expected a validation error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("f1") != std::string::npos);
    CHECK(std::string(e.what()).find("denominator") != std::string::npos);
  }
}

TEST_CASE("definition comments and blank lines are ignored") {
  const std::string text =
      "# header\n\nE = 0 1  # Germany\nF = 0 1\nC = 0 1\n"
      "f1 = x  # own consumption\nf2 = y\n";
  const auto def = parse_game_definition(text);
  CHECK(def.cube.e.lo == 0.0);
  CHECK(def.cube.e.hi == 1.0);
  CHECK(def.payoff1.eval(0.25, 0, 0) == 0.25);
}

}  // namespace
}  // namespace coopetition
