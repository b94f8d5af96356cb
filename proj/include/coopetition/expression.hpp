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

#ifndef COOPETITION_EXPRESSION_HPP_
#define COOPETITION_EXPRESSION_HPP_

#include <memory>
#include <string>

#include "coopetition/game.hpp"

namespace coopetition {

// Arithmetic expressions over the strategy variables x, y, z: operators
// + - * /, parentheses, numeric literals, and power by a positive integer
// (^). Division is guarded: evaluating with a denominator within 1e-12 of
// zero throws, and game-definition loading rejects components whose
// denominators get that small anywhere on a sampled cube.
class Expression {
 public:
  struct Node;  // AST node, defined in the implementation

  static Expression parse(const std::string& text);

  double eval(double x, double y, double z) const;
  const std::string& source() const { return source_; }

 private:
  Expression(std::shared_ptr<const Node> root, std::string source);

  std::shared_ptr<const Node> root_;
  std::string source_;
};

// Declarative coopetitive game: interval bounds for E, F, C and one payoff
// expression per player.
struct GameDefinition {
  StrategyCube cube;
  Expression payoff1;
  Expression payoff2;
};

// Parses the key = value text format:
//
//   # comment
//   E = 0 1
//   F = 0 1
//   C = 0 1
//   f1 = x + 1/(x + 1) - z
//   f2 = 1.3*y + 2*z
//
// All five keys are required. Loading validates that both payoffs evaluate
// to finite values on the cube corners and on an 11x11x11 sample grid.
// Errors carry the line number and field name.
GameDefinition parse_game_definition(const std::string& text);
GameDefinition load_game_definition(const std::string& path);

CoopetitiveGame game_from_definition(const GameDefinition& definition);

}  // namespace coopetition

#endif  // COOPETITION_EXPRESSION_HPP_
