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

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace coopetition {

namespace {
constexpr double kDivisionGuard = 1e-12;
}

struct Expression::Node {
  enum class Kind { kNumber, kVariable, kAdd, kSub, kMul, kDiv, kNeg, kPow };

  Kind kind;
  double value = 0.0;     // kNumber
  int variable = 0;       // kVariable: 0 = x, 1 = y, 2 = z
  int exponent = 1;       // kPow
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  double eval(double x, double y, double z) const {
    switch (kind) {
      case Kind::kNumber:
        return value;
      case Kind::kVariable:
        return variable == 0 ? x : (variable == 1 ? y : z);
      case Kind::kAdd:
        return lhs->eval(x, y, z) + rhs->eval(x, y, z);
      case Kind::kSub:
        return lhs->eval(x, y, z) - rhs->eval(x, y, z);
      case Kind::kMul:
        return lhs->eval(x, y, z) * rhs->eval(x, y, z);
      case Kind::kDiv: {
        const double den = rhs->eval(x, y, z);
        if (std::fabs(den) < kDivisionGuard)
          throw std::domain_error("division by near-zero denominator");
        return lhs->eval(x, y, z) / den;
      }
      case Kind::kNeg:
        return -lhs->eval(x, y, z);
      case Kind::kPow: {
        const double base = lhs->eval(x, y, z);
        double acc = 1.0;
        for (int i = 0; i < exponent; ++i) acc *= base;
        return acc;
      }
    }
    throw std::logic_error("unreachable expression node");
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

NodePtr make_binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  NodePtr parse_sum() {
    NodePtr lhs = parse_term();
    for (;;) {
      skip_ws();
      if (consume('+'))
        lhs = make_binary(Node::Kind::kAdd, lhs, parse_term());
      else if (consume('-'))
        lhs = make_binary(Node::Kind::kSub, lhs, parse_term());
      else
        return lhs;
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      skip_ws();
      if (consume('*'))
        lhs = make_binary(Node::Kind::kMul, lhs, parse_factor());
      else if (consume('/'))
        lhs = make_binary(Node::Kind::kDiv, lhs, parse_factor());
      else
        return lhs;
    }
  }

  NodePtr parse_factor() {
    skip_ws();
    if (consume('-')) {
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::kNeg;
      node->lhs = parse_factor();
      return node;
    }
    NodePtr primary = parse_primary();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == start) fail("expected positive integer exponent after '^'");
      const int exponent = std::atoi(text_.substr(start, pos_ - start).c_str());
      if (exponent <= 0) fail("exponent must be a positive integer");
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::kPow;
      node->exponent = exponent;
      node->lhs = std::move(primary);
      return node;
    }
    return primary;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::kVariable;
      node->variable = c == 'x' ? 0 : (c == 'y' ? 1 : 2);
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.c_str() + pos_;
      char* end = nullptr;
      const double value = std::strtod(begin, &end);
      if (end == begin) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - begin);
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::kNumber;
      node->value = value;
      return node;
    }
    fail(std::string("unexpected character '") + c + "'");
    return nullptr;  // unreachable
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::ostringstream os;
    os << "expression error at position " << pos_ << ": " << message;
    throw std::invalid_argument(os.str());
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

Interval parse_interval(const std::string& value, int line,
                        const std::string& key) {
  std::istringstream is(value);
  double lo = 0.0, hi = 0.0;
  if (!(is >> lo >> hi)) {
    std::ostringstream os;
    os << "line " << line << ": field " << key
       << " expects two numbers (lo hi)";
    throw std::invalid_argument(os.str());
  }
  std::string rest;
  if (is >> rest || !(lo <= hi)) {
    std::ostringstream os;
    os << "line " << line << ": field " << key << " is not a valid interval";
    throw std::invalid_argument(os.str());
  }
  return Interval{lo, hi};
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

void validate_component(const Expression& expr, const StrategyCube& cube,
                        const std::string& name) {
  const int kSamples = 11;
  GridSpec sampler{kSamples};
  const std::vector<double> xs = sampler.nodes(cube.e);
  const std::vector<double> ys = sampler.nodes(cube.f);
  const std::vector<double> zs = sampler.nodes(cube.c);
  for (double x : xs)
    for (double y : ys)
      for (double z : zs) {
        double value = 0.0;
        try {
          value = expr.eval(x, y, z);
        } catch (const std::domain_error&) {
          std::ostringstream os;
          os << "field " << name << ": denominator vanishes on the cube near ("
             << x << ", " << y << ", " << z << ")";
          throw std::invalid_argument(os.str());
        }
        if (!std::isfinite(value)) {
          std::ostringstream os;
          os << "field " << name << ": non-finite value on the cube at (" << x
             << ", " << y << ", " << z << ")";
          throw std::invalid_argument(os.str());
        }
      }
}

}  // namespace

Expression::Expression(std::shared_ptr<const Node> root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {}

Expression Expression::parse(const std::string& text) {
  Parser parser(text);
  return Expression(parser.parse(), trim(text));
}

double Expression::eval(double x, double y, double z) const {
  return root_->eval(x, y, z);
}

GameDefinition parse_game_definition(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;

  bool have[5] = {false, false, false, false, false};
  Interval e, f, c;
  std::string f1_src, f2_src;
  int f1_line = 0, f2_line = 0;

  while (std::getline(is, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;

    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "line " << line_no << ": expected key = value";
      throw std::invalid_argument(os.str());
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));

    auto mark = [&](int idx) {
      if (have[idx]) {
        std::ostringstream os;
        os << "line " << line_no << ": duplicate field " << key;
        throw std::invalid_argument(os.str());
      }
      have[idx] = true;
    };

    if (key == "E") {
      mark(0);
      e = parse_interval(value, line_no, key);
    } else if (key == "F") {
      mark(1);
      f = parse_interval(value, line_no, key);
    } else if (key == "C") {
      mark(2);
      c = parse_interval(value, line_no, key);
    } else if (key == "f1") {
      mark(3);
      f1_src = value;
      f1_line = line_no;
    } else if (key == "f2") {
      mark(4);
      f2_src = value;
      f2_line = line_no;
    } else {
      std::ostringstream os;
      os << "line " << line_no << ": unknown field " << key;
      throw std::invalid_argument(os.str());
    }
  }

  const char* names[5] = {"E", "F", "C", "f1", "f2"};
  for (int i = 0; i < 5; ++i)
    if (!have[i])
      throw std::invalid_argument(std::string("missing field ") + names[i]);

  auto parse_payoff = [](const std::string& src, int at_line,
                         const char* name) {
    try {
      return Expression::parse(src);
    } catch (const std::invalid_argument& err) {
      std::ostringstream os;
      os << "line " << at_line << ": field " << name << ": " << err.what();
      throw std::invalid_argument(os.str());
    }
  };

  GameDefinition def{StrategyCube{e, f, c},
                     parse_payoff(f1_src, f1_line, "f1"),
                     parse_payoff(f2_src, f2_line, "f2")};
  validate_component(def.payoff1, def.cube, "f1");
  validate_component(def.payoff2, def.cube, "f2");
  return def;
}

GameDefinition load_game_definition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open game definition: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game_definition(buffer.str());
}

CoopetitiveGame game_from_definition(const GameDefinition& definition) {
  const Expression f1 = definition.payoff1;
  const Expression f2 = definition.payoff2;
  return CoopetitiveGame{definition.cube,
                         [f1, f2](double x, double y, double z) -> PayoffPoint {
                           return {f1.eval(x, y, z), f2.eval(x, y, z)};
                         }};
}

}  // namespace coopetition
