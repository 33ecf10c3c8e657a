/* Copyright 2026 The refsyn Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "refsyn/common/error.hpp"
#include "refsyn/dsl/cost.hpp"
#include "refsyn/dsl/dataset.hpp"
#include "refsyn/dsl/enumerate.hpp"
#include "refsyn/dsl/families.hpp"
#include "refsyn/dsl/program.hpp"

using namespace refsyn;
using refsyn::testing::find_rule;

namespace {

enum : int { kE = 0, kV, kP, kTok, kOcc, kDir };

struct Arith {
  Grammar g = make_arith_grammar();
  int x = find_rule(g, 0, "x");
  int plus = find_rule(g, 0, "+");
  int times = find_rule(g, 0, "*");
  int two = find_rule(g, 1, "2");
  int three = find_rule(g, 1, "3");
};

Program sub(const Grammar& g, Program v, Program i, Program j) {
  return Program::apply(find_rule(g, kE, "SubStr"), {std::move(v), std::move(i), std::move(j)});
}

Program cpos(const Grammar& g, int k) { return Program::leaf(find_rule(g, kP, "ConstPos(" + std::to_string(k) + ")")); }

}  // namespace

TEST_CASE("evaluate: identity and arithmetic") {
  Grammar s = make_string_grammar({});
  CHECK(evaluate(s, Program::leaf(find_rule(s, kE, "x")), std::string("abc")) == Value(std::string("abc")));

  Arith a;
  auto p = Program::apply(a.times, {Program::apply(a.plus, {Program::leaf(a.x), Program::leaf(a.two)}),
                                    Program::leaf(a.three)});
  CHECK(evaluate(a.g, p, std::int64_t{1}) == Value(std::int64_t{9}));
  CHECK(render_program(a.g, p) == "(x + 2) * 3");
}

TEST_CASE("evaluate: substring, concat and constants") {
  StringDslConfig cfg;
  cfg.constant_strings = {"!"};
  Grammar g = make_string_grammar(cfg);
  const Program vx = Program::leaf(find_rule(g, kV, "x"));
  auto p = Program::apply(find_rule(g, kE, "Concat"),
                          {sub(g, vx, cpos(g, 0), cpos(g, 2)), Program::leaf(find_rule(g, kE, "ConstStr(\"!\")"))});
  const std::string in = "hello";
  CHECK(evaluate(g, p, in) == Value(in.substr(0, 2) + "!"));
  CHECK(render_program(g, p) == "Concat(SubStr(x, ConstPos(0), ConstPos(2)), ConstStr(\"!\"))");

  // end-exclusive, out of range and reversed bounds are bottom
  CHECK(evaluate(g, sub(g, vx, cpos(g, 1), cpos(g, 3)), std::string("abc")) == Value(std::string("bc")));
  CHECK(is_bottom(evaluate(g, sub(g, vx, cpos(g, 0), cpos(g, 3)), std::string("ab"))));
  CHECK(is_bottom(evaluate(g, sub(g, vx, cpos(g, 2), cpos(g, 1)), std::string("abcd"))));
  CHECK(evaluate(g, sub(g, vx, cpos(g, 2), cpos(g, 2)), std::string("abcd")) == Value(std::string()));
  // bottom is strict through Concat
  auto bad = Program::apply(find_rule(g, kE, "Concat"), {Program::leaf(find_rule(g, kE, "x")), sub(g, vx, cpos(g, 3), cpos(g, 1))});
  CHECK(is_bottom(evaluate(g, bad, std::string("abcd"))));
}

TEST_CASE("Pos finds the k-th match start or end") {
  Grammar g = make_string_grammar({});
  const Program vx = Program::leaf(find_rule(g, kV, "x"));
  auto pos = [&](const std::string& tok, int k, const std::string& dir) {
    return Program::apply(find_rule(g, kP, "Pos"), {vx, Program::leaf(find_rule(g, kTok, tok)),
                                                     Program::leaf(find_rule(g, kOcc, std::to_string(k))),
                                                     Program::leaf(find_rule(g, kDir, dir))});
  };
  const std::string in = "ab 12 cd 345";
  CHECK(evaluate(g, pos("Digits", 1, "start"), in) == Value(std::int64_t{3}));
  CHECK(evaluate(g, pos("Digits", 2, "end"), in) == Value(std::int64_t{12}));
  CHECK(is_bottom(evaluate(g, pos("Digits", 3, "start"), in)));
  CHECK(evaluate(g, pos("Lower", 2, "start"), in) == Value(std::int64_t{6}));
  CHECK(evaluate(g, sub(g, vx, pos("Digits", 2, "start"), pos("Digits", 2, "end")), in) == Value(std::string("345")));
}

TEST_CASE("token matches are maximal runs; literals match single characters") {
  auto m = token_matches({"Upper", TokenClass::Upper, 0}, "ABcDE f");
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::pair<std::int64_t, std::int64_t>{0, 2});
  CHECK(m[1] == std::pair<std::int64_t, std::int64_t>{3, 5});
  auto dash = token_matches({"'-'", TokenClass::Literal, '-'}, "a--b");
  REQUIRE(dash.size() == 2);
  CHECK(dash[1] == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK(token_matches({"Alnum", TokenClass::Alnum, 0}, "a1 b2").size() == 2);
  CHECK(token_matches({"Space", TokenClass::Space, 0}, "a  b c").size() == 2);
}

TEST_CASE("program_cost") {
  Arith a;
  CHECK(program_cost(a.g, Program::leaf(a.x), CostModel::size()) == 1.0);
  auto p = Program::apply(a.plus, {Program::leaf(a.x), Program::leaf(a.two)});
  CHECK(program_cost(a.g, p, CostModel::size()) == 3.0);
  CostModel m;
  m.function_cost["+"] = 2;
  m.terminal_cost["x"] = 1;
  m.terminal_cost["2"] = 1;
  CHECK(program_cost(a.g, p, m) == 4.0);
}

TEST_CASE("enumerate_programs on the arithmetic grammar") {
  Arith a;
  auto b1 = enumerate_programs(a.g, 1);
  REQUIRE(b1.size() == 1);
  CHECK(render_program(a.g, b1[0]) == "x");

  std::set<std::string> got;
  for (const auto& p : enumerate_programs(a.g, 2)) got.insert(render_program(a.g, p));
  CHECK(got == std::set<std::string>{"x", "x + 2", "x + 3", "x * 2", "x * 3"});
  CHECK(enumerate_programs(a.g, 2).size() == 5);
  CHECK(enumerate_programs(a.g, 0).empty());

  // heights are non-decreasing and every program is distinct
  auto b3 = enumerate_programs(a.g, 3);
  std::set<std::string> seen;
  int last = 0;
  for (const auto& p : b3) {
    CHECK(p.height() >= last);
    CHECK(p.height() <= 3);
    last = p.height();
    CHECK(seen.insert(render_program(a.g, p)).second);
  }
  CHECK(b3.size() == 21);  // x plus 2 ops * 2 constants * 5 programs of height <= 2
}

TEST_CASE("count_programs matches enumeration") {
  Arith a;
  for (int b = 0; b <= 4; ++b) CHECK(count_programs(a.g, b) == static_cast<double>(enumerate_programs(a.g, b).size()));
  Grammar s = make_string_grammar({});
  for (int b = 1; b <= 3; ++b) CHECK(count_programs(s, b) == static_cast<double>(enumerate_programs(s, b).size()));
}

TEST_CASE("enumeration stops when the visitor returns false") {
  Arith a;
  int n = 0;
  enumerate_programs(a.g, 3, [&](const Program&) { return ++n < 4; });
  CHECK(n == 4);
}

TEST_CASE("load_grammar") {
  Grammar a = load_grammar(nlohmann::json{{"family", "arith_example"}});
  CHECK(a.family() == "arith_example");
  CHECK(a.rules().size() == 5);

  Grammar s = load_grammar(nlohmann::json{{"family", "string_v1"}, {"constants", {"-"}}, {"positions", {0, 1, 2, 3}}});
  CHECK(s.family() == "string_v1");
  CHECK_NOTHROW(find_rule(s, kE, "ConstStr(\"-\")"));
  for (int k = 0; k <= 3; ++k) CHECK_NOTHROW(cpos(s, k));
  CHECK_THROWS_AS(cpos(s, 4), std::out_of_range);
  // the constant's character becomes a literal token
  CHECK_NOTHROW(find_rule(s, kTok, "'-'"));

  CHECK_THROWS_AS(load_grammar(nlohmann::json{{"family", "unknown"}}), GrammarError);
  CHECK_THROWS_AS(load_grammar(nlohmann::json{{"family", "string_v1"}, {"ks", {0}}}), GrammarError);
}

TEST_CASE("malformed programs are structural errors, not bottom") {
  Arith a;
  auto bad = Program::apply(a.plus, {Program::leaf(a.x), Program::leaf(a.x)});
  CHECK_THROWS_AS(check_well_formed(a.g, bad), StructuralError);
  CHECK_THROWS_AS(evaluate(a.g, bad, std::int64_t{1}), StructuralError);
  CHECK_THROWS_AS(check_well_formed(a.g, Program::leaf(a.two)), StructuralError);
  CHECK_THROWS_AS(check_well_formed(a.g, Program::apply(a.plus, {Program::leaf(a.x)})), StructuralError);
}

TEST_CASE("datasets must be non-empty and rectangular") {
  CHECK_THROWS_AS(check_dataset({}), StructuralError);
  CHECK_THROWS_AS(check_dataset({{std::string("a")}, {}}), StructuralError);
  CHECK_NOTHROW(check_dataset({{std::string("a")}, {std::string("b")}}));
}

TEST_CASE("property: evaluation is deterministic, compositional and cost is additive") {
  StringDslConfig cfg;
  cfg.constant_strings = {"-", "ab"};
  Grammar g = make_string_grammar(cfg);
  std::mt19937_64 rng(11);
  CostModel m;
  m.function_cost["Concat"] = 2.5;
  m.terminal_cost["x"] = 0.5;
  const std::vector<std::string> inputs{"John Smith", "ab-12 CD", "", "x9y", "2024-10-19"};
  for (int t = 0; t < 500; ++t) {
    Program p = refsyn::testing::random_program(rng, g, kE, 4);
    CHECK_NOTHROW(check_well_formed(g, p));
    for (const auto& in : inputs) {
      const Value v = evaluate(g, p, in);
      CHECK(v == evaluate(g, p, in));
      if (p.is_leaf()) continue;
      std::vector<Value> kids;
      bool bottom = false;
      for (const auto& c : p.children()) {
        kids.push_back(evaluate(g, c, in));
        bottom = bottom || is_bottom(kids.back());
      }
      if (bottom) {
        CHECK(is_bottom(v));
      } else {
        CHECK(v == g.function_of(p.rule()).concrete(kids));
      }
    }
    double sum = m.rule_cost(g, p.rule());
    for (const auto& c : p.children()) sum += program_cost(g, c, m);
    CHECK(program_cost(g, p, m) == doctest::Approx(sum));
  }
}
