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

#include "refsyn/dsl/families.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "refsyn/abstraction/transformers.hpp"
#include "refsyn/common/error.hpp"

namespace refsyn {

namespace {

bool in_class(TokenClass cls, char c) {
  const auto u = static_cast<unsigned char>(c);
  switch (cls) {
    case TokenClass::Upper:
      return std::isupper(u) != 0;
    case TokenClass::Lower:
      return std::islower(u) != 0;
    case TokenClass::Digits:
      return std::isdigit(u) != 0;
    case TokenClass::Alnum:
      return std::isalnum(u) != 0;
    case TokenClass::Space:
      return std::isspace(u) != 0;
    case TokenClass::Literal:
      return false;
  }
  return false;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

MatchToken class_token(const std::string& name) {
  static const std::pair<const char*, TokenClass> kClasses[] = {
      {"Upper", TokenClass::Upper}, {"Lower", TokenClass::Lower}, {"Digits", TokenClass::Digits},
      {"Alnum", TokenClass::Alnum}, {"Space", TokenClass::Space}};
  for (const auto& [n, cls] : kClasses) {
    if (name == n) return {name, cls, 0};
  }
  // 'c' names a literal token.
  if (name.size() == 3 && name.front() == '\'' && name.back() == '\'') return {name, TokenClass::Literal, name[1]};
  throw GrammarError("unknown match token '" + name + "'");
}

Value concat_fn(std::span<const Value> a) { return as_string(a[0]) + as_string(a[1]); }

Value substr_fn(std::span<const Value> a) {
  const auto& s = as_string(a[0]);
  const std::int64_t i = as_int(a[1]);
  const std::int64_t j = as_int(a[2]);
  if (i < 0 || i > j || j > static_cast<std::int64_t>(s.size())) return Bottom{};
  return s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(j - i));
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> token_matches(const MatchToken& token, const std::string& s) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const auto n = static_cast<std::int64_t>(s.size());
  if (token.cls == TokenClass::Literal) {
    for (std::int64_t i = 0; i < n; ++i) {
      if (s[static_cast<std::size_t>(i)] == token.literal) out.emplace_back(i, i + 1);
    }
    return out;
  }
  std::int64_t i = 0;
  while (i < n) {
    if (!in_class(token.cls, s[static_cast<std::size_t>(i)])) {
      ++i;
      continue;
    }
    std::int64_t j = i;
    while (j < n && in_class(token.cls, s[static_cast<std::size_t>(j)])) ++j;
    out.emplace_back(i, j);
    i = j;
  }
  return out;
}

std::vector<MatchToken> default_match_tokens(const std::vector<std::string>& constant_strings) {
  std::vector<MatchToken> tokens;
  for (const char* name : {"Upper", "Lower", "Digits", "Alnum", "Space"}) tokens.push_back(class_token(name));
  std::set<char> seen;
  for (const auto& s : constant_strings) {
    for (char c : s) {
      if (seen.insert(c).second) tokens.push_back({std::string("'") + c + "'", TokenClass::Literal, c});
    }
  }
  return tokens;
}

Grammar make_string_grammar(StringDslConfig config) {
  if (config.match_tokens.empty()) config.match_tokens = default_match_tokens(config.constant_strings);
  for (auto k : config.ks) {
    if (k < 1) throw GrammarError("occurrence indices must be >= 1");
  }

  enum : int { kE = 0, kV, kP, kTok, kOcc, kDir };
  std::vector<Symbol> symbols{{"e", ValueKind::String},  {"v", ValueKind::String},   {"p", ValueKind::Position},
                              {"tok", ValueKind::Token}, {"occ", ValueKind::Integer}, {"dir", ValueKind::Boolean}};

  std::vector<Rule> rules;
  auto input = [&](int lhs) { rules.push_back({lhs, RuleKind::Input, "x", {}, Bottom{}, "x"}); };
  auto constant = [&](int lhs, Value v, std::string label) {
    rules.push_back({lhs, RuleKind::Constant, label, {}, std::move(v), label});
  };
  auto function = [&](int lhs, std::string name, std::vector<int> args) {
    rules.push_back({lhs, RuleKind::Function, name, std::move(args), Bottom{}, name});
  };

  input(kE);
  for (const auto& c : config.constant_strings) constant(kE, c, "ConstStr(" + quoted(c) + ")");
  function(kE, "Concat", {kE, kE});
  function(kE, "SubStr", {kV, kP, kP});
  input(kV);
  for (auto k : config.constant_positions) constant(kP, k, "ConstPos(" + std::to_string(k) + ")");
  function(kP, "Pos", {kV, kTok, kOcc, kDir});
  for (std::size_t t = 0; t < config.match_tokens.size(); ++t) {
    constant(kTok, static_cast<std::int64_t>(t), config.match_tokens[t].name);
  }
  for (auto k : config.ks) constant(kOcc, k, std::to_string(k));
  if (config.use_start) constant(kDir, std::int64_t{0}, "start");
  if (config.use_end) constant(kDir, std::int64_t{1}, "end");

  auto tokens = std::make_shared<const std::vector<MatchToken>>(config.match_tokens);
  ConcreteFn pos_fn = [tokens](std::span<const Value> a) -> Value {
    const auto& s = as_string(a[0]);
    const auto t = static_cast<std::size_t>(as_int(a[1]));
    const std::int64_t k = as_int(a[2]);
    const bool end = as_int(a[3]) != 0;
    if (t >= tokens->size() || k < 1) return Bottom{};
    const auto matches = token_matches((*tokens)[t], s);
    if (static_cast<std::int64_t>(matches.size()) < k) return Bottom{};
    const auto& m = matches[static_cast<std::size_t>(k - 1)];
    return end ? m.second : m.first;
  };

  std::vector<FunctionDef> functions;
  functions.push_back({"Concat", 2, concat_fn, transformers::concat});
  functions.push_back({"SubStr", 3, substr_fn, transformers::substr});
  functions.push_back({"Pos", 4, pos_fn, transformers::lift_strict(pos_fn)});
  return Grammar("string_v1", std::move(symbols), std::move(rules), kE, std::move(functions), RenderStyle::Calls);
}

Grammar make_arith_grammar() {
  enum : int { kN = 0, kT };
  std::vector<Symbol> symbols{{"n", ValueKind::Integer}, {"t", ValueKind::Integer}};
  std::vector<Rule> rules{
      {kN, RuleKind::Input, "x", {}, Bottom{}, "x"},
      {kN, RuleKind::Function, "+", {kN, kT}, Bottom{}, "+"},
      {kN, RuleKind::Function, "*", {kN, kT}, Bottom{}, "*"},
      {kT, RuleKind::Constant, "2", {}, std::int64_t{2}, "2"},
      {kT, RuleKind::Constant, "3", {}, std::int64_t{3}, "3"},
  };
  ConcreteFn plus = [](std::span<const Value> a) -> Value { return as_int(a[0]) + as_int(a[1]); };
  ConcreteFn times = [](std::span<const Value> a) -> Value { return as_int(a[0]) * as_int(a[1]); };
  std::vector<FunctionDef> functions{{"+", 2, plus, transformers::lift_strict(plus)},
                                     {"*", 2, times, transformers::lift_strict(times)}};
  return Grammar("arith_example", std::move(symbols), std::move(rules), kN, std::move(functions), RenderStyle::Infix);
}

Grammar load_grammar(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("family") || !spec["family"].is_string()) {
    throw GrammarError("grammar spec must be an object with a \"family\" string");
  }
  const auto family = spec["family"].get<std::string>();
  try {
    if (family == "arith_example") return make_arith_grammar();
    if (family == "string_v1") {
      StringDslConfig config;
      if (spec.contains("constants")) config.constant_strings = spec["constants"].get<std::vector<std::string>>();
      if (spec.contains("positions")) config.constant_positions = spec["positions"].get<std::vector<std::int64_t>>();
      if (spec.contains("ks")) config.ks = spec["ks"].get<std::vector<std::int64_t>>();
      if (spec.contains("tokens")) {
        for (const auto& name : spec["tokens"].get<std::vector<std::string>>()) {
          config.match_tokens.push_back(class_token(name));
        }
      }
      return make_string_grammar(std::move(config));
    }
  } catch (const nlohmann::json::exception& e) {
    throw GrammarError(std::string("malformed grammar parameters: ") + e.what());
  }
  throw GrammarError("unknown grammar family '" + family + "'");
}

}  // namespace refsyn
