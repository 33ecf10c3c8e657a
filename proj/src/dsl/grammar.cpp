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

#include "refsyn/dsl/grammar.hpp"

#include <algorithm>
#include <string>

#include "refsyn/common/error.hpp"

namespace refsyn {

Grammar::Grammar(std::string family, std::vector<Symbol> symbols, std::vector<Rule> rules, int start,
                 std::vector<FunctionDef> functions, RenderStyle style)
    : family_(std::move(family)),
      symbols_(std::move(symbols)),
      rules_(std::move(rules)),
      start_(start),
      functions_(std::move(functions)),
      style_(style) {
  const int n = static_cast<int>(symbols_.size());
  if (start_ < 0 || start_ >= n) throw GrammarError("start symbol is not a declared symbol");
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    if (!functions_[i].concrete) throw GrammarError("function '" + functions_[i].name + "' has no concrete semantics");
    if (!function_index_.emplace(functions_[i].name, i).second) {
      throw GrammarError("function '" + functions_[i].name + "' registered twice");
    }
  }
  by_symbol_.assign(symbols_.size(), {});
  rule_function_.assign(rules_.size(), -1);
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const Rule& rule = rules_[r];
    if (rule.lhs < 0 || rule.lhs >= n) throw GrammarError("rule '" + rule.name + "' has an undeclared lhs");
    for (int a : rule.args) {
      if (a < 0 || a >= n) throw GrammarError("rule '" + rule.name + "' has an undeclared argument symbol");
    }
    if (rule.kind == RuleKind::Function) {
      auto it = function_index_.find(rule.name);
      if (it == function_index_.end()) throw GrammarError("function '" + rule.name + "' is not registered");
      if (functions_[it->second].arity != rule.args.size()) {
        throw GrammarError("function '" + rule.name + "' used with arity " + std::to_string(rule.args.size()) +
                           " but registered with arity " + std::to_string(functions_[it->second].arity));
      }
      rule_function_[r] = static_cast<int>(it->second);
    } else if (!rule.args.empty()) {
      throw GrammarError("terminal '" + rule.name + "' cannot take arguments");
    }
    by_symbol_[static_cast<std::size_t>(rule.lhs)].push_back(static_cast<int>(r));
  }
}

int Grammar::symbol_index(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return static_cast<int>(i);
  }
  throw GrammarError("unknown symbol '" + name + "'");
}

bool Grammar::is_string_symbol(int symbol) const {
  return symbols_.at(static_cast<std::size_t>(symbol)).kind == ValueKind::String;
}

bool Grammar::is_input_only(int symbol) const {
  const auto& rs = rules_of(symbol);
  return !rs.empty() && std::all_of(rs.begin(), rs.end(), [&](int r) { return rules_[static_cast<std::size_t>(r)].kind == RuleKind::Input; });
}

const FunctionDef& Grammar::function(const std::string& name) const {
  auto it = function_index_.find(name);
  if (it == function_index_.end()) throw GrammarError("function '" + name + "' is not registered");
  return functions_[it->second];
}

const FunctionDef& Grammar::function_of(int rule) const {
  const int f = rule_function_.at(static_cast<std::size_t>(rule));
  if (f < 0) throw StructuralError("rule '" + rules_.at(static_cast<std::size_t>(rule)).name + "' is a terminal");
  return functions_[static_cast<std::size_t>(f)];
}

}  // namespace refsyn
