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

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "refsyn/abstraction/abstract_value.hpp"
#include "refsyn/dsl/value.hpp"

namespace refsyn {

struct Symbol {
  std::string name;
  ValueKind kind = ValueKind::String;
};

enum class RuleKind { Input, Constant, Function };

// One alternative of a nonterminal: the input variable, a constant terminal,
// or a built-in function applied to argument symbols.
struct Rule {
  int lhs = 0;
  RuleKind kind = RuleKind::Function;
  std::string name;       // function name, "x" for the input, terminal label for constants
  std::vector<int> args;  // argument symbols; empty for terminals
  Value constant;         // Constant rules only
  std::string label;      // leaf rendering, e.g. `ConstStr("-")` or `2`

  bool is_terminal() const { return kind != RuleKind::Function; }
  std::size_t arity() const { return args.size(); }
};

// Concrete semantics; never called with a bottom argument.
using ConcreteFn = std::function<Value(std::span<const Value>)>;
// Abstract transformer producing a value over the production's lhs symbol.
using AbstractFn = std::function<AbstractValue(std::span<const AbstractValue>, int lhs)>;

struct FunctionDef {
  std::string name;
  std::size_t arity = 0;
  ConcreteFn concrete;
  AbstractFn abstract;
};

enum class RenderStyle { Calls, Infix };

// DSL grammar G = (T, N, P, s0) with built-in function semantics attached.
// Immutable after construction.
class Grammar {
 public:
  Grammar(std::string family, std::vector<Symbol> symbols, std::vector<Rule> rules, int start,
          std::vector<FunctionDef> functions, RenderStyle style = RenderStyle::Calls);

  const std::string& family() const { return family_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(int index) const { return rules_.at(static_cast<std::size_t>(index)); }
  int start_symbol() const { return start_; }
  RenderStyle render_style() const { return style_; }

  // Rule indices whose lhs is `symbol`, in declaration order.
  const std::vector<int>& rules_of(int symbol) const { return by_symbol_.at(static_cast<std::size_t>(symbol)); }

  int symbol_index(const std::string& name) const;
  bool is_string_symbol(int symbol) const;
  // True if the symbol's only alternative is the input variable.
  bool is_input_only(int symbol) const;

  const FunctionDef& function(const std::string& name) const;
  // Function definition attached to a Function rule.
  const FunctionDef& function_of(int rule) const;

 private:
  std::string family_;
  std::vector<Symbol> symbols_;
  std::vector<Rule> rules_;
  int start_;
  std::vector<FunctionDef> functions_;
  RenderStyle style_;
  std::vector<std::vector<int>> by_symbol_;
  std::vector<int> rule_function_;
  std::unordered_map<std::string, std::size_t> function_index_;
};

}  // namespace refsyn
