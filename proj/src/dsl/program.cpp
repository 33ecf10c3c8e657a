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

#include "refsyn/dsl/program.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "refsyn/common/error.hpp"

namespace refsyn {

Program Program::leaf(int rule) { return Program(std::make_shared<const Node>(Node{rule, {}, 1, 1})); }

Program Program::apply(int rule, std::vector<Program> children) {
  int height = 0;
  std::size_t size = 1;
  for (const auto& c : children) {
    height = std::max(height, c.height());
    size += c.size();
  }
  return Program(std::make_shared<const Node>(Node{rule, std::move(children), height + 1, size}));
}

bool operator==(const Program& a, const Program& b) {
  if (a.node_ == b.node_) return true;
  if (a.rule() != b.rule() || a.height() != b.height() || a.size() != b.size()) return false;
  return a.children() == b.children();
}

void check_well_formed(const Grammar& grammar, const Program& program, int symbol) {
  const int r = program.rule();
  if (r < 0 || r >= static_cast<int>(grammar.rules().size())) {
    throw StructuralError("program references unknown rule " + std::to_string(r));
  }
  const Rule& rule = grammar.rule(r);
  if (rule.lhs != symbol) {
    throw StructuralError("rule '" + rule.name + "' cannot derive symbol '" +
                          grammar.symbols()[static_cast<std::size_t>(symbol)].name + "'");
  }
  if (program.children().size() != rule.arity()) {
    throw StructuralError("rule '" + rule.name + "' expects " + std::to_string(rule.arity()) + " children");
  }
  for (std::size_t i = 0; i < rule.args.size(); ++i) check_well_formed(grammar, program.children()[i], rule.args[i]);
}

void check_well_formed(const Grammar& grammar, const Program& program) {
  check_well_formed(grammar, program, grammar.start_symbol());
}

Value evaluate(const Grammar& grammar, const Program& program, const Value& input) {
  const int r = program.rule();
  if (r < 0 || r >= static_cast<int>(grammar.rules().size())) {
    throw StructuralError("program references unknown rule " + std::to_string(r));
  }
  const Rule& rule = grammar.rule(r);
  switch (rule.kind) {
    case RuleKind::Input:
      return input;
    case RuleKind::Constant:
      return rule.constant;
    case RuleKind::Function:
      break;
  }
  if (program.children().size() != rule.arity()) {
    throw StructuralError("rule '" + rule.name + "' expects " + std::to_string(rule.arity()) + " children");
  }
  for (std::size_t i = 0; i < rule.args.size(); ++i) {
    const int c = program.children()[i].rule();
    if (c < 0 || c >= static_cast<int>(grammar.rules().size()) || grammar.rule(c).lhs != rule.args[i]) {
      throw StructuralError("ill-typed argument " + std::to_string(i) + " of '" + rule.name + "'");
    }
  }
  std::vector<Value> args;
  args.reserve(rule.arity());
  for (const auto& child : program.children()) {
    args.push_back(evaluate(grammar, child, input));
    if (is_bottom(args.back())) return Bottom{};
  }
  return grammar.function_of(program.rule()).concrete(args);
}

namespace {

void render_into(const Grammar& grammar, const Program& program, bool nested, std::string& out) {
  const Rule& rule = grammar.rule(program.rule());
  if (rule.is_terminal()) {
    out += rule.label;
    return;
  }
  if (grammar.render_style() == RenderStyle::Infix && rule.arity() == 2) {
    if (nested) out += '(';
    render_into(grammar, program.children()[0], true, out);
    out += ' ';
    out += rule.name;
    out += ' ';
    render_into(grammar, program.children()[1], true, out);
    if (nested) out += ')';
    return;
  }
  out += rule.name;
  out += '(';
  for (std::size_t i = 0; i < program.children().size(); ++i) {
    if (i) out += ", ";
    render_into(grammar, program.children()[i], true, out);
  }
  out += ')';
}

}  // namespace

std::string render_program(const Grammar& grammar, const Program& program) {
  std::string out;
  render_into(grammar, program, false, out);
  return out;
}

}  // namespace refsyn
