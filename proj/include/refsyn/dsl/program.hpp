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
#include <memory>
#include <string>
#include <vector>

#include "refsyn/dsl/grammar.hpp"
#include "refsyn/dsl/value.hpp"

namespace refsyn {

// Immutable parse tree. Each node names a grammar rule; leaves are terminal
// rules. Subtrees are shared, so copies are cheap.
class Program {
 public:
  static Program leaf(int rule);
  static Program apply(int rule, std::vector<Program> children);

  int rule() const { return node_->rule; }
  const std::vector<Program>& children() const { return node_->children; }
  bool is_leaf() const { return node_->children.empty(); }
  int height() const { return node_->height; }
  // Node count.
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Program& a, const Program& b);

 private:
  struct Node {
    int rule;
    std::vector<Program> children;
    int height;
    std::size_t size;
  };
  explicit Program(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Throws StructuralError unless every node matches a rule of `grammar` whose lhs
// is the symbol expected at that position (the start symbol at the root).
void check_well_formed(const Grammar& grammar, const Program& program);
void check_well_formed(const Grammar& grammar, const Program& program, int symbol);

// Concrete execution. Domain errors evaluate to Bottom; bottom is strict.
Value evaluate(const Grammar& grammar, const Program& program, const Value& input);

// Canonical text: named calls for the string family, infix for arithmetic.
std::string render_program(const Grammar& grammar, const Program& program);

}  // namespace refsyn
