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

#include "refsyn/dsl/cost.hpp"

namespace refsyn {

double CostModel::rule_cost(const Grammar& grammar, int rule) const {
  const Rule& r = grammar.rule(rule);
  const auto& table = r.is_terminal() ? terminal_cost : function_cost;
  const auto it = table.find(r.is_terminal() ? r.label : r.name);
  return it == table.end() ? default_cost : it->second;
}

double program_cost(const Grammar& grammar, const Program& program, const CostModel& model) {
  double total = model.rule_cost(grammar, program.rule());
  for (const auto& child : program.children()) total += program_cost(grammar, child, model);
  return total;
}

}  // namespace refsyn
