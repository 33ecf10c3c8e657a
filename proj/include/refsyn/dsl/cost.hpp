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

#include <map>
#include <string>

#include "refsyn/dsl/grammar.hpp"
#include "refsyn/dsl/program.hpp"

namespace refsyn {

// Additive complexity measure: Cost(f(e1..ek)) = cost(f) + sum Cost(ei).
// Terminals are keyed by their label (`x`, `2`, `ConstStr("-")`), functions by name.
// Anything not listed costs `default_cost`.
struct CostModel {
  std::map<std::string, double> terminal_cost;
  std::map<std::string, double> function_cost;
  double default_cost = 1.0;

  // Every terminal and function costs 1, so Cost equals node count.
  static CostModel size() { return {}; }

  double rule_cost(const Grammar& grammar, int rule) const;
};

double program_cost(const Grammar& grammar, const Program& program, const CostModel& model);

}  // namespace refsyn
