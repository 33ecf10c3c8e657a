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

#include "refsyn/abstraction/abstract_eval.hpp"

#include <vector>

#include "refsyn/abstraction/transformers.hpp"
#include "refsyn/common/error.hpp"

namespace refsyn {

AbstractValue abstract_eval(const Grammar& grammar, const Program& program, const Value& input,
                            const PredicateBank& bank) {
  const Rule& rule = grammar.rule(program.rule());
  switch (rule.kind) {
    case RuleKind::Input:
      return alpha(bank, AbstractValue::singleton(rule.lhs, input));
    case RuleKind::Constant:
      return alpha(bank, AbstractValue::singleton(rule.lhs, rule.constant));
    case RuleKind::Function:
      break;
  }
  std::vector<AbstractValue> args;
  args.reserve(program.children().size());
  for (const auto& child : program.children()) args.push_back(abstract_eval(grammar, child, input, bank));
  return alpha(bank, transformer(grammar, program.rule(), args));
}

}  // namespace refsyn
