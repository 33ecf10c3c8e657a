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

#include "refsyn/abstraction/abstract_value.hpp"
#include "refsyn/abstraction/bank.hpp"
#include "refsyn/dsl/grammar.hpp"
#include "refsyn/dsl/program.hpp"

namespace refsyn {

// ⟦p⟧^P x: leaves map to α^P(= leaf value), applications to α^P(⟦f⟧#(children)).
AbstractValue abstract_eval(const Grammar& grammar, const Program& program, const Value& input,
                            const PredicateBank& bank);

}  // namespace refsyn
