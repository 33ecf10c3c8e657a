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

#include <span>

#include "refsyn/abstraction/abstract_value.hpp"
#include "refsyn/dsl/grammar.hpp"

namespace refsyn {

// Abstract semantics ⟦f⟧# of a Function rule. Sound for every concretization
// and exact on singleton arguments.
AbstractValue transformer(const Grammar& grammar, int rule, std::span<const AbstractValue> args);

namespace transformers {

// Exact on all-singleton arguments, `true` otherwise. False and bottom are strict.
AbstractFn lift_strict(ConcreteFn concrete);

// Pairwise-lifted Concat: len+len, left s[i], right s[i] shifted by a known left length.
AbstractValue concat(std::span<const AbstractValue> args, int lhs);

// SubStr over a string conjunction and singleton positions.
AbstractValue substr(std::span<const AbstractValue> args, int lhs);

}  // namespace transformers
}  // namespace refsyn
