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
#include <string>
#include <vector>

#include "refsyn/abstraction/abstract_value.hpp"
#include "refsyn/dsl/value.hpp"
#include "refsyn/objective/extended_real.hpp"

namespace refsyn {

enum class LossKind { ZeroOne, ZeroInf, DamerauLevenshtein, OneDelete, NSubstitution };

// zero_one | zero_inf | dl | one_delete | n_sub
LossKind parse_loss(const std::string& name);
std::string loss_name(LossKind kind);

// Integer targets are compared through their decimal text by the edit-style losses.
ExtendedReal concrete_loss(LossKind kind, const Value& output, const Value& target);

// Lower bound on concrete_loss over gamma(value); exact for singletons and false.
ExtendedReal abstract_loss(LossKind kind, const AbstractValue& value, const Value& target);

ExtendedReal dataset_loss(LossKind kind, std::span<const Value> outputs, std::span<const Value> targets);
ExtendedReal abstract_dataset_loss(LossKind kind, std::span<const AbstractValue> values, std::span<const Value> targets);

// Optimal string alignment distance (adjacent transpositions, no substring edited twice).
int dl_distance(const std::string& a, const std::string& b);

}  // namespace refsyn
