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

#include <compare>
#include <string>
#include <vector>

#include "json.hpp"
#include "refsyn/abstraction/bank.hpp"
#include "refsyn/dsl/dataset.hpp"
#include "refsyn/dsl/grammar.hpp"
#include "refsyn/dsl/program.hpp"
#include "refsyn/objective/extended_real.hpp"
#include "refsyn/objective/loss.hpp"

namespace refsyn {

struct Score {
  ExtendedReal loss;
  double complexity = 0.0;

  friend bool operator==(const Score&, const Score&) = default;
};

struct Objective {
  enum class Kind { Lexicographic, Tradeoff };
  Kind kind = Kind::Lexicographic;
  double lambda = 1.0;

  static Objective lexicographic() { return {}; }
  static Objective tradeoff(double lambda) { return {Kind::Tradeoff, lambda}; }

  std::string render() const;
};

// {"kind":"lexicographic"} | {"kind":"tradeoff","lambda":x}; throws StructuralError.
Objective parse_objective(const nlohmann::json& spec);
nlohmann::json objective_to_json(const Objective& objective);

// l + lambda * c, infinite when l is.
ExtendedReal tradeoff_value(const Objective& objective, const Score& score);

std::weak_ordering compare_scores(const Objective& objective, const Score& a, const Score& b);
inline bool score_less(const Objective& o, const Score& a, const Score& b) { return compare_scores(o, a, b) < 0; }

std::string render_score(const Score& score);

std::vector<Value> evaluate_all(const Grammar& grammar, const Program& program, const std::vector<Value>& inputs);
std::vector<AbstractValue> abstract_eval_all(const Grammar& grammar, const Program& program,
                                             const std::vector<Value>& inputs, const PredicateBank& bank);

// Per-example concrete minus abstract loss.
std::vector<ExtendedReal> example_gaps(const Grammar& grammar, const Program& program, const Dataset& dataset,
                                       const PredicateBank& bank, LossKind loss);

// Concrete dataset loss minus abstract dataset loss.
ExtendedReal distance(const Grammar& grammar, const Program& program, const Dataset& dataset,
                      const PredicateBank& bank, LossKind loss);

}  // namespace refsyn
