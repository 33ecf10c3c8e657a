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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "refsyn/abstraction/bank.hpp"
#include "refsyn/common/deadline.hpp"
#include "refsyn/common/error.hpp"
#include "refsyn/dsl/cost.hpp"
#include "refsyn/dsl/dataset.hpp"
#include "refsyn/dsl/grammar.hpp"
#include "refsyn/dsl/program.hpp"
#include "refsyn/objective/objective.hpp"
#include "refsyn/synthesis/fta.hpp"

namespace refsyn {

struct SynthesisConfig {
  int height_bound = 4;
  double epsilon = 0.0;
  int max_conjuncts = 3;
  double min_gain = 1.0;
  int iteration_cap = 10000;
  // Candidate checks per back-propagation step before falling back to equality atoms.
  std::size_t backprop_budget = 50000;

  // Throws StructuralError on out-of-range fields.
  void validate() const;
};

struct IterationRecord {
  int iteration = 0;
  std::size_t bank_size = 0;
  std::size_t states = 0;
  std::size_t transitions = 0;
  std::string program;
  Score abstract_score;
  Score concrete_score;
  ExtendedReal distance;
  int example = -1;  // -1 on the terminating iteration
  std::vector<std::string> added;
  // Candidate's abstract dataset loss under the grown bank.
  std::optional<ExtendedReal> abstract_loss_after;
};

struct RefinementTrace {
  std::vector<IterationRecord> iterations;

  nlohmann::json to_json() const;
};

struct SynthesisResult {
  Program program = Program::leaf(0);
  Score score;           // concrete
  Score abstract_score;  // of the last candidate (equal to score for the baseline)
  int iterations = 1;
  std::size_t bank_size = 0;
  std::size_t states = 0;
  std::size_t transitions = 0;
  RefinementTrace trace;
};

class IterationCapError : public InvariantError {
 public:
  IterationCapError(const std::string& what, RefinementTrace trace)
      : InvariantError(what), trace_(std::move(trace)) {}
  const RefinementTrace& trace() const { return trace_; }

 private:
  RefinementTrace trace_;
};

struct Candidate {
  Program program = Program::leaf(0);
  Score score;
  int state = -1;
};

// Cheapest program of height <= b per final state, then the best final state
// under the objective; equal scores go to the lowest state index.
Candidate min_cost(const AbstractFta& afta, const Grammar& grammar, const Dataset& dataset, const Objective& objective,
                   LossKind loss, const CostModel& model, int height_bound);

SynthesisResult synthesize_cfta(const Dataset& dataset, const Grammar& grammar, const Objective& objective,
                                LossKind loss, const CostModel& model, int height_bound,
                                const Deadline& deadline = Deadline::never());

// Example with the largest concrete-minus-abstract gap, lowest index on ties.
int pick_dimension(const Grammar& grammar, const Program& program, const Dataset& dataset, const PredicateBank& bank,
                   LossKind loss);

std::vector<Predicate> optimize_and_backpropagate(const Grammar& grammar, const Program& program, const Value& input,
                                                  const Value& target, const PredicateBank& bank,
                                                  const PredicateUniverse& universe, LossKind loss,
                                                  const SynthesisConfig& config);

// Atoms that make the abstract value of `expr` on `input` imply `target` once
// added to the bank.
std::vector<Predicate> backpropagate(const Grammar& grammar, const Program& expr, const Value& input,
                                     const AbstractValue& target, const PredicateBank& bank,
                                     const PredicateUniverse& universe, const SynthesisConfig& config);

SynthesisResult synthesize(const Dataset& dataset, const Grammar& grammar, const SynthesisConfig& config,
                           const PredicateBank& initial, const PredicateUniverse& universe, const Objective& objective,
                           LossKind loss, const CostModel& model, const Deadline& deadline = Deadline::never());

inline AbstractFta incremental_update(AftaBuilder& builder, const PredicateBank& old_bank,
                                      std::span<const Predicate> added, const Deadline& deadline = Deadline::never()) {
  return builder.update(old_bank, added, deadline);
}

}  // namespace refsyn
