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

#include "refsyn/objective/objective.hpp"

#include "refsyn/abstraction/abstract_eval.hpp"
#include "refsyn/common/error.hpp"

namespace refsyn {

std::string Objective::render() const {
  if (kind == Kind::Lexicographic) return "lexicographic";
  return "tradeoff(" + ExtendedReal(lambda).render() + ")";
}

Objective parse_objective(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string()) {
    throw StructuralError("objective must be an object with a \"kind\" string");
  }
  const auto kind = spec["kind"].get<std::string>();
  if (kind == "lexicographic") return Objective::lexicographic();
  if (kind == "tradeoff") {
    if (!spec.contains("lambda") || !spec["lambda"].is_number()) throw StructuralError("tradeoff objective needs a numeric lambda");
    const double lambda = spec["lambda"].get<double>();
    if (!(lambda > 0.0)) throw StructuralError("tradeoff lambda must be positive");
    return Objective::tradeoff(lambda);
  }
  throw StructuralError("unknown objective kind '" + kind + "'");
}

nlohmann::json objective_to_json(const Objective& objective) {
  if (objective.kind == Objective::Kind::Lexicographic) return {{"kind", "lexicographic"}};
  return {{"kind", "tradeoff"}, {"lambda", objective.lambda}};
}

ExtendedReal tradeoff_value(const Objective& objective, const Score& score) {
  if (score.loss.is_infinite()) return ExtendedReal::infinity();
  return ExtendedReal(score.loss.value() + objective.lambda * score.complexity);
}

std::weak_ordering compare_scores(const Objective& objective, const Score& a, const Score& b) {
  auto order = [](auto x, auto y) {
    if (x < y) return std::weak_ordering::less;
    if (y < x) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  };
  if (objective.kind == Objective::Kind::Tradeoff) return order(tradeoff_value(objective, a), tradeoff_value(objective, b));
  const auto by_loss = order(a.loss, b.loss);
  if (by_loss != 0) return by_loss;
  return order(a.complexity, b.complexity);
}

std::string render_score(const Score& score) {
  return "loss=" + score.loss.render() + " complexity=" + ExtendedReal(score.complexity).render();
}

std::vector<Value> evaluate_all(const Grammar& grammar, const Program& program, const std::vector<Value>& inputs) {
  std::vector<Value> out;
  out.reserve(inputs.size());
  for (const auto& x : inputs) out.push_back(evaluate(grammar, program, x));
  return out;
}

std::vector<AbstractValue> abstract_eval_all(const Grammar& grammar, const Program& program,
                                             const std::vector<Value>& inputs, const PredicateBank& bank) {
  std::vector<AbstractValue> out;
  out.reserve(inputs.size());
  for (const auto& x : inputs) out.push_back(abstract_eval(grammar, program, x, bank));
  return out;
}

std::vector<ExtendedReal> example_gaps(const Grammar& grammar, const Program& program, const Dataset& dataset,
                                       const PredicateBank& bank, LossKind loss) {
  std::vector<ExtendedReal> out;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto concrete = concrete_loss(loss, evaluate(grammar, program, dataset.inputs[i]), dataset.outputs[i]);
    const auto abstract = abstract_loss(loss, abstract_eval(grammar, program, dataset.inputs[i], bank), dataset.outputs[i]);
    out.push_back(gap(concrete, abstract));
  }
  return out;
}

ExtendedReal distance(const Grammar& grammar, const Program& program, const Dataset& dataset,
                      const PredicateBank& bank, LossKind loss) {
  const auto outputs = evaluate_all(grammar, program, dataset.inputs);
  const auto abstract = abstract_eval_all(grammar, program, dataset.inputs, bank);
  return gap(dataset_loss(loss, outputs, dataset.outputs), abstract_dataset_loss(loss, abstract, dataset.outputs));
}

}  // namespace refsyn
