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

#include "refsyn/synthesis/synthesize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "refsyn/abstraction/abstract_eval.hpp"
#include "refsyn/abstraction/transformers.hpp"

namespace refsyn {

namespace {

// Visits k-subsets of {0..n-1} in lexicographic order until `visit` returns true.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Atoms true of `v` that `current` does not already entail, in search order.
std::vector<Predicate> strengthening_atoms(const PredicateUniverse& universe, const AbstractValue& current,
                                           int symbol, const Value& v) {
  std::vector<Predicate> out;
  for (auto& p : universe.implied_by(symbol, v)) {
    if (p.kind == PredicateKind::True) continue;
    if (implies(current, AbstractValue::of(symbol, {p}))) continue;
    out.push_back(std::move(p));
  }
  return out;
}

AbstractValue conjoin(const AbstractValue& base, const std::vector<Predicate>& atoms) {
  if (atoms.empty()) return base;
  std::vector<Predicate> all = base.conjuncts();
  all.insert(all.end(), atoms.begin(), atoms.end());
  return AbstractValue::of(base.symbol(), std::move(all));
}

void add_atoms(std::vector<Predicate>& out, const AbstractValue& value) {
  for (const auto& p : extract_predicates(value)) {
    if (p.kind != PredicateKind::True && p.kind != PredicateKind::False) out.push_back(p);
  }
}

void normalize_set(std::vector<Predicate>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Per-run memo of per-example abstract losses keyed by payload id.
class LossMemo {
 public:
  ExtendedReal get(LossKind loss, const AbstractValue& v, int id, std::size_t example, const Value& target) {
    const auto key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(id)) << 32) | example;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const auto l = abstract_loss(loss, v, target);
    memo_.emplace(key, l);
    return l;
  }

 private:
  std::unordered_map<std::uint64_t, ExtendedReal> memo_;
};

Candidate select_min(const AbstractFta& afta, const Grammar& grammar, const Dataset& dataset,
                     const Objective& objective, LossKind loss, const CostModel& model, int height_bound,
                     LossMemo& memo) {
  const auto& automaton = afta.automaton;
  BoundedCosts costs(automaton, grammar, model, height_bound);
  Candidate best;
  for (int q : automaton.final_states()) {
    if (!costs.reachable(q)) continue;
    ExtendedReal l = 0.0;
    const auto& payload = automaton.state(q).payload;
    for (std::size_t i = 0; i < payload.size() && !l.is_infinite(); ++i) {
      l += memo.get(loss, (*afta.values)[payload[i]], payload[i], i, dataset.outputs[i]);
    }
    Score s{l, costs.cost(q)};
    if (best.state < 0 || score_less(objective, s, best.score)) {
      best.score = s;
      best.state = q;
    }
  }
  if (best.state < 0) throw NoSolutionError("the automaton accepts no program within the height bound");
  best.program = costs.program(best.state);
  return best;
}

Score concrete_score(const Grammar& grammar, const Program& p, const Dataset& dataset, LossKind loss,
                     const CostModel& model) {
  return {dataset_loss(loss, evaluate_all(grammar, p, dataset.inputs), dataset.outputs), program_cost(grammar, p, model)};
}

nlohmann::json score_json(const Score& s) {
  nlohmann::json j{{"complexity", s.complexity}};
  j["loss"] = s.loss.is_infinite() ? nlohmann::json("inf") : nlohmann::json(s.loss.value());
  return j;
}

nlohmann::json real_json(ExtendedReal r) { return r.is_infinite() ? nlohmann::json("inf") : nlohmann::json(r.value()); }

}  // namespace

void SynthesisConfig::validate() const {
  if (height_bound < 1) throw StructuralError("height bound must be at least 1");
  if (!(epsilon >= 0.0) || std::isinf(epsilon)) throw StructuralError("epsilon must be a finite non-negative number");
  if (max_conjuncts < 1) throw StructuralError("max conjuncts must be at least 1");
  if (!(min_gain > 0.0)) throw StructuralError("min gain must be positive");
  if (iteration_cap < 1) throw StructuralError("iteration cap must be at least 1");
}

nlohmann::json RefinementTrace::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : iterations) {
    nlohmann::json j{{"iteration", r.iteration},         {"bank_size", r.bank_size},
                     {"states", r.states},               {"transitions", r.transitions},
                     {"program", r.program},             {"abstract", score_json(r.abstract_score)},
                     {"concrete", score_json(r.concrete_score)}, {"distance", real_json(r.distance)},
                     {"example", r.example},             {"added", r.added}};
    if (r.abstract_loss_after) j["abstract_loss_after"] = real_json(*r.abstract_loss_after);
    out.push_back(std::move(j));
  }
  return out;
}

Candidate min_cost(const AbstractFta& afta, const Grammar& grammar, const Dataset& dataset, const Objective& objective,
                   LossKind loss, const CostModel& model, int height_bound) {
  LossMemo memo;
  return select_min(afta, grammar, dataset, objective, loss, model, height_bound, memo);
}

SynthesisResult synthesize_cfta(const Dataset& dataset, const Grammar& grammar, const Objective& objective,
                                LossKind loss, const CostModel& model, int height_bound, const Deadline& deadline) {
  check_dataset(dataset);
  const ConcreteFta cfta = build_cfta(dataset.inputs, grammar, height_bound, deadline);
  deadline.check("minimum-cost extraction");
  const auto& automaton = cfta.automaton;
  BoundedCosts costs(automaton, grammar, model, height_bound);
  int best = -1;
  Score best_score;
  for (int q : automaton.final_states()) {
    if (!costs.reachable(q)) continue;
    const auto& payload = automaton.state(q).payload;
    ExtendedReal l = 0.0;
    for (std::size_t i = 0; i < payload.size() && !l.is_infinite(); ++i) {
      l += concrete_loss(loss, (*cfta.values)[payload[i]], dataset.outputs[i]);
    }
    Score s{l, costs.cost(q)};
    if (best < 0 || score_less(objective, s, best_score)) {
      best = q;
      best_score = s;
    }
  }
  if (best < 0) throw NoSolutionError("the automaton accepts no program within the height bound");
  SynthesisResult result;
  result.program = costs.program(best);
  result.score = best_score;
  result.abstract_score = best_score;
  result.states = automaton.state_count();
  result.transitions = automaton.transition_count();
  return result;
}

int pick_dimension(const Grammar& grammar, const Program& program, const Dataset& dataset, const PredicateBank& bank,
                   LossKind loss) {
  const auto gaps = example_gaps(grammar, program, dataset, bank, loss);
  int best = -1;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (!(gaps[i] > 0.0)) continue;
    if (best < 0 || gaps[i] > gaps[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
  }
  if (best < 0) throw InvariantError("no example has a concrete loss above its abstract loss");
  return best;
}

std::vector<Predicate> optimize_and_backpropagate(const Grammar& grammar, const Program& program, const Value& input,
                                                  const Value& target, const PredicateBank& bank,
                                                  const PredicateUniverse& universe, LossKind loss,
                                                  const SynthesisConfig& config) {
  const int symbol = grammar.rule(program.rule()).lhs;
  const Value output = evaluate(grammar, program, input);
  const AbstractValue current = abstract_eval(grammar, program, input, bank);
  const ExtendedReal before = abstract_loss(loss, current, target);
  const auto atoms = strengthening_atoms(universe, current, symbol, output);

  std::optional<AbstractValue> chosen;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(config.max_conjuncts) && !chosen; ++k) {
    for_each_combination(atoms.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Predicate> pick;
      for (auto i : idx) pick.push_back(atoms[i]);
      AbstractValue psi = conjoin(current, pick);
      if (gap(abstract_loss(loss, psi, target), before) >= config.min_gain) {
        chosen = std::move(psi);
        return true;
      }
      return false;
    });
  }
  if (!chosen) chosen = AbstractValue::singleton(symbol, output);

  std::vector<Predicate> out;
  add_atoms(out, *chosen);
  auto support = backpropagate(grammar, program, input, *chosen, bank, universe, config);
  out.insert(out.end(), support.begin(), support.end());
  normalize_set(out);
  return out;
}

std::vector<Predicate> backpropagate(const Grammar& grammar, const Program& expr, const Value& input,
                                     const AbstractValue& target, const PredicateBank& bank,
                                     const PredicateUniverse& universe, const SynthesisConfig& config) {
  if (!gamma_contains(target, evaluate(grammar, expr, input))) {
    throw InvariantError("back-propagation target does not hold for the expression's value");
  }
  if (target.is_true() || expr.is_leaf()) return {};

  const Rule& rule = grammar.rule(expr.rule());
  const auto& children = expr.children();
  const std::size_t k = children.size();
  std::vector<Value> values;
  std::vector<AbstractValue> current;
  std::vector<std::vector<Predicate>> candidates;
  for (std::size_t i = 0; i < k; ++i) {
    values.push_back(evaluate(grammar, children[i], input));
    current.push_back(abstract_eval(grammar, children[i], input, bank));
    candidates.push_back(current.back().singleton_value()
                             ? std::vector<Predicate>{}
                             : strengthening_atoms(universe, current.back(), rule.args[i], values.back()));
  }

  std::vector<std::vector<Predicate>> chosen(k);
  std::size_t checks = 0;
  auto holds = [&]() {
    ++checks;
    std::vector<AbstractValue> args;
    for (std::size_t i = 0; i < k; ++i) args.push_back(conjoin(current[i], chosen[i]));
    return implies(transformer(grammar, expr.rule(), args), target);
  };

  // Children tuples by increasing total number of added atoms.
  std::vector<std::size_t> room(k + 1, 0);  // atoms the children from i on can still take
  for (std::size_t i = k; i-- > 0;) {
    room[i] = room[i + 1] + std::min(candidates[i].size(), static_cast<std::size_t>(config.max_conjuncts));
  }
  bool found = false;
  auto exhausted = [&] { return found || checks >= config.backprop_budget; };
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t child, std::size_t budget) {
    if (exhausted() || budget > room[child]) return;
    if (child == k) {
      found = holds();
      return;
    }
    const auto cap = std::min({static_cast<std::size_t>(config.max_conjuncts), candidates[child].size(), budget});
    for (std::size_t s = 0; s <= cap && !exhausted(); ++s) {
      for_each_combination(candidates[child].size(), s, [&](const std::vector<std::size_t>& idx) {
        chosen[child].clear();
        for (auto i : idx) chosen[child].push_back(candidates[child][i]);
        search(child + 1, budget - s);
        return exhausted();
      });
    }
  };
  for (std::size_t total = 0; total <= room[0] && !exhausted(); ++total) search(0, total);
  if (!found) {
    for (std::size_t i = 0; i < k; ++i) {
      chosen[i].clear();
      if (!current[i].singleton_value()) chosen[i].push_back(Predicate::eq(rule.args[i], values[i]));
    }
    if (!holds()) throw InvariantError("transformer is not precise on singleton arguments");
  }

  std::vector<Predicate> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (chosen[i].empty()) continue;
    const AbstractValue child_target = conjoin(current[i], chosen[i]);
    add_atoms(out, child_target);
    auto sub = backpropagate(grammar, children[i], input, child_target, bank, universe, config);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  normalize_set(out);
  return out;
}

SynthesisResult synthesize(const Dataset& dataset, const Grammar& grammar, const SynthesisConfig& config,
                           const PredicateBank& initial, const PredicateUniverse& universe, const Objective& objective,
                           LossKind loss, const CostModel& model, const Deadline& deadline) {
  config.validate();
  check_dataset(dataset);
  AftaBuilder builder(grammar, dataset.inputs, config.height_bound);
  PredicateBank bank = initial;
  AbstractFta afta = builder.build(bank, deadline);
  LossMemo memo;

  SynthesisResult result;
  std::optional<Program> best;
  Score best_score;
  for (int iteration = 1; iteration <= config.iteration_cap; ++iteration) {
    deadline.check("refinement loop");
    const Candidate candidate = select_min(afta, grammar, dataset, objective, loss, model, config.height_bound, memo);
    const Score concrete = concrete_score(grammar, candidate.program, dataset, loss, model);
    if (!best || score_less(objective, concrete, best_score)) {
      best = candidate.program;
      best_score = concrete;
    }

    IterationRecord record;
    record.iteration = iteration;
    record.bank_size = bank.size();
    record.states = afta.automaton.state_count();
    record.transitions = afta.automaton.transition_count();
    record.program = render_program(grammar, candidate.program);
    record.abstract_score = candidate.score;
    record.concrete_score = concrete;
    record.distance = gap(concrete.loss, candidate.score.loss);

    if (record.distance <= config.epsilon) {
      result.trace.iterations.push_back(std::move(record));
      result.program = *best;
      result.score = best_score;
      result.abstract_score = candidate.score;
      result.iterations = iteration;
      result.bank_size = bank.size();
      result.states = afta.automaton.state_count();
      result.transitions = afta.automaton.transition_count();
      return result;
    }

    const int example = pick_dimension(grammar, candidate.program, dataset, bank, loss);
    const auto refinement =
        optimize_and_backpropagate(grammar, candidate.program, dataset.inputs[static_cast<std::size_t>(example)],
                                   dataset.outputs[static_cast<std::size_t>(example)], bank, universe, loss, config);
    const auto added = bank.missing(refinement);
    if (added.empty()) {
      result.trace.iterations.push_back(std::move(record));
      throw InvariantError("refinement produced no new predicates");
    }
    record.example = example;
    for (const auto& p : added) {
      record.added.push_back(grammar.symbols().at(static_cast<std::size_t>(p.symbol)).name + ":" + render_predicate(p));
    }
    const PredicateBank grown = bank.with(added);
    record.abstract_loss_after =
        abstract_dataset_loss(loss, abstract_eval_all(grammar, candidate.program, dataset.inputs, grown), dataset.outputs);
    result.trace.iterations.push_back(std::move(record));

    afta = builder.update(bank, added, deadline);
    bank = grown;
  }
  throw IterationCapError("refinement did not converge within the iteration cap", result.trace);
}

}  // namespace refsyn
