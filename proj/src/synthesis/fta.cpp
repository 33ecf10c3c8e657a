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

#include "refsyn/synthesis/fta.hpp"

#include <utility>

#include "refsyn/abstraction/transformers.hpp"

namespace refsyn {

namespace {

constexpr std::size_t kCheckEvery = 4096;

// Bottom-up fixpoint shared by both automata. Round h adds the transitions
// whose tallest argument state has min_height h - 1, so each argument tuple is
// visited once. In the last round only start-symbol results can still matter.
template <class Leaf, class Apply>
TreeAutomaton construct(const Grammar& grammar, int height_bound, const Deadline& deadline, Leaf&& leaf,
                        Apply&& apply) {
  TreeAutomaton automaton;
  if (height_bound < 1) return automaton;
  const std::size_t nsym = grammar.symbols().size();
  const int start = grammar.start_symbol();
  std::vector<std::vector<int>> by_symbol(nsym);

  auto add = [&](int rule, std::vector<int> args, Payload payload, int h) {
    const std::size_t before = automaton.state_count();
    const int lhs = grammar.rule(rule).lhs;
    const int q = automaton.add_state(lhs, std::move(payload), h);
    if (automaton.state_count() != before) {
      by_symbol[static_cast<std::size_t>(lhs)].push_back(q);
      if (lhs == start) automaton.set_final(q);
    }
    automaton.add_transition(rule, std::move(args), q);
  };

  for (std::size_t r = 0; r < grammar.rules().size(); ++r) {
    if (grammar.rules()[r].is_terminal()) add(static_cast<int>(r), {}, leaf(static_cast<int>(r)), 1);
  }

  std::size_t ticks = 0;
  for (int h = 2; h <= height_bound; ++h) {
    deadline.check("automaton construction");
    std::vector<std::size_t> old_end(nsym), all_end(nsym);
    for (std::size_t s = 0; s < nsym; ++s) {
      const auto& list = by_symbol[s];
      all_end[s] = list.size();
      std::size_t k = 0;
      while (k < list.size() && automaton.state(list[k]).min_height <= h - 2) ++k;
      old_end[s] = k;
    }
    for (std::size_t r = 0; r < grammar.rules().size(); ++r) {
      const Rule& rule = grammar.rules()[r];
      if (rule.is_terminal() || rule.args.empty()) continue;
      if (h == height_bound && rule.lhs != start) continue;
      const std::size_t k = rule.args.size();
      // The pivot is the first argument drawn from the newest layer.
      for (std::size_t pivot = 0; pivot < k; ++pivot) {
        std::vector<std::size_t> lo(k), hi(k);
        bool empty = false;
        for (std::size_t i = 0; i < k; ++i) {
          const auto s = static_cast<std::size_t>(rule.args[i]);
          lo[i] = i == pivot ? old_end[s] : 0;
          hi[i] = i < pivot ? old_end[s] : all_end[s];
          empty = empty || lo[i] >= hi[i];
        }
        if (empty) continue;
        std::vector<std::size_t> idx = lo;
        std::vector<int> args(k);
        std::vector<const Payload*> payloads(k);
        while (true) {
          for (std::size_t i = 0; i < k; ++i) args[i] = by_symbol[static_cast<std::size_t>(rule.args[i])][idx[i]];
          for (std::size_t i = 0; i < k; ++i) payloads[i] = &automaton.state(args[i]).payload;
          Payload result = apply(static_cast<int>(r), payloads);
          add(static_cast<int>(r), args, std::move(result), h);
          if (++ticks % kCheckEvery == 0) deadline.check("automaton construction");
          std::size_t pos = k;
          bool done = true;
          while (pos > 0) {
            --pos;
            if (++idx[pos] < hi[pos]) {
              done = false;
              break;
            }
            idx[pos] = lo[pos];
          }
          if (done) break;
        }
      }
    }
  }
  return automaton;
}

std::size_t hash_ints(const std::vector<int>& v) {
  std::size_t h = v.size();
  for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct IntsHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept { return hash_ints(v); }
};

}  // namespace

std::vector<Value> ConcreteFta::payload(int state) const {
  std::vector<Value> out;
  for (int id : automaton.state(state).payload) out.push_back((*values)[id]);
  return out;
}

std::vector<AbstractValue> AbstractFta::payload(int state) const {
  std::vector<AbstractValue> out;
  for (int id : automaton.state(state).payload) out.push_back((*values)[id]);
  return out;
}

ConcreteFta build_cfta(const std::vector<Value>& inputs, const Grammar& grammar, int height_bound,
                       const Deadline& deadline) {
  auto store = std::make_shared<ValueStore>();
  const int bottom = store->intern(Bottom{});
  const std::size_t n = inputs.size();
  std::unordered_map<std::vector<int>, int, IntsHash> cache;

  auto leaf = [&](int r) {
    const Rule& rule = grammar.rule(r);
    Payload p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = store->intern(rule.kind == RuleKind::Input ? inputs[i] : rule.constant);
    return p;
  };
  std::vector<int> key;
  std::vector<Value> values;
  auto apply = [&](int r, const std::vector<const Payload*>& args) {
    const FunctionDef& f = grammar.function_of(r);
    Payload p(n);
    key.assign(args.size() + 1, r);
    values.resize(args.size());
    for (std::size_t i = 0; i < n; ++i) {
      bool strict = false;
      for (std::size_t a = 0; a < args.size(); ++a) {
        key[a + 1] = (*args[a])[i];
        strict = strict || key[a + 1] == bottom;
      }
      if (strict) {
        p[i] = bottom;
        continue;
      }
      auto it = cache.find(key);
      if (it != cache.end()) {
        p[i] = it->second;
        continue;
      }
      for (std::size_t a = 0; a < args.size(); ++a) values[a] = (*store)[key[a + 1]];
      const int id = store->intern(f.concrete(values));
      cache.emplace(key, id);
      p[i] = id;
    }
    return p;
  };
  TreeAutomaton automaton = construct(grammar, height_bound, deadline, leaf, apply);
  return {std::move(automaton), std::move(store)};
}

std::size_t AftaBuilder::KeyHash::operator()(const std::vector<int>& k) const noexcept { return hash_ints(k); }

AftaBuilder::AftaBuilder(const Grammar& grammar, std::vector<Value> inputs, int height_bound)
    : grammar_(&grammar),
      inputs_(std::move(inputs)),
      height_bound_(height_bound),
      store_(std::make_shared<AbstractStore>()) {}

int AftaBuilder::alpha_id(int raw) {
  if (alpha_cache_.size() < store_->size()) alpha_cache_.resize(store_->size(), -1);
  int& slot = alpha_cache_[static_cast<std::size_t>(raw)];
  if (slot >= 0) return slot;
  const AbstractValue value = alpha(bank_, (*store_)[raw]);
  const int id = store_->intern(value);
  alpha_cache_.resize(store_->size(), -1);
  alpha_cache_[static_cast<std::size_t>(raw)] = id;
  return id;
}

AbstractFta AftaBuilder::build(const PredicateBank& bank, const Deadline& deadline) {
  bank_ = bank;
  alpha_cache_.assign(store_->size(), -1);
  return update(bank, {}, deadline);
}

AbstractFta AftaBuilder::update(const PredicateBank& old_bank, std::span<const Predicate> added,
                                const Deadline& deadline) {
  bank_ = old_bank.with(added);
  // An alpha result changes only if the raw value implies one of the new atoms.
  if (!added.empty()) {
    for (std::size_t raw = 0; raw < alpha_cache_.size(); ++raw) {
      if (alpha_cache_[raw] < 0) continue;
      const AbstractValue& v = (*store_)[static_cast<int>(raw)];
      for (const auto& p : added) {
        if (p.symbol == v.symbol() && implies(v, AbstractValue::of(p.symbol, {p}))) {
          alpha_cache_[raw] = -1;
          break;
        }
      }
    }
  }

  const std::size_t n = inputs_.size();
  auto leaf = [&](int r) {
    const Rule& rule = grammar_->rule(r);
    Payload p(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int raw = store_->intern(AbstractValue::singleton(rule.lhs, rule.kind == RuleKind::Input ? inputs_[i] : rule.constant));
      p[i] = alpha_id(raw);
    }
    return p;
  };
  std::vector<int> key;
  std::vector<AbstractValue> values;
  auto apply = [&](int r, const std::vector<const Payload*>& args) {
    Payload p(n);
    key.assign(args.size() + 1, r);
    values.resize(args.size());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < args.size(); ++a) key[a + 1] = (*args[a])[i];
      int raw;
      auto it = transformer_cache_.find(key);
      if (it != transformer_cache_.end()) {
        raw = it->second;
      } else {
        for (std::size_t a = 0; a < args.size(); ++a) values[a] = (*store_)[key[a + 1]];
        raw = store_->intern(transformer(*grammar_, r, values));
        ++transformer_evaluations_;
        transformer_cache_.emplace(key, raw);
      }
      p[i] = alpha_id(raw);
    }
    return p;
  };
  TreeAutomaton automaton = construct(*grammar_, height_bound_, deadline, leaf, apply);
  return {std::move(automaton), store_};
}

AbstractFta build_afta(const std::vector<Value>& inputs, const Grammar& grammar, const PredicateBank& bank,
                       int height_bound, const Deadline& deadline) {
  AftaBuilder builder(grammar, inputs, height_bound);
  return builder.build(bank, deadline);
}

}  // namespace refsyn
