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
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "refsyn/abstraction/abstract_value.hpp"
#include "refsyn/abstraction/bank.hpp"
#include "refsyn/automata/tree_automaton.hpp"
#include "refsyn/common/deadline.hpp"
#include "refsyn/dsl/grammar.hpp"
#include "refsyn/dsl/value.hpp"

namespace refsyn {

// Interns payload entries so states can be keyed on small integers.
template <class T, class Hash>
class Interner {
 public:
  int intern(const T& v) {
    auto it = index_.find(v);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(items_.size());
    items_.push_back(v);
    index_.emplace(v, id);
    return id;
  }
  const T& operator[](int id) const { return items_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<T> items_;
  std::unordered_map<T, int, Hash> index_;
};

using ValueStore = Interner<Value, ValueHash>;
using AbstractStore = Interner<AbstractValue, AbstractValueHash>;

struct ConcreteFta {
  TreeAutomaton automaton;
  std::shared_ptr<const ValueStore> values;

  std::vector<Value> payload(int state) const;
};

struct AbstractFta {
  TreeAutomaton automaton;
  std::shared_ptr<const AbstractStore> values;

  std::vector<AbstractValue> payload(int state) const;
};

// States whose min_height would exceed the bound are never created; final
// states are the start-symbol states.
ConcreteFta build_cfta(const std::vector<Value>& inputs, const Grammar& grammar, int height_bound,
                       const Deadline& deadline = Deadline::never());

// Builds abstract automata for one dataset and keeps the work that does not
// depend on the bank: raw transformer results per argument tuple, and alpha
// results per raw value (revalidated when the bank grows).
class AftaBuilder {
 public:
  AftaBuilder(const Grammar& grammar, std::vector<Value> inputs, int height_bound);

  AbstractFta build(const PredicateBank& bank, const Deadline& deadline = Deadline::never());

  // Same automaton as build(bank.with(added)); alpha results untouched by the
  // new atoms are reused.
  AbstractFta update(const PredicateBank& old_bank, std::span<const Predicate> added,
                     const Deadline& deadline = Deadline::never());

  const PredicateBank& bank() const { return bank_; }
  std::size_t transformer_evaluations() const { return transformer_evaluations_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const noexcept;
  };

  int alpha_id(int raw);

  const Grammar* grammar_;
  std::vector<Value> inputs_;
  int height_bound_;
  PredicateBank bank_;
  std::shared_ptr<AbstractStore> store_;
  std::unordered_map<std::vector<int>, int, KeyHash> transformer_cache_;  // [rule, arg ids...] -> raw id
  std::vector<int> alpha_cache_;                                          // raw id -> id, -1 if unknown
  std::size_t transformer_evaluations_ = 0;
};

AbstractFta build_afta(const std::vector<Value>& inputs, const Grammar& grammar, const PredicateBank& bank,
                       int height_bound, const Deadline& deadline = Deadline::never());

}  // namespace refsyn
