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
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "refsyn/abstraction/abstract_value.hpp"
#include "refsyn/dsl/grammar.hpp"

namespace refsyn {

// Whole families of atoms over one symbol, enabled at once.
enum PredicateFamily : unsigned {
  kLenFamily = 1u << 0,     // len(s) = i for every i
  kCharAtFamily = 1u << 1,  // s[i] = c for every i, c
  kEqFamily = 1u << 2,      // s = v for every v
};

// The enabled predicate set P. Always contains true and false. Banks are
// persistent values: growing one yields a new bank and leaves the old intact.
class PredicateBank {
 public:
  PredicateBank();

  PredicateBank with_family(int symbol, unsigned families) const;
  PredicateBank with(std::span<const Predicate> atoms) const;

  bool contains(const Predicate& p) const;
  // Atoms of `candidates` that the bank does not already contain (deduplicated).
  std::vector<Predicate> missing(std::span<const Predicate> candidates) const;

  unsigned families(int symbol) const;
  const std::set<Predicate>& atoms() const { return *atoms_; }

  // true + false + enabled families + explicit atoms.
  std::size_t size() const;

  std::string render(const Grammar& grammar) const;

 private:
  std::vector<unsigned> families_;
  std::shared_ptr<const std::set<Predicate>> atoms_;
};

// Initial bank: length atoms for string symbols, equality atoms for the input
// symbol and for every non-string symbol.
PredicateBank initial_bank(const Grammar& grammar);

// Bank with every equality atom enabled; abstract values are then singletons.
PredicateBank equality_bank(const Grammar& grammar);

// The universe U of admissible atoms. Never materialized; membership is by pattern.
class PredicateUniverse {
 public:
  explicit PredicateUniverse(const Grammar& grammar);

  bool contains(const Predicate& p) const;

  // { q ∈ U | (s = v) ⟹ q }, ordered true, len, s[i] by i, eq.
  std::vector<Predicate> implied_by(int symbol, const Value& v) const;

 private:
  std::vector<bool> string_symbol_;
};

// Strongest conjunction of bank atoms implied by `value`.
AbstractValue alpha(const PredicateBank& bank, const AbstractValue& value);

}  // namespace refsyn
