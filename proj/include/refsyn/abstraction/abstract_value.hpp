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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "refsyn/dsl/value.hpp"

namespace refsyn {

enum class PredicateKind : std::uint8_t { True, False, Len, CharAt, Eq };

// An atomic predicate over the value of one grammar symbol:
// `true`, `false`, `len(s) = i`, `s[i] = c` or `s = v`.
struct Predicate {
  PredicateKind kind = PredicateKind::True;
  int symbol = -1;
  std::int64_t index = 0;  // length for Len, position for CharAt
  char ch = 0;             // CharAt only
  Value value;             // Eq only

  static Predicate truth(int symbol) { return {PredicateKind::True, symbol, 0, 0, Bottom{}}; }
  static Predicate falsity(int symbol) { return {PredicateKind::False, symbol, 0, 0, Bottom{}}; }
  static Predicate len(int symbol, std::int64_t n) { return {PredicateKind::Len, symbol, n, 0, Bottom{}}; }
  static Predicate char_at(int symbol, std::int64_t i, char c) {
    return {PredicateKind::CharAt, symbol, i, c, Bottom{}};
  }
  static Predicate eq(int symbol, Value v) { return {PredicateKind::Eq, symbol, 0, 0, std::move(v)}; }

  friend bool operator==(const Predicate&, const Predicate&) = default;
  friend std::strong_ordering operator<=>(const Predicate& a, const Predicate& b);
};

struct PredicateHash {
  std::size_t operator()(const Predicate& p) const noexcept;
};

// True iff the concrete value satisfies the atom.
bool satisfies(const Value& v, const Predicate& p);

// `len=3`, `s[0]='a'`, `s="ab"`, `true`, `false`.
std::string render_predicate(const Predicate& p);

// A conjunction of atoms over one symbol, kept in normal form:
//  - `false` anywhere collapses the conjunction to {false};
//  - an Eq conjunct absorbs every atom it implies (or collapses to false on conflict);
//  - contradictory Len/CharAt atoms collapse to false;
//  - `true` is dropped unless it is the only conjunct.
class AbstractValue {
 public:
  AbstractValue() = default;

  static AbstractValue truth(int symbol);
  static AbstractValue falsity(int symbol);
  static AbstractValue singleton(int symbol, Value v);
  // Conjunction of arbitrary atoms; the result is normalized.
  static AbstractValue of(int symbol, std::vector<Predicate> atoms);

  int symbol() const { return symbol_; }
  const std::vector<Predicate>& conjuncts() const { return conjuncts_; }

  bool is_true() const;
  bool is_false() const;
  // The value of an Eq conjunction, or nullptr.
  const Value* singleton_value() const;
  std::optional<std::int64_t> length() const;
  // The only member of gamma, for Eq and for a length with every position fixed.
  std::optional<Value> determined() const;
  // True iff bottom may be in gamma (only `true` and `= ⊥`).
  bool may_be_bottom() const;

  // Conjunction of both values (normalized).
  AbstractValue meet(const AbstractValue& other) const;

  std::string render() const;

  friend bool operator==(const AbstractValue&, const AbstractValue&) = default;

 private:
  int symbol_ = -1;
  std::vector<Predicate> conjuncts_{Predicate::truth(-1)};
};

struct AbstractValueHash {
  std::size_t operator()(const AbstractValue& v) const noexcept;
};

bool gamma_contains(const AbstractValue& value, const Value& concrete);

// Syntactic entailment: every conjunct of `b` is entailed by `a`.
bool implies(const AbstractValue& a, const AbstractValue& b);

// Conjunct set of a normalized value.
std::vector<Predicate> extract_predicates(const AbstractValue& value);

}  // namespace refsyn
