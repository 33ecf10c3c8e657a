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

#include "refsyn/abstraction/abstract_value.hpp"

#include <algorithm>
#include <string>

namespace refsyn {

std::strong_ordering operator<=>(const Predicate& a, const Predicate& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.symbol <=> b.symbol; c != 0) return c;
  if (auto c = a.index <=> b.index; c != 0) return c;
  if (auto c = static_cast<unsigned char>(a.ch) <=> static_cast<unsigned char>(b.ch); c != 0) return c;
  return a.value <=> b.value;
}

std::size_t PredicateHash::operator()(const Predicate& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.kind);
  h = h * 1000003u ^ static_cast<std::size_t>(p.symbol + 7);
  h = h * 1000003u ^ static_cast<std::size_t>(p.index);
  h = h * 1000003u ^ static_cast<unsigned char>(p.ch);
  if (p.kind == PredicateKind::Eq) h = h * 1000003u ^ ValueHash{}(p.value);
  return h;
}

bool satisfies(const Value& v, const Predicate& p) {
  switch (p.kind) {
    case PredicateKind::True:
      return true;
    case PredicateKind::False:
      return false;
    case PredicateKind::Len:
      return is_string(v) && static_cast<std::int64_t>(as_string(v).size()) == p.index;
    case PredicateKind::CharAt: {
      if (!is_string(v)) return false;
      const auto& s = as_string(v);
      return p.index >= 0 && p.index < static_cast<std::int64_t>(s.size()) &&
             s[static_cast<std::size_t>(p.index)] == p.ch;
    }
    case PredicateKind::Eq:
      return v == p.value;
  }
  return false;
}

std::string render_predicate(const Predicate& p) {
  switch (p.kind) {
    case PredicateKind::True:
      return "true";
    case PredicateKind::False:
      return "false";
    case PredicateKind::Len:
      return "len=" + std::to_string(p.index);
    case PredicateKind::CharAt:
      return "s[" + std::to_string(p.index) + "]='" + std::string(1, p.ch) + "'";
    case PredicateKind::Eq:
      return "s=" + render_value(p.value);
  }
  return "?";
}

AbstractValue AbstractValue::truth(int symbol) {
  AbstractValue v;
  v.symbol_ = symbol;
  v.conjuncts_ = {Predicate::truth(symbol)};
  return v;
}

AbstractValue AbstractValue::falsity(int symbol) {
  AbstractValue v;
  v.symbol_ = symbol;
  v.conjuncts_ = {Predicate::falsity(symbol)};
  return v;
}

AbstractValue AbstractValue::singleton(int symbol, Value value) {
  AbstractValue v;
  v.symbol_ = symbol;
  v.conjuncts_ = {Predicate::eq(symbol, std::move(value))};
  return v;
}

AbstractValue AbstractValue::of(int symbol, std::vector<Predicate> atoms) {
  for (auto& p : atoms) {
    p.symbol = symbol;
    if (p.kind == PredicateKind::False) return falsity(symbol);
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  std::erase_if(atoms, [](const Predicate& p) { return p.kind == PredicateKind::True; });
  if (atoms.empty()) return truth(symbol);

  // Eq sorts last.
  if (atoms.back().kind == PredicateKind::Eq) {
    const auto first_eq = std::find_if(atoms.begin(), atoms.end(),
                                       [](const Predicate& p) { return p.kind == PredicateKind::Eq; });
    if (first_eq != atoms.end() - 1) return falsity(symbol);
    const Value& v = atoms.back().value;
    for (auto it = atoms.begin(); it != first_eq; ++it) {
      if (!satisfies(v, *it)) return falsity(symbol);
    }
    return singleton(symbol, v);
  }

  std::optional<std::int64_t> len;
  for (const auto& p : atoms) {
    if (p.kind == PredicateKind::Len) {
      if (p.index < 0 || (len && *len != p.index)) return falsity(symbol);
      len = p.index;
    }
  }
  const Predicate* prev = nullptr;
  for (const auto& p : atoms) {
    if (p.kind != PredicateKind::CharAt) continue;
    if (p.index < 0 || (len && p.index >= *len)) return falsity(symbol);
    if (prev && prev->index == p.index) return falsity(symbol);  // same slot, different char
    prev = &p;
  }
  AbstractValue v;
  v.symbol_ = symbol;
  v.conjuncts_ = std::move(atoms);
  return v;
}

bool AbstractValue::is_true() const {
  return conjuncts_.size() == 1 && conjuncts_.front().kind == PredicateKind::True;
}

bool AbstractValue::is_false() const {
  return conjuncts_.size() == 1 && conjuncts_.front().kind == PredicateKind::False;
}

const Value* AbstractValue::singleton_value() const {
  if (conjuncts_.size() == 1 && conjuncts_.front().kind == PredicateKind::Eq) return &conjuncts_.front().value;
  return nullptr;
}

std::optional<Value> AbstractValue::determined() const {
  if (const Value* v = singleton_value()) return *v;
  const auto n = length();
  if (!n || conjuncts_.size() != static_cast<std::size_t>(*n) + 1) return std::nullopt;
  std::string s(static_cast<std::size_t>(*n), '\0');
  for (const auto& p : conjuncts_) {
    if (p.kind == PredicateKind::CharAt) s[static_cast<std::size_t>(p.index)] = p.ch;
  }
  return Value(std::move(s));
}

std::optional<std::int64_t> AbstractValue::length() const {
  if (const Value* v = singleton_value()) {
    if (is_string(*v)) return static_cast<std::int64_t>(as_string(*v).size());
    return std::nullopt;
  }
  for (const auto& p : conjuncts_) {
    if (p.kind == PredicateKind::Len) return p.index;
  }
  return std::nullopt;
}

bool AbstractValue::may_be_bottom() const {
  if (is_true()) return true;
  const Value* v = singleton_value();
  return v && is_bottom(*v);
}

AbstractValue AbstractValue::meet(const AbstractValue& other) const {
  std::vector<Predicate> atoms = conjuncts_;
  atoms.insert(atoms.end(), other.conjuncts_.begin(), other.conjuncts_.end());
  return of(symbol_, std::move(atoms));
}

std::string AbstractValue::render() const {
  std::string out;
  for (const auto& p : conjuncts_) {
    if (!out.empty()) out += " ∧ ";
    out += render_predicate(p);
  }
  return out;
}

std::size_t AbstractValueHash::operator()(const AbstractValue& v) const noexcept {
  std::size_t h = static_cast<std::size_t>(v.symbol() + 1);
  PredicateHash ph;
  for (const auto& p : v.conjuncts()) h = h * 0x100000001b3ull ^ ph(p);
  return h;
}

bool gamma_contains(const AbstractValue& value, const Value& concrete) {
  return std::all_of(value.conjuncts().begin(), value.conjuncts().end(),
                     [&](const Predicate& p) { return satisfies(concrete, p); });
}

bool implies(const AbstractValue& a, const AbstractValue& b) {
  if (a.is_false() || b.is_true()) return true;
  if (b.is_false()) return false;
  if (const auto v = a.determined()) return gamma_contains(b, *v);
  const auto& have = a.conjuncts();
  for (const auto& p : b.conjuncts()) {
    if (p.kind == PredicateKind::True) continue;
    Predicate q = p;
    q.symbol = a.symbol();
    if (!std::binary_search(have.begin(), have.end(), q)) return false;
  }
  return true;
}

std::vector<Predicate> extract_predicates(const AbstractValue& value) { return value.conjuncts(); }

}  // namespace refsyn
