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

#include "refsyn/abstraction/bank.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace refsyn {

PredicateBank::PredicateBank() : atoms_(std::make_shared<const std::set<Predicate>>()) {}

PredicateBank PredicateBank::with_family(int symbol, unsigned families) const {
  PredicateBank out = *this;
  if (static_cast<std::size_t>(symbol) >= out.families_.size()) out.families_.resize(static_cast<std::size_t>(symbol) + 1, 0u);
  out.families_[static_cast<std::size_t>(symbol)] |= families;
  return out;
}

PredicateBank PredicateBank::with(std::span<const Predicate> atoms) const {
  auto missing_atoms = missing(atoms);
  if (missing_atoms.empty()) return *this;
  auto grown = std::make_shared<std::set<Predicate>>(*atoms_);
  grown->insert(missing_atoms.begin(), missing_atoms.end());
  PredicateBank out = *this;
  out.atoms_ = std::move(grown);
  return out;
}

unsigned PredicateBank::families(int symbol) const {
  return symbol >= 0 && static_cast<std::size_t>(symbol) < families_.size() ? families_[static_cast<std::size_t>(symbol)] : 0u;
}

bool PredicateBank::contains(const Predicate& p) const {
  switch (p.kind) {
    case PredicateKind::True:
    case PredicateKind::False:
      return true;
    case PredicateKind::Len:
      if (families(p.symbol) & kLenFamily) return true;
      break;
    case PredicateKind::CharAt:
      if (families(p.symbol) & kCharAtFamily) return true;
      break;
    case PredicateKind::Eq:
      if (families(p.symbol) & kEqFamily) return true;
      break;
  }
  return atoms_->count(p) != 0;
}

std::vector<Predicate> PredicateBank::missing(std::span<const Predicate> candidates) const {
  std::vector<Predicate> out;
  for (const auto& p : candidates) {
    if (!contains(p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t PredicateBank::size() const {
  std::size_t n = 2 + atoms_->size();
  for (unsigned f : families_) n += static_cast<std::size_t>(std::popcount(f));
  return n;
}

std::string PredicateBank::render(const Grammar& grammar) const {
  std::string out = "true, false";
  const auto& syms = grammar.symbols();
  for (std::size_t s = 0; s < families_.size() && s < syms.size(); ++s) {
    if (families_[s] & kLenFamily) out += ", " + syms[s].name + ":len=*";
    if (families_[s] & kCharAtFamily) out += ", " + syms[s].name + ":s[*]=*";
    if (families_[s] & kEqFamily) out += ", " + syms[s].name + ":s=*";
  }
  for (const auto& p : *atoms_) {
    const std::string name = p.symbol >= 0 && static_cast<std::size_t>(p.symbol) < syms.size()
                                 ? syms[static_cast<std::size_t>(p.symbol)].name
                                 : std::string("?");
    out += ", " + name + ":" + render_predicate(p);
  }
  return out;
}

PredicateBank initial_bank(const Grammar& grammar) {
  PredicateBank bank;
  for (std::size_t s = 0; s < grammar.symbols().size(); ++s) {
    const int sym = static_cast<int>(s);
    if (grammar.is_input_only(sym) || !grammar.is_string_symbol(sym)) {
      bank = bank.with_family(sym, kEqFamily);
    } else {
      bank = bank.with_family(sym, kLenFamily);
    }
  }
  return bank;
}

PredicateBank equality_bank(const Grammar& grammar) {
  PredicateBank bank;
  for (std::size_t s = 0; s < grammar.symbols().size(); ++s) bank = bank.with_family(static_cast<int>(s), kEqFamily);
  return bank;
}

PredicateUniverse::PredicateUniverse(const Grammar& grammar) {
  for (std::size_t s = 0; s < grammar.symbols().size(); ++s) string_symbol_.push_back(grammar.is_string_symbol(static_cast<int>(s)));
}

bool PredicateUniverse::contains(const Predicate& p) const {
  const bool known = p.symbol >= 0 && static_cast<std::size_t>(p.symbol) < string_symbol_.size();
  switch (p.kind) {
    case PredicateKind::True:
    case PredicateKind::False:
      return true;
    case PredicateKind::Len:
    case PredicateKind::CharAt:
      return known && string_symbol_[static_cast<std::size_t>(p.symbol)] && p.index >= 0;
    case PredicateKind::Eq:
      return known;
  }
  return false;
}

std::vector<Predicate> PredicateUniverse::implied_by(int symbol, const Value& v) const {
  std::vector<Predicate> out{Predicate::truth(symbol)};
  const bool string_symbol =
      symbol >= 0 && static_cast<std::size_t>(symbol) < string_symbol_.size() && string_symbol_[static_cast<std::size_t>(symbol)];
  if (string_symbol && is_string(v)) {
    const auto& s = as_string(v);
    out.push_back(Predicate::len(symbol, static_cast<std::int64_t>(s.size())));
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(Predicate::char_at(symbol, static_cast<std::int64_t>(i), s[i]));
  }
  out.push_back(Predicate::eq(symbol, v));
  return out;
}

AbstractValue alpha(const PredicateBank& bank, const AbstractValue& value) {
  const int sym = value.symbol();
  if (value.is_false() || value.is_true()) return value;
  std::vector<Predicate> kept;
  if (const auto v = value.determined()) {
    Predicate eq = Predicate::eq(sym, *v);
    if (bank.contains(eq)) return AbstractValue::singleton(sym, *v);
    if (is_string(*v)) {
      const auto& s = as_string(*v);
      Predicate len = Predicate::len(sym, static_cast<std::int64_t>(s.size()));
      if (bank.contains(len)) kept.push_back(len);
      for (std::size_t i = 0; i < s.size(); ++i) {
        Predicate at = Predicate::char_at(sym, static_cast<std::int64_t>(i), s[i]);
        if (bank.contains(at)) kept.push_back(std::move(at));
      }
    }
    return AbstractValue::of(sym, std::move(kept));
  }
  for (const auto& p : value.conjuncts()) {
    if (bank.contains(p)) kept.push_back(p);
  }
  return AbstractValue::of(sym, std::move(kept));
}

}  // namespace refsyn
