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

#include "refsyn/abstraction/transformers.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace refsyn {

namespace {

// Strict handling shared by every transformer: false in, false out; a definite
// bottom argument makes the result a definite bottom.
const AbstractValue* strict_result(std::span<const AbstractValue> args, int lhs, AbstractValue& storage) {
  for (const auto& a : args) {
    if (a.is_false()) return &(storage = AbstractValue::falsity(lhs));
  }
  for (const auto& a : args) {
    const Value* v = a.singleton_value();
    if (v && is_bottom(*v)) return &(storage = AbstractValue::singleton(lhs, Bottom{}));
  }
  return nullptr;
}

std::vector<Value> singleton_values(std::span<const AbstractValue> args) {
  std::vector<Value> out;
  for (const auto& a : args) {
    const Value* v = a.singleton_value();
    if (!v) return {};
    out.push_back(*v);
  }
  return out;
}

// Len / s[i] atoms of a string abstraction, with singletons unfolded.
std::vector<Predicate> string_atoms(const AbstractValue& a) {
  if (const Value* v = a.singleton_value()) {
    std::vector<Predicate> out;
    if (!is_string(*v)) return out;
    const auto& s = as_string(*v);
    out.push_back(Predicate::len(a.symbol(), static_cast<std::int64_t>(s.size())));
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(Predicate::char_at(a.symbol(), static_cast<std::int64_t>(i), s[i]));
    return out;
  }
  return a.conjuncts();
}

// Concat on one pair of atoms.
std::optional<Predicate> concat_atoms(const Predicate& l, const Predicate& r, int lhs) {
  if (l.kind == PredicateKind::CharAt) return Predicate::char_at(lhs, l.index, l.ch);
  if (l.kind != PredicateKind::Len) return std::nullopt;
  if (r.kind == PredicateKind::Len) return Predicate::len(lhs, l.index + r.index);
  if (r.kind == PredicateKind::CharAt) return Predicate::char_at(lhs, l.index + r.index, r.ch);
  return std::nullopt;
}

}  // namespace

AbstractValue transformer(const Grammar& grammar, int rule, std::span<const AbstractValue> args) {
  const FunctionDef& f = grammar.function_of(rule);
  const int lhs = grammar.rule(rule).lhs;
  if (f.abstract) return f.abstract(args, lhs);
  return transformers::lift_strict(f.concrete)(args, lhs);
}

namespace transformers {

AbstractFn lift_strict(ConcreteFn concrete) {
  return [concrete = std::move(concrete)](std::span<const AbstractValue> args, int lhs) -> AbstractValue {
    AbstractValue storage;
    if (const AbstractValue* r = strict_result(args, lhs, storage)) return *r;
    auto values = singleton_values(args);
    if (values.size() != args.size()) return AbstractValue::truth(lhs);
    return AbstractValue::singleton(lhs, concrete(values));
  };
}

AbstractValue concat(std::span<const AbstractValue> args, int lhs) {
  AbstractValue storage;
  if (const AbstractValue* r = strict_result(args, lhs, storage)) return *r;
  const auto values = singleton_values(args);
  if (values.size() == 2 && is_string(values[0]) && is_string(values[1])) {
    return AbstractValue::singleton(lhs, as_string(values[0]) + as_string(values[1]));
  }
  if (args[0].may_be_bottom() || args[1].may_be_bottom()) return AbstractValue::truth(lhs);
  std::vector<Predicate> out;
  const auto left = string_atoms(args[0]);
  const auto right = string_atoms(args[1]);
  for (const auto& l : left) {
    for (const auto& r : right) {
      if (auto p = concat_atoms(l, r, lhs)) out.push_back(*p);
    }
  }
  return AbstractValue::of(lhs, std::move(out));
}

AbstractValue substr(std::span<const AbstractValue> args, int lhs) {
  AbstractValue storage;
  if (const AbstractValue* r = strict_result(args, lhs, storage)) return *r;
  const Value* iv = args[1].singleton_value();
  const Value* jv = args[2].singleton_value();
  if (!iv || !jv || !is_int(*iv) || !is_int(*jv)) return AbstractValue::truth(lhs);
  const std::int64_t i = as_int(*iv);
  const std::int64_t j = as_int(*jv);
  if (i < 0 || i > j) return AbstractValue::singleton(lhs, Bottom{});
  if (const Value* sv = args[0].singleton_value()) {
    if (!is_string(*sv)) return AbstractValue::truth(lhs);
    const auto& s = as_string(*sv);
    if (j > static_cast<std::int64_t>(s.size())) return AbstractValue::singleton(lhs, Bottom{});
    return AbstractValue::singleton(lhs, s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(j - i)));
  }
  if (args[0].may_be_bottom()) return AbstractValue::truth(lhs);

  const auto atoms = string_atoms(args[0]);
  std::optional<std::int64_t> len;
  std::int64_t min_len = 0;  // implied by s[k] atoms
  for (const auto& p : atoms) {
    if (p.kind == PredicateKind::Len) len = p.index;
    if (p.kind == PredicateKind::CharAt) min_len = std::max(min_len, p.index + 1);
  }
  if (len && j > *len) return AbstractValue::singleton(lhs, Bottom{});
  if (!len && j > min_len) return AbstractValue::truth(lhs);  // may or may not be in range

  std::vector<Predicate> out{Predicate::len(lhs, j - i)};
  for (const auto& p : atoms) {
    if (p.kind == PredicateKind::CharAt && p.index >= i && p.index < j) out.push_back(Predicate::char_at(lhs, p.index - i, p.ch));
  }
  return AbstractValue::of(lhs, std::move(out));
}

}  // namespace transformers
}  // namespace refsyn
