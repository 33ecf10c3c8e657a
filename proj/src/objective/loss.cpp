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

#include "refsyn/objective/loss.hpp"

#include <algorithm>
#include <optional>

#include "refsyn/common/error.hpp"

namespace refsyn {

namespace {

constexpr int kAny = -1;

std::string text_of(const Value& v) { return value_text(v); }

// Edit distance between a pattern (kAny matches every character) and y. With
// open_end, characters of y left over after the pattern is consumed are free.
int pattern_distance(const std::vector<int>& c, const std::string& y, bool open_end) {
  const std::size_t n = c.size();
  const std::size_t m = y.size();
  auto fits = [&](std::size_t i, std::size_t j) {
    return c[i] == kAny || c[i] == static_cast<unsigned char>(y[j]);
  };
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      int best = std::max(static_cast<int>(i), static_cast<int>(j));
      if (i == 0) best = static_cast<int>(j);
      if (j == 0) best = static_cast<int>(i);
      if (i > 0 && j > 0) {
        best = std::min(best, d[i - 1][j - 1] + (fits(i - 1, j - 1) ? 0 : 1));
        best = std::min(best, d[i - 1][j] + 1);
        best = std::min(best, d[i][j - 1] + 1);
        if (i > 1 && j > 1 && fits(i - 1, j - 2) && fits(i - 2, j - 1)) best = std::min(best, d[i - 2][j - 2] + 1);
      }
      if (open_end && i == n && j > 0) best = std::min(best, d[i][j - 1]);
      d[i][j] = best;
    }
  }
  return d[n][m];
}

// Character template of a Len/CharAt conjunction against target y: fixed length
// if a Len atom is present, otherwise max(|y|, last indexed position + 1).
struct Template {
  std::vector<int> chars;
  bool fixed_length = false;
};

Template to_template(const AbstractValue& value, const std::string& y) {
  std::optional<std::int64_t> len;
  std::int64_t span = 0;
  for (const auto& p : value.conjuncts()) {
    if (p.kind == PredicateKind::Len) len = p.index;
    if (p.kind == PredicateKind::CharAt) span = std::max(span, p.index + 1);
  }
  Template t;
  t.fixed_length = len.has_value();
  const std::int64_t n = len ? *len : std::max<std::int64_t>(static_cast<std::int64_t>(y.size()), span);
  t.chars.assign(static_cast<std::size_t>(n), kAny);
  for (const auto& p : value.conjuncts()) {
    if (p.kind == PredicateKind::CharAt && p.index < n) t.chars[static_cast<std::size_t>(p.index)] = static_cast<unsigned char>(p.ch);
  }
  return t;
}

bool one_delete_match(const std::string& z, const std::string& y) {
  if (z.size() != y.size() + 1) return false;
  std::size_t i = 0;
  while (i < y.size() && z[i] == y[i]) ++i;
  return z.compare(i + 1, std::string::npos, y, i, std::string::npos) == 0;
}

// Some string in gamma(value) is y with one character inserted.
bool one_insert_in_gamma(const AbstractValue& value, const std::string& y) {
  const auto total = static_cast<std::int64_t>(y.size()) + 1;
  for (const auto& p : value.conjuncts()) {
    if (p.kind == PredicateKind::Len && p.index != total) return false;
    if (p.kind == PredicateKind::CharAt && p.index >= total) return false;
  }
  for (std::int64_t k = 0; k < total; ++k) {
    bool ok = true;
    for (const auto& p : value.conjuncts()) {
      if (p.kind != PredicateKind::CharAt || p.index == k) continue;
      const char expected = y[static_cast<std::size_t>(p.index < k ? p.index : p.index - 1)];
      if (expected != p.ch) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

LossKind parse_loss(const std::string& name) {
  if (name == "zero_one") return LossKind::ZeroOne;
  if (name == "zero_inf") return LossKind::ZeroInf;
  if (name == "dl") return LossKind::DamerauLevenshtein;
  if (name == "one_delete") return LossKind::OneDelete;
  if (name == "n_sub") return LossKind::NSubstitution;
  throw StructuralError("unknown loss function '" + name + "'");
}

std::string loss_name(LossKind kind) {
  switch (kind) {
    case LossKind::ZeroOne:
      return "zero_one";
    case LossKind::ZeroInf:
      return "zero_inf";
    case LossKind::DamerauLevenshtein:
      return "dl";
    case LossKind::OneDelete:
      return "one_delete";
    case LossKind::NSubstitution:
      return "n_sub";
  }
  return "?";
}

int dl_distance(const std::string& a, const std::string& b) {
  std::vector<int> c;
  c.reserve(a.size());
  for (char ch : a) c.push_back(static_cast<unsigned char>(ch));
  return pattern_distance(c, b, false);
}

ExtendedReal concrete_loss(LossKind kind, const Value& output, const Value& target) {
  if (is_bottom(output)) return ExtendedReal::infinity();
  const bool same = is_int(output) && is_int(target) ? as_int(output) == as_int(target) : text_of(output) == text_of(target);
  switch (kind) {
    case LossKind::ZeroOne:
      return same ? 0.0 : 1.0;
    case LossKind::ZeroInf:
      return same ? ExtendedReal(0.0) : ExtendedReal::infinity();
    case LossKind::DamerauLevenshtein:
      return static_cast<double>(dl_distance(text_of(output), text_of(target)));
    case LossKind::OneDelete:
      if (same) return 0.0;
      return one_delete_match(text_of(output), text_of(target)) ? ExtendedReal(1.0) : ExtendedReal::infinity();
    case LossKind::NSubstitution: {
      const auto z = text_of(output);
      const auto y = text_of(target);
      if (z.size() != y.size()) return ExtendedReal::infinity();
      int diff = 0;
      for (std::size_t i = 0; i < z.size(); ++i) diff += z[i] != y[i] ? 1 : 0;
      return static_cast<double>(diff);
    }
  }
  return ExtendedReal::infinity();
}

ExtendedReal abstract_loss(LossKind kind, const AbstractValue& value, const Value& target) {
  if (value.is_false()) return ExtendedReal::infinity();
  if (const Value* v = value.singleton_value()) return concrete_loss(kind, *v, target);
  if (value.is_true()) return 0.0;

  // A proper Len/CharAt conjunction: gamma holds strings only.
  const std::string y = text_of(target);
  const bool member = gamma_contains(value, Value(y));
  switch (kind) {
    case LossKind::ZeroOne:
      return member ? 0.0 : 1.0;
    case LossKind::ZeroInf:
      return member ? ExtendedReal(0.0) : ExtendedReal::infinity();
    case LossKind::OneDelete:
      if (member) return 0.0;
      return one_insert_in_gamma(value, y) ? ExtendedReal(1.0) : ExtendedReal::infinity();
    case LossKind::NSubstitution: {
      const Template t = to_template(value, y);
      if (t.chars.size() != y.size()) return ExtendedReal::infinity();
      int diff = 0;
      for (std::size_t i = 0; i < y.size(); ++i) diff += t.chars[i] != kAny && t.chars[i] != static_cast<unsigned char>(y[i]) ? 1 : 0;
      return static_cast<double>(diff);
    }
    case LossKind::DamerauLevenshtein: {
      Template t = to_template(value, y);
      if (!t.fixed_length) {
        // Wildcards past the last fixed position may be absent altogether.
        while (!t.chars.empty() && t.chars.back() == kAny) t.chars.pop_back();
      }
      return static_cast<double>(pattern_distance(t.chars, y, !t.fixed_length));
    }
  }
  return 0.0;
}

ExtendedReal dataset_loss(LossKind kind, std::span<const Value> outputs, std::span<const Value> targets) {
  if (outputs.size() != targets.size()) throw StructuralError("outputs and targets differ in length");
  ExtendedReal total = 0.0;
  for (std::size_t i = 0; i < outputs.size(); ++i) total += concrete_loss(kind, outputs[i], targets[i]);
  return total;
}

ExtendedReal abstract_dataset_loss(LossKind kind, std::span<const AbstractValue> values, std::span<const Value> targets) {
  if (values.size() != targets.size()) throw StructuralError("abstract outputs and targets differ in length");
  ExtendedReal total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) total += abstract_loss(kind, values[i], targets[i]);
  return total;
}

}  // namespace refsyn
