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

#include "refsyn/dsl/enumerate.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace refsyn {

namespace {

// levels[h][s]: programs of symbol s with height exactly h (h >= 1).
using Levels = std::vector<std::vector<std::vector<Program>>>;

// Programs of `symbol` with height <= h, in enumeration order.
std::vector<const Program*> up_to(const Levels& levels, int symbol, int h) {
  std::vector<const Program*> out;
  for (int k = 1; k <= h; ++k) {
    for (const auto& p : levels[static_cast<std::size_t>(k)][static_cast<std::size_t>(symbol)]) out.push_back(&p);
  }
  return out;
}

// Emits programs of `symbol` with height exactly h; returns false if the visitor stopped.
bool emit_level(const Grammar& grammar, const Levels& levels, int symbol, int h,
                const std::function<bool(const Program&)>& visit) {
  for (int r : grammar.rules_of(symbol)) {
    const Rule& rule = grammar.rule(r);
    if (rule.is_terminal()) {
      if (h == 1 && !visit(Program::leaf(r))) return false;
      continue;
    }
    if (h < 2 || rule.args.empty()) continue;
    std::vector<std::vector<const Program*>> pools;
    bool empty = false;
    for (int a : rule.args) {
      pools.push_back(up_to(levels, a, h - 1));
      empty = empty || pools.back().empty();
    }
    if (empty) continue;
    std::vector<std::size_t> idx(pools.size(), 0);
    std::vector<Program> children(pools.size(), Program::leaf(0));
    while (true) {
      int tallest = 0;
      for (std::size_t i = 0; i < pools.size(); ++i) tallest = std::max(tallest, pools[i][idx[i]]->height());
      if (tallest == h - 1) {
        for (std::size_t i = 0; i < pools.size(); ++i) children[i] = *pools[i][idx[i]];
        if (!visit(Program::apply(r, children))) return false;
      }
      // Odometer; the last argument varies fastest.
      std::size_t pos = pools.size();
      while (pos > 0) {
        --pos;
        if (++idx[pos] < pools[pos].size()) break;
        idx[pos] = 0;
        if (pos == 0) {
          pos = pools.size() + 1;
          break;
        }
      }
      if (pos == pools.size() + 1) break;
    }
  }
  return true;
}

}  // namespace

void enumerate_programs(const Grammar& grammar, int height_bound,
                        const std::function<bool(const Program&)>& visit) {
  if (height_bound < 1) return;
  const std::size_t n = grammar.symbols().size();
  Levels levels(static_cast<std::size_t>(height_bound) + 1, std::vector<std::vector<Program>>(n));
  for (int h = 1; h <= height_bound; ++h) {
    if (!emit_level(grammar, levels, grammar.start_symbol(), h, visit)) return;
    if (h == height_bound) break;
    for (std::size_t s = 0; s < n; ++s) {
      auto& bucket = levels[static_cast<std::size_t>(h)][s];
      emit_level(grammar, levels, static_cast<int>(s), h, [&](const Program& p) {
        bucket.push_back(p);
        return true;
      });
    }
  }
}

std::vector<Program> enumerate_programs(const Grammar& grammar, int height_bound) {
  std::vector<Program> out;
  enumerate_programs(grammar, height_bound, [&](const Program& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

double count_programs(const Grammar& grammar, int height_bound) {
  if (height_bound < 1) return 0.0;
  const std::size_t n = grammar.symbols().size();
  // at_most[h][s]: programs of s with height <= h.
  std::vector<std::vector<double>> at_most(static_cast<std::size_t>(height_bound) + 1, std::vector<double>(n, 0.0));
  for (int h = 1; h <= height_bound; ++h) {
    for (std::size_t s = 0; s < n; ++s) {
      double exact = 0.0;
      for (int r : grammar.rules_of(static_cast<int>(s))) {
        const Rule& rule = grammar.rule(r);
        if (rule.is_terminal()) {
          if (h == 1) exact += 1.0;
          continue;
        }
        if (h < 2) continue;
        double le1 = 1.0, le2 = 1.0;
        for (int a : rule.args) {
          le1 *= at_most[static_cast<std::size_t>(h - 1)][static_cast<std::size_t>(a)];
          le2 *= h >= 3 ? at_most[static_cast<std::size_t>(h - 2)][static_cast<std::size_t>(a)] : 0.0;
        }
        exact += le1 - le2;
      }
      at_most[static_cast<std::size_t>(h)][s] = at_most[static_cast<std::size_t>(h - 1)][s] + exact;
    }
  }
  return at_most[static_cast<std::size_t>(height_bound)][static_cast<std::size_t>(grammar.start_symbol())];
}

}  // namespace refsyn
