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

#include "properties.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "refsyn/abstraction/abstract_eval.hpp"
#include "refsyn/abstraction/transformers.hpp"
#include "refsyn/dsl/families.hpp"
#include "refsyn/objective/loss.hpp"

namespace refsyn::testing {

namespace {

std::string show(const Value& v) { return render_value(v); }

std::string show_args(const std::vector<AbstractValue>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : ", ") + a.render();
  return out;
}

// gamma of a value over one symbol, cut down to a finite domain.
std::vector<Value> bounded_members(const Grammar& g, int symbol, const AbstractValue& value, const std::string& alphabet,
                                   int max_len, const std::vector<Value>& scalar_domain) {
  std::vector<Value> out;
  if (reference_contains(value, Bottom{})) out.emplace_back(Bottom{});
  if (g.is_string_symbol(symbol)) {
    for (auto& s : all_strings(alphabet, max_len)) {
      if (reference_contains(value, s)) out.emplace_back(std::move(s));
    }
    // Eq constants outside the bounded domain still belong to gamma.
    if (const Value* v = value.singleton_value(); v && is_string(*v) && static_cast<int>(as_string(*v).size()) > max_len) {
      out.push_back(*v);
    }
  } else {
    for (const auto& v : scalar_domain) {
      if (reference_contains(value, v)) out.push_back(v);
    }
  }
  return out;
}

PredicateBank grow_bank(std::mt19937_64& rng, const PredicateBank& bank, const Grammar& g, const std::string& alphabet,
                        int max_len) {
  PredicateBank extra = random_bank(rng, g, alphabet, max_len);
  PredicateBank out = bank;
  for (std::size_t s = 0; s < g.symbols().size(); ++s) {
    const unsigned fam = extra.families(static_cast<int>(s));
    if (fam != 0) out = out.with_family(static_cast<int>(s), fam);
  }
  std::vector<Predicate> atoms(extra.atoms().begin(), extra.atoms().end());
  return out.with(atoms);
}

std::string automaton_key(int symbol, const std::vector<AbstractValue>& payload) {
  std::string k = std::to_string(symbol);
  for (const auto& v : payload) k += " | " + v.render();
  return k;
}

}  // namespace

bool reference_contains(const AbstractValue& value, const Value& v) {
  if (is_string(v)) return reference_member(value, as_string(v));
  for (const Predicate& p : value.conjuncts()) {
    if (p.kind == PredicateKind::True) continue;
    if (p.kind == PredicateKind::Eq && p.value == v) continue;
    return false;
  }
  return true;
}

PropertyReport check_loss_bounds(long cases, std::uint64_t seed) {
  PropertyReport r;
  std::mt19937_64 rng(seed);
  const std::string alphabet = "abc";
  const LossKind kinds[] = {LossKind::ZeroOne, LossKind::ZeroInf, LossKind::DamerauLevenshtein, LossKind::OneDelete,
                            LossKind::NSubstitution};
  for (long c = 0; c < cases; ++c) {
    ++r.cases;
    const AbstractValue phi = random_string_value(rng, 0, alphabet, 4);
    const std::string y = random_string(rng, alphabet, 4);
    // Without a length conjunct gamma is infinite; lengths up to 6 contain a
    // minimizer for every loss except possibly dl.
    const bool fixed = phi.length().has_value() || phi.is_false();
    const auto members = bounded_gamma(phi, alphabet, fixed ? 4 : 6);
    for (LossKind k : kinds) {
      ++r.checks;
      ExtendedReal best = ExtendedReal::infinity();
      for (const auto& s : members) {
        const ExtendedReal l = reference_loss(k, &s, y);
        if (l < best) best = l;
      }
      const ExtendedReal got = abstract_loss(k, phi, y);
      const bool exact = fixed || k != LossKind::DamerauLevenshtein;
      const bool good = exact ? got == best : got <= best;
      if (!good) {
        r.fail(loss_name(k) + "(" + phi.render() + ", \"" + y + "\") = " + got.render() + ", brute force " + best.render());
      }
    }
  }
  return r;
}

PropertyReport check_transformers(long cases_per_function, std::uint64_t seed) {
  PropertyReport r;
  std::mt19937_64 rng(seed);
  StringDslConfig cfg;
  cfg.constant_strings = {"-"};
  Grammar g = make_string_grammar(cfg);
  const std::string alphabet = "a1-";
  const int max_len = 3;

  // Finite stand-ins for the scalar symbols' domains.
  std::map<int, std::vector<Value>> domain;
  for (std::size_t s = 0; s < g.symbols().size(); ++s) {
    const int sym = static_cast<int>(s);
    if (g.is_string_symbol(sym)) continue;
    std::vector<Value>& d = domain[sym];
    if (g.symbols()[s].kind == ValueKind::Position) {
      for (std::int64_t i = -1; i <= 5; ++i) d.emplace_back(i);
    } else {
      for (int rr : g.rules_of(sym)) d.push_back(g.rule(rr).constant);
    }
  }

  auto random_arg = [&](int sym, bool singleton) -> AbstractValue {
    std::uniform_int_distribution<int> roll(0, 19);
    const int k = roll(rng);
    if (k == 0) return AbstractValue::singleton(sym, Bottom{});
    if (g.is_string_symbol(sym)) {
      if (singleton) return AbstractValue::singleton(sym, random_string(rng, alphabet, max_len + 1));
      return random_string_value(rng, sym, alphabet, max_len);
    }
    const auto& d = domain[sym];
    if (!singleton && k <= 4) return AbstractValue::truth(sym);
    if (!singleton && k == 5) return AbstractValue::falsity(sym);
    std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
    return AbstractValue::singleton(sym, d[pick(rng)]);
  };

  for (std::size_t rule = 0; rule < g.rules().size(); ++rule) {
    const Rule& rl = g.rules()[rule];
    if (rl.is_terminal()) continue;
    const FunctionDef& f = g.function_of(static_cast<int>(rule));
    for (long c = 0; c < cases_per_function; ++c) {
      ++r.cases;
      // soundness over the product of bounded gammas
      std::vector<AbstractValue> args;
      std::vector<std::vector<Value>> members;
      for (int a : rl.args) {
        args.push_back(random_arg(a, false));
        members.push_back(bounded_members(g, a, args.back(), alphabet, max_len, domain[a]));
      }
      const AbstractValue out = transformer(g, static_cast<int>(rule), args);
      if (out.symbol() != rl.lhs) r.fail(rl.name + " result has the wrong symbol");
      std::vector<std::size_t> idx(members.size(), 0);
      bool empty = std::any_of(members.begin(), members.end(), [](const auto& m) { return m.empty(); });
      std::vector<Value> concrete(members.size());
      while (!empty) {
        bool bottom = false;
        for (std::size_t i = 0; i < members.size(); ++i) {
          concrete[i] = members[i][idx[i]];
          bottom = bottom || is_bottom(concrete[i]);
        }
        const Value v = bottom ? Value(Bottom{}) : f.concrete(concrete);
        ++r.checks;
        if (!reference_contains(out, v)) {
          std::string in;
          for (const auto& x : concrete) in += (in.empty() ? "" : ", ") + show(x);
          r.fail(rl.name + "(" + show_args(args) + ") = " + out.render() + " misses " + rl.name + "(" + in + ") = " + show(v));
        }
        std::size_t pos = members.size();
        bool done = true;
        while (pos > 0) {
          --pos;
          if (++idx[pos] < members[pos].size()) {
            done = false;
            break;
          }
          idx[pos] = 0;
        }
        if (done) break;
      }

      // singleton precision
      std::vector<AbstractValue> eq_args;
      std::vector<Value> eq_values;
      bool bottom = false;
      for (int a : rl.args) {
        eq_args.push_back(random_arg(a, true));
        eq_values.push_back(*eq_args.back().singleton_value());
        bottom = bottom || is_bottom(eq_values.back());
      }
      const Value v = bottom ? Value(Bottom{}) : f.concrete(eq_values);
      const AbstractValue expect = AbstractValue::singleton(rl.lhs, v);
      const AbstractValue got = transformer(g, static_cast<int>(rule), eq_args);
      ++r.checks;
      if (!(got == expect)) r.fail(rl.name + "(" + show_args(eq_args) + ") = " + got.render() + ", expected " + expect.render());
    }
  }
  return r;
}

PropertyReport check_alpha_monotonicity(long cases, std::uint64_t seed) {
  PropertyReport r;
  std::mt19937_64 rng(seed);
  Grammar g = make_string_grammar({});
  const std::string alphabet = "ab";
  for (long c = 0; c < cases; ++c) {
    ++r.cases;
    const PredicateBank p = random_bank(rng, g, alphabet, 4);
    const PredicateBank pstar = grow_bank(rng, p, g, alphabet, 4);
    const AbstractValue phi = random_string_value(rng, 0, alphabet, 4);
    const AbstractValue a = alpha(p, phi);
    const AbstractValue astar = alpha(pstar, phi);
    r.checks += 3;
    if (!implies(astar, a)) r.fail("alpha(P*, " + phi.render() + ") = " + astar.render() + " does not imply " + a.render());
    if (!implies(phi, a)) r.fail(phi.render() + " does not imply alpha = " + a.render());
    for (const auto& s : bounded_gamma(phi, alphabet, 4)) {
      if (!reference_contains(a, s) || !reference_contains(astar, s)) {
        r.fail("alpha(" + phi.render() + ") lost \"" + s + "\"");
        break;
      }
    }
  }
  return r;
}

PropertyReport check_eval_monotonicity(long cases, std::uint64_t seed) {
  PropertyReport r;
  std::mt19937_64 rng(seed);
  StringDslConfig cfg;
  cfg.constant_strings = {"-", "ab"};
  Grammar g = make_string_grammar(cfg);
  const std::string alphabet = "aB1- ";
  for (long c = 0; c < cases; ++c) {
    ++r.cases;
    const Program prog = random_program(rng, g, g.start_symbol(), 4);
    const std::string x = random_string(rng, alphabet, 7);
    const PredicateBank p = random_bank(rng, g, "aB1-", 4);
    const PredicateBank pstar = grow_bank(rng, p, g, "aB1-", 4);
    const Value v = evaluate(g, prog, x);
    const AbstractValue e = abstract_eval(g, prog, x, p);
    const AbstractValue estar = abstract_eval(g, prog, x, pstar);
    r.checks += 3;
    const std::string where = render_program(g, prog) + " on \"" + x + "\"";
    if (!implies(estar, e)) r.fail(where + ": " + estar.render() + " does not imply " + e.render());
    if (!reference_contains(estar, v)) r.fail(where + ": " + estar.render() + " misses " + show(v));
    if (!reference_contains(e, v)) r.fail(where + ": " + e.render() + " misses " + show(v));
  }
  return r;
}

bool same_up_to_renaming(const AbstractFta& a, const AbstractFta& b, std::string* why) {
  auto describe = [](const AbstractFta& m, std::vector<std::string>& keys) {
    std::multiset<std::string> states, edges;
    for (std::size_t q = 0; q < m.automaton.state_count(); ++q) {
      const State& s = m.automaton.states()[q];
      keys.push_back(automaton_key(s.symbol, m.payload(static_cast<int>(q))));
      states.insert(keys.back() + " h" + std::to_string(s.min_height) + (m.automaton.is_final(static_cast<int>(q)) ? " F" : ""));
    }
    for (const auto& t : m.automaton.transitions()) {
      std::string e = std::to_string(t.rule) + "(";
      for (int x : t.args) e += "[" + keys[static_cast<std::size_t>(x)] + "]";
      edges.insert(e + ") -> [" + keys[static_cast<std::size_t>(t.result)] + "]");
    }
    return std::make_pair(states, edges);
  };
  std::vector<std::string> ka, kb;
  const auto da = describe(a, ka);
  const auto db = describe(b, kb);
  if (da.first != db.first) {
    if (why) *why = "states differ (" + std::to_string(ka.size()) + " vs " + std::to_string(kb.size()) + ")";
    return false;
  }
  if (da.second != db.second) {
    if (why) *why = "transitions differ (" + std::to_string(da.second.size()) + " vs " + std::to_string(db.second.size()) + ")";
    return false;
  }
  return true;
}

PropertyReport check_incremental_equivalence(int steps, std::uint64_t seed) {
  PropertyReport r;
  std::mt19937_64 rng(seed);
  StringDslConfig cfg;
  cfg.constant_strings = {"-"};
  cfg.constant_positions = {0, 1, 2};
  cfg.ks = {1, 2};
  Grammar g = make_string_grammar(cfg);
  const PredicateUniverse universe(g);
  const std::string alphabet = "aB1- ";
  constexpr int kEpisode = 10;
  const int b = 3;

  for (int start = 0; start < steps; start += kEpisode) {
    std::vector<Value> inputs;
    for (int i = 0; i < 3; ++i) inputs.emplace_back(random_string(rng, alphabet, 7));
    AftaBuilder builder(g, inputs, b);
    PredicateBank bank = initial_bank(g);
    builder.build(bank);
    for (int s = start; s < std::min(steps, start + kEpisode); ++s) {
      ++r.cases;
      // Atoms implied by some subexpression's output, as refinement would add.
      std::vector<Predicate> added;
      std::uniform_int_distribution<int> coin(0, 2);
      while (added.empty()) {
        const Program prog = random_program(rng, g, g.start_symbol(), b);
        std::vector<Program> nodes{prog};
        for (std::size_t k = 0; k < nodes.size(); ++k) {
          for (const auto& ch : nodes[k].children()) nodes.push_back(ch);
        }
        std::uniform_int_distribution<std::size_t> pick_node(0, nodes.size() - 1), pick_input(0, inputs.size() - 1);
        const Program& node = nodes[pick_node(rng)];
        const Value v = evaluate(g, node, inputs[pick_input(rng)]);
        for (const auto& p : universe.implied_by(g.rule(node.rule()).lhs, v)) {
          if (coin(rng) == 0) added.push_back(p);
        }
        added = bank.missing(added);
      }
      const PredicateBank grown = bank.with(added);
      const AbstractFta inc = builder.update(bank, added);
      const AbstractFta fresh = build_afta(inputs, g, grown, b);
      ++r.checks;
      std::string why;
      if (!same_up_to_renaming(inc, fresh, &why)) r.fail("step " + std::to_string(s) + ": " + why);
      bank = grown;
    }
  }
  return r;
}

}  // namespace refsyn::testing
