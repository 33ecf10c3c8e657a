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

#include "refsyn/automata/tree_automaton.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

#include "refsyn/common/error.hpp"

namespace refsyn {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> rule_costs(const Grammar& grammar, const CostModel& model) {
  std::vector<double> out;
  for (std::size_t r = 0; r < grammar.rules().size(); ++r) out.push_back(model.rule_cost(grammar, static_cast<int>(r)));
  return out;
}

}  // namespace

std::size_t PayloadHash::operator()(const Payload& p) const noexcept {
  std::size_t h = p.size();
  for (int v : p) h = mix(h, static_cast<std::size_t>(v));
  return h;
}

std::size_t TreeAutomaton::KeyHash::operator()(const Key& k) const noexcept {
  return mix(PayloadHash{}(k.payload), static_cast<std::size_t>(k.symbol));
}

std::size_t TreeAutomaton::EdgeHash::operator()(const EdgeKey& k) const noexcept {
  return mix(mix(PayloadHash{}(k.args), static_cast<std::size_t>(k.rule)), static_cast<std::size_t>(k.result));
}

int TreeAutomaton::add_state(int symbol, Payload payload, int min_height) {
  Key key{symbol, std::move(payload)};
  auto it = index_.find(key);
  if (it != index_.end()) {
    auto& s = states_[static_cast<std::size_t>(it->second)];
    s.min_height = std::min(s.min_height, min_height);
    return it->second;
  }
  const int q = static_cast<int>(states_.size());
  states_.push_back({symbol, key.payload, min_height});
  final_.push_back(false);
  incoming_.emplace_back();
  uses_.emplace_back();
  index_.emplace(std::move(key), q);
  return q;
}

std::optional<int> TreeAutomaton::find_state(int symbol, const Payload& payload) const {
  auto it = index_.find(Key{symbol, payload});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int TreeAutomaton::add_transition(int rule, std::vector<int> args, int result) {
  EdgeKey key{rule, std::move(args), result};
  auto it = edges_.find(key);
  if (it != edges_.end()) return it->second;
  for (int a : key.args) {
    if (a < 0 || static_cast<std::size_t>(a) >= states_.size()) throw InvariantError("transition argument out of range");
  }
  if (result < 0 || static_cast<std::size_t>(result) >= states_.size()) throw InvariantError("transition result out of range");
  const int t = static_cast<int>(transitions_.size());
  transitions_.push_back({rule, key.args, result});
  incoming_[static_cast<std::size_t>(result)].push_back(t);
  std::vector<int> seen;
  for (int a : key.args) {
    if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
    seen.push_back(a);
    uses_[static_cast<std::size_t>(a)].push_back(t);
  }
  edges_.emplace(std::move(key), t);
  return t;
}

void TreeAutomaton::set_final(int state, bool final) { final_.at(static_cast<std::size_t>(state)) = final; }

std::vector<int> TreeAutomaton::final_states() const {
  std::vector<int> out;
  for (std::size_t q = 0; q < final_.size(); ++q) {
    if (final_[q]) out.push_back(static_cast<int>(q));
  }
  return out;
}

std::set<int> run(const TreeAutomaton& automaton, const Program& program) {
  std::vector<std::set<int>> kids;
  for (const auto& c : program.children()) {
    kids.push_back(run(automaton, c));
    if (kids.back().empty()) return {};
  }
  std::set<int> out;
  if (kids.empty()) {
    for (const auto& t : automaton.transitions()) {
      if (t.rule == program.rule() && t.args.empty()) out.insert(t.result);
    }
    return out;
  }
  // Candidate transitions are those using some state of the first child.
  for (int q : kids[0]) {
    for (int ti : automaton.uses(q)) {
      const Transition& t = automaton.transitions()[static_cast<std::size_t>(ti)];
      if (t.rule != program.rule() || t.args.size() != kids.size()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < kids.size() && ok; ++i) ok = kids[i].count(t.args[i]) != 0;
      if (ok) out.insert(t.result);
    }
  }
  return out;
}

bool accepts(const TreeAutomaton& automaton, const Program& program, const std::set<int>& roots) {
  for (int q : run(automaton, program)) {
    if (roots.count(q)) return true;
  }
  return false;
}

Program min_cost_program(const TreeAutomaton& automaton, const Grammar& grammar, int root, const CostModel& model) {
  const std::size_t n = automaton.state_count();
  if (root < 0 || static_cast<std::size_t>(root) >= n) throw NoSolutionError("root state does not exist");
  const auto costs = rule_costs(grammar, model);
  const auto& edges = automaton.transitions();

  std::vector<double> best(n, kInf);
  std::vector<int> via(n, -1);
  std::vector<bool> settled(n, false);
  std::vector<std::size_t> remaining(edges.size());
  using Item = std::tuple<double, int, int>;  // cost, transition, state
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;

  auto relax = [&](int t) {
    const Transition& e = edges[static_cast<std::size_t>(t)];
    double c = costs[static_cast<std::size_t>(e.rule)];
    for (int a : e.args) c += best[static_cast<std::size_t>(a)];
    const auto r = static_cast<std::size_t>(e.result);
    if (settled[r]) return;
    if (c < best[r] || (c == best[r] && t < via[r])) {
      best[r] = c;
      via[r] = t;
      queue.emplace(c, t, e.result);
    }
  };

  for (std::size_t t = 0; t < edges.size(); ++t) {
    remaining[t] = edges[t].args.size();
    if (remaining[t] == 0) relax(static_cast<int>(t));
  }
  while (!queue.empty()) {
    auto [c, t, q] = queue.top();
    queue.pop();
    const auto qi = static_cast<std::size_t>(q);
    if (settled[qi] || c != best[qi] || t != via[qi]) continue;
    settled[qi] = true;
    if (q == root) break;
    for (int u : automaton.uses(q)) {
      const auto& args = edges[static_cast<std::size_t>(u)].args;
      remaining[static_cast<std::size_t>(u)] -= static_cast<std::size_t>(std::count(args.begin(), args.end(), q));
      if (remaining[static_cast<std::size_t>(u)] == 0) relax(u);
    }
  }
  if (!settled[static_cast<std::size_t>(root)]) throw NoSolutionError("no tree is accepted at the requested state");

  std::function<Program(int)> build = [&](int q) -> Program {
    const Transition& e = edges[static_cast<std::size_t>(via[static_cast<std::size_t>(q)])];
    if (e.args.empty()) return Program::leaf(e.rule);
    std::vector<Program> children;
    for (int a : e.args) children.push_back(build(a));
    return Program::apply(e.rule, std::move(children));
  };
  return build(root);
}

BoundedCosts::BoundedCosts(const TreeAutomaton& automaton, const Grammar& grammar, const CostModel& model,
                           int height_bound)
    : automaton_(&automaton), bound_(std::max(height_bound, 0)) {
  const std::size_t n = automaton.state_count();
  const auto costs = rule_costs(grammar, model);
  const auto& edges = automaton.transitions();
  cost_.assign(static_cast<std::size_t>(bound_) + 1, std::vector<double>(n, kInf));
  via_.assign(static_cast<std::size_t>(bound_) + 1, std::vector<int>(n, -1));
  level_.assign(static_cast<std::size_t>(bound_) + 1, std::vector<int>(n, 0));
  for (int h = 1; h <= bound_; ++h) {
    const auto hi = static_cast<std::size_t>(h);
    cost_[hi] = cost_[hi - 1];
    via_[hi] = via_[hi - 1];
    level_[hi] = level_[hi - 1];
    const auto& below = cost_[hi - 1];
    for (std::size_t t = 0; t < edges.size(); ++t) {
      const Transition& e = edges[t];
      double c = costs[static_cast<std::size_t>(e.rule)];
      for (int a : e.args) {
        c += below[static_cast<std::size_t>(a)];
        if (c == kInf) break;
      }
      const auto r = static_cast<std::size_t>(e.result);
      if (c < cost_[hi][r]) {
        cost_[hi][r] = c;
        via_[hi][r] = static_cast<int>(t);
        level_[hi][r] = h;
      }
    }
  }
}

bool BoundedCosts::reachable(int q) const {
  return bound_ > 0 && via_[static_cast<std::size_t>(bound_)][static_cast<std::size_t>(q)] >= 0;
}

double BoundedCosts::cost(int q) const {
  return bound_ > 0 ? cost_[static_cast<std::size_t>(bound_)][static_cast<std::size_t>(q)] : kInf;
}

Program BoundedCosts::program(int q) const {
  if (!reachable(q)) throw NoSolutionError("no tree within the height bound is accepted at the requested state");
  return build(q, bound_);
}

Program BoundedCosts::build(int q, int h) const {
  const auto qi = static_cast<std::size_t>(q);
  const int lvl = level_[static_cast<std::size_t>(h)][qi];
  const Transition& e = automaton_->transitions()[static_cast<std::size_t>(via_[static_cast<std::size_t>(h)][qi])];
  if (e.args.empty()) return Program::leaf(e.rule);
  std::vector<Program> children;
  for (int a : e.args) children.push_back(build(a, lvl - 1));
  return Program::apply(e.rule, std::move(children));
}

TreeAutomaton reachable_prune(const TreeAutomaton& automaton) {
  const std::size_t n = automaton.state_count();
  const auto& edges = automaton.transitions();

  std::vector<bool> derivable(n, false);
  std::vector<std::size_t> remaining(edges.size());
  std::vector<int> work;
  auto fire = [&](const Transition& e) {
    const auto r = static_cast<std::size_t>(e.result);
    if (!derivable[r]) {
      derivable[r] = true;
      work.push_back(e.result);
    }
  };
  for (std::size_t t = 0; t < edges.size(); ++t) {
    remaining[t] = edges[t].args.size();
    if (remaining[t] == 0) fire(edges[t]);
  }
  while (!work.empty()) {
    const int q = work.back();
    work.pop_back();
    for (int u : automaton.uses(q)) {
      const auto& args = edges[static_cast<std::size_t>(u)].args;
      remaining[static_cast<std::size_t>(u)] -= static_cast<std::size_t>(std::count(args.begin(), args.end(), q));
      if (remaining[static_cast<std::size_t>(u)] == 0) fire(edges[static_cast<std::size_t>(u)]);
    }
  }

  auto usable = [&](const Transition& e) {
    return std::all_of(e.args.begin(), e.args.end(), [&](int a) { return derivable[static_cast<std::size_t>(a)]; });
  };
  std::vector<bool> live(n, false);
  for (int q : automaton.final_states()) {
    if (derivable[static_cast<std::size_t>(q)]) {
      live[static_cast<std::size_t>(q)] = true;
      work.push_back(q);
    }
  }
  while (!work.empty()) {
    const int q = work.back();
    work.pop_back();
    for (int t : automaton.incoming(q)) {
      const Transition& e = edges[static_cast<std::size_t>(t)];
      if (!usable(e)) continue;
      for (int a : e.args) {
        if (!live[static_cast<std::size_t>(a)]) {
          live[static_cast<std::size_t>(a)] = true;
          work.push_back(a);
        }
      }
    }
  }

  TreeAutomaton out;
  std::vector<int> renumber(n, -1);
  for (std::size_t q = 0; q < n; ++q) {
    if (!live[q]) continue;
    const State& s = automaton.states()[q];
    renumber[q] = out.add_state(s.symbol, s.payload, s.min_height);
    if (automaton.is_final(static_cast<int>(q))) out.set_final(renumber[q]);
  }
  for (const Transition& e : edges) {
    if (renumber[static_cast<std::size_t>(e.result)] < 0 || !usable(e)) continue;
    std::vector<int> args;
    for (int a : e.args) args.push_back(renumber[static_cast<std::size_t>(a)]);
    out.add_transition(e.rule, std::move(args), renumber[static_cast<std::size_t>(e.result)]);
  }
  return out;
}

nlohmann::json dump_automaton(const TreeAutomaton& automaton, const Grammar& grammar,
                              const PayloadRenderer& render_payload) {
  nlohmann::json states = nlohmann::json::array();
  for (std::size_t q = 0; q < automaton.state_count(); ++q) {
    const State& s = automaton.states()[q];
    nlohmann::json entry{{"id", q},
                         {"symbol", grammar.symbols().at(static_cast<std::size_t>(s.symbol)).name},
                         {"min_height", s.min_height},
                         {"final", automaton.is_final(static_cast<int>(q))}};
    if (render_payload) {
      entry["payload"] = render_payload(s.symbol, s.payload);
    } else {
      entry["payload"] = s.payload;
    }
    states.push_back(std::move(entry));
  }
  nlohmann::json transitions = nlohmann::json::array();
  for (const Transition& e : automaton.transitions()) {
    const Rule& r = grammar.rule(e.rule);
    transitions.push_back({{"rule", r.is_terminal() ? r.label : r.name}, {"args", e.args}, {"result", e.result}});
  }
  return {{"states", std::move(states)}, {"transitions", std::move(transitions)}};
}

}  // namespace refsyn
