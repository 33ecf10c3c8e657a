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
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "refsyn/dsl/cost.hpp"
#include "refsyn/dsl/grammar.hpp"
#include "refsyn/dsl/program.hpp"

namespace refsyn {

// Payload entries are ids into a per-construction interner (concrete values or
// abstract values); the automaton itself never looks inside them.
using Payload = std::vector<int>;

struct PayloadHash {
  std::size_t operator()(const Payload& p) const noexcept;
};

struct State {
  int symbol = 0;
  Payload payload;
  int min_height = 1;
};

// Hyperedge rule(args...) -> result; `rule` indexes the grammar's productions.
struct Transition {
  int rule = 0;
  std::vector<int> args;
  int result = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

class TreeAutomaton {
 public:
  // Returns the existing index when (symbol, payload) is already present; the
  // stored min_height is lowered if the new one is smaller.
  int add_state(int symbol, Payload payload, int min_height);
  std::optional<int> find_state(int symbol, const Payload& payload) const;

  // Duplicate hyperedges are ignored; returns the transition index.
  int add_transition(int rule, std::vector<int> args, int result);

  void set_final(int state, bool final = true);
  bool is_final(int state) const { return final_[static_cast<std::size_t>(state)]; }
  std::vector<int> final_states() const;

  const std::vector<State>& states() const { return states_; }
  const State& state(int q) const { return states_[static_cast<std::size_t>(q)]; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t transition_count() const { return transitions_.size(); }

  // Transitions producing q, by increasing index.
  const std::vector<int>& incoming(int q) const { return incoming_[static_cast<std::size_t>(q)]; }
  // Transitions with q among their arguments (one entry per transition).
  const std::vector<int>& uses(int q) const { return uses_[static_cast<std::size_t>(q)]; }

 private:
  struct Key {
    int symbol;
    Payload payload;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  struct EdgeKey {
    int rule;
    std::vector<int> args;
    int result;
    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  };
  struct EdgeHash {
    std::size_t operator()(const EdgeKey& k) const noexcept;
  };

  std::vector<State> states_;
  std::vector<bool> final_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<int>> incoming_;
  std::vector<std::vector<int>> uses_;
  std::unordered_map<Key, int, KeyHash> index_;
  std::unordered_map<EdgeKey, int, EdgeHash> edges_;
};

// Bottom-up run of the (possibly nondeterministic) automaton: true iff some
// rewriting of the tree ends in one of `roots`.
bool accepts(const TreeAutomaton& automaton, const Program& program, const std::set<int>& roots);

// Every state the tree can be rewritten to.
std::set<int> run(const TreeAutomaton& automaton, const Program& program);

// Cheapest tree accepted at `root` (generalized Dijkstra over the hypergraph).
// Equal costs go to the lowest transition index. Throws NoSolutionError.
Program min_cost_program(const TreeAutomaton& automaton, const Grammar& grammar, int root, const CostModel& model);

// Cheapest trees of height <= bound for every state. Entry q is empty when no
// such tree exists.
class BoundedCosts {
 public:
  BoundedCosts(const TreeAutomaton& automaton, const Grammar& grammar, const CostModel& model, int height_bound);

  bool reachable(int q) const;
  double cost(int q) const;
  Program program(int q) const;

 private:
  Program build(int q, int h) const;

  const TreeAutomaton* automaton_;
  int bound_;
  // cost_[h][q]: cheapest tree with height <= h; via_ holds its top transition.
  std::vector<std::vector<double>> cost_;
  std::vector<std::vector<int>> via_;
  std::vector<std::vector<int>> level_;  // height at which via_ was last improved
};

// Drops states that are not derivable bottom-up or cannot reach a final state.
// Surviving states keep their relative order.
TreeAutomaton reachable_prune(const TreeAutomaton& automaton);

using PayloadRenderer = std::function<std::string(int symbol, const Payload&)>;

// Stable listing of states and transitions.
nlohmann::json dump_automaton(const TreeAutomaton& automaton, const Grammar& grammar,
                              const PayloadRenderer& render_payload = {});

}  // namespace refsyn
