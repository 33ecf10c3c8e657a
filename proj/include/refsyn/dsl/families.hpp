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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "refsyn/dsl/grammar.hpp"

namespace refsyn {

enum class TokenClass { Upper, Lower, Digits, Alnum, Space, Literal };

// Match token τ of the string family. Class tokens match maximal runs;
// a literal token matches each occurrence of its character.
struct MatchToken {
  std::string name;
  TokenClass cls = TokenClass::Literal;
  char literal = 0;
};

// Half-open [begin, end) matches of `token` in `s`, left to right.
std::vector<std::pair<std::int64_t, std::int64_t>> token_matches(const MatchToken& token,
                                                                 const std::string& s);

// Parameters of the `string_v1` family:
//
//   e   := x | ConstStr(c) | Concat(e, e) | SubStr(v, p, p)
//   v   := x
//   p   := ConstPos(k) | Pos(v, tok, occ, dir)
//   tok := <match tokens>     occ := <ks>     dir := start | end
//
// SubStr is 0-based, start-inclusive, end-exclusive. Pos(v, τ, k, dir) is the
// start or end of the k-th (k >= 1) match of τ; fewer matches give bottom.
struct StringDslConfig {
  std::vector<std::string> constant_strings;
  std::vector<std::int64_t> constant_positions{0, 1, 2, 3};
  // Empty means the default set: Upper, Lower, Digits, Alnum, Space plus one
  // literal token per distinct character of the constant strings.
  std::vector<MatchToken> match_tokens;
  std::vector<std::int64_t> ks{1, 2, 3};
  bool use_start = true;
  bool use_end = true;
};

// Default token set for a list of constant strings.
std::vector<MatchToken> default_match_tokens(const std::vector<std::string>& constant_strings);

Grammar make_string_grammar(StringDslConfig config);

// n := x | n + t | n * t;  t := 2 | 3
Grammar make_arith_grammar();

// Instantiates a built-in family from the `grammar` object of a problem file:
// {"family":"arith_example"} or {"family":"string_v1", "constants":[...],
// "positions":[...], "tokens":[...], "ks":[...]}.
Grammar load_grammar(const nlohmann::json& spec);

}  // namespace refsyn
