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
#include <vector>

#include "refsyn/dsl/grammar.hpp"
#include "refsyn/dsl/program.hpp"

namespace refsyn {

// Visits every program derivable from the start symbol with height <= bound,
// each exactly once, ordered by height, then rule index, then children
// (lexicographically in this same order). Stops early when `visit` returns false.
void enumerate_programs(const Grammar& grammar, int height_bound,
                        const std::function<bool(const Program&)>& visit);

std::vector<Program> enumerate_programs(const Grammar& grammar, int height_bound);

// Number of programs enumerate_programs would produce (as a double; may be huge).
double count_programs(const Grammar& grammar, int height_bound);

}  // namespace refsyn
