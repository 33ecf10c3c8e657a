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

#include "refsyn/dsl/cost.hpp"
#include "refsyn/dsl/dataset.hpp"
#include "refsyn/dsl/grammar.hpp"
#include "refsyn/dsl/program.hpp"
#include "refsyn/objective/objective.hpp"

namespace refsyn {

struct OracleResult {
  Score score;
  Program witness = Program::leaf(0);
  std::size_t programs = 0;
};

// Exhaustive search over every program of height <= bound; the first program
// in enumeration order wins ties. Throws OracleInfeasibleError past the cap.
OracleResult brute_force_optimum(const Grammar& grammar, const Dataset& dataset, const Objective& objective,
                                 LossKind loss, const CostModel& model, int height_bound,
                                 double program_cap = 2e6);

}  // namespace refsyn
