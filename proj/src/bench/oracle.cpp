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

#include "refsyn/bench/oracle.hpp"

#include "refsyn/common/error.hpp"
#include "refsyn/dsl/enumerate.hpp"

namespace refsyn {

OracleResult brute_force_optimum(const Grammar& grammar, const Dataset& dataset, const Objective& objective,
                                 LossKind loss, const CostModel& model, int height_bound, double program_cap) {
  check_dataset(dataset);
  if (height_bound < 1) throw OracleInfeasibleError("height bound must be at least 1");
  const double total = count_programs(grammar, height_bound);
  if (total > program_cap) {
    throw OracleInfeasibleError("enumeration would visit " + std::to_string(total) + " programs");
  }
  std::optional<OracleResult> best;
  std::size_t seen = 0;
  enumerate_programs(grammar, height_bound, [&](const Program& p) {
    ++seen;
    Score s{dataset_loss(loss, evaluate_all(grammar, p, dataset.inputs), dataset.outputs), program_cost(grammar, p, model)};
    if (!best || score_less(objective, s, best->score)) best = OracleResult{s, p, 0};
    return true;
  });
  if (!best) throw NoSolutionError("no program fits the height bound");
  best->programs = seen;
  return *best;
}

}  // namespace refsyn
