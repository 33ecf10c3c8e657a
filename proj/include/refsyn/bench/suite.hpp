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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "refsyn/bench/problem.hpp"
#include "refsyn/common/deadline.hpp"
#include "refsyn/objective/objective.hpp"

namespace refsyn {

enum class Engine { Afta, Cfta };
enum class Outcome { Solved, Timeout, Error };

Engine parse_engine(const std::string& name);  // afta | cfta
std::string engine_name(Engine engine);
std::string outcome_name(Outcome outcome);

struct RunReport {
  std::string problem;
  Engine engine = Engine::Afta;
  Outcome outcome = Outcome::Error;
  double ms = 0.0;
  std::optional<Score> score;           // concrete
  std::optional<Score> abstract_score;  // last candidate's
  std::optional<ExtendedReal> clean_loss;
  int iterations = 0;
  std::size_t bank_size = 0;
  std::size_t states = 0;
  std::string program;
  std::string error;
  nlohmann::json trace;  // refinement trace (afta only)
};

// Runs one engine on one problem; errors and timeouts are captured, not thrown.
RunReport run_problem(const Problem& problem, Engine engine, const Deadline& deadline = Deadline::never());

// Every (problem, engine) pair under its own budget on `parallelism` workers.
// Reports come back sorted by problem name, then engine name.
std::vector<RunReport> run_suite(const std::vector<Problem>& problems, const std::vector<Engine>& engines,
                                 std::optional<long> budget_ms, std::size_t parallelism);

void write_csv(std::ostream& out, const std::vector<RunReport>& reports);

}  // namespace refsyn
