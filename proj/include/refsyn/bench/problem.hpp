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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "refsyn/dsl/dataset.hpp"
#include "refsyn/dsl/value.hpp"
#include "refsyn/objective/loss.hpp"
#include "refsyn/objective/objective.hpp"
#include "refsyn/synthesis/synthesize.hpp"

namespace refsyn {

// One benchmark task as stored on disk.
struct Problem {
  std::string name;
  nlohmann::json grammar;
  Dataset dataset;
  LossKind loss = LossKind::ZeroOne;
  Objective objective;
  SynthesisConfig config;
  std::optional<std::vector<Value>> clean_outputs;
  nlohmann::json noise;  // how the outputs were corrupted, if they were
};

// Throws StructuralError (bad content) or GrammarError (bad grammar spec).
Problem parse_problem(const nlohmann::json& doc);
nlohmann::json problem_to_json(const Problem& problem);

// Throw FileError when the file cannot be read, parsed or written.
Problem load_problem(const std::filesystem::path& path);
void save_problem(const Problem& problem, const std::filesystem::path& path);

// *.json files of a directory in name order.
std::vector<Problem> load_problem_dir(const std::filesystem::path& dir);

}  // namespace refsyn
