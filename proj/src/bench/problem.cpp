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

#include "refsyn/bench/problem.hpp"

#include <algorithm>
#include <fstream>

#include "refsyn/common/error.hpp"
#include "refsyn/dsl/families.hpp"

namespace refsyn {

namespace {

Value value_from_json(const nlohmann::json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw StructuralError(std::string(what) + " must be a string or an integer");
}

nlohmann::json value_to_json(const Value& v) {
  if (is_int(v)) return as_int(v);
  return value_text(v);
}

template <class T>
T field(const nlohmann::json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw StructuralError(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

Problem parse_problem(const nlohmann::json& doc) {
  if (!doc.is_object()) throw StructuralError("problem must be a JSON object");
  Problem p;
  p.name = field<std::string>(doc, "name", "");
  if (p.name.empty()) throw StructuralError("problem needs a non-empty name");
  if (!doc.contains("grammar")) throw StructuralError("problem needs a grammar");
  p.grammar = doc["grammar"];
  load_grammar(p.grammar);  // validate early

  if (!doc.contains("examples") || !doc["examples"].is_array() || doc["examples"].empty()) {
    throw StructuralError("problem needs a non-empty examples array");
  }
  for (const auto& ex : doc["examples"]) {
    if (!ex.is_object() || !ex.contains("input") || !ex.contains("output")) {
      throw StructuralError("each example needs an input and an output");
    }
    p.dataset.inputs.push_back(value_from_json(ex["input"], "example input"));
    p.dataset.outputs.push_back(value_from_json(ex["output"], "example output"));
  }
  p.loss = parse_loss(field<std::string>(doc, "loss", "zero_one"));
  if (doc.contains("objective")) p.objective = parse_objective(doc["objective"]);

  if (doc.contains("config")) {
    const auto& c = doc["config"];
    if (!c.is_object()) throw StructuralError("config must be an object");
    p.config.epsilon = field<double>(c, "epsilon", p.config.epsilon);
    p.config.height_bound = field<int>(c, "height_bound", p.config.height_bound);
    p.config.max_conjuncts = field<int>(c, "max_conjuncts", p.config.max_conjuncts);
    p.config.min_gain = field<double>(c, "min_gain", p.config.min_gain);
    p.config.iteration_cap = field<int>(c, "iteration_cap", p.config.iteration_cap);
  }
  p.config.validate();

  if (doc.contains("clean_outputs") && !doc["clean_outputs"].is_null()) {
    const auto& c = doc["clean_outputs"];
    if (!c.is_array() || c.size() != p.dataset.size()) {
      throw StructuralError("clean_outputs must pair one-to-one with the examples");
    }
    std::vector<Value> clean;
    for (const auto& v : c) clean.push_back(value_from_json(v, "clean output"));
    p.clean_outputs = std::move(clean);
  }
  if (doc.contains("noise")) p.noise = doc["noise"];
  return p;
}

nlohmann::json problem_to_json(const Problem& p) {
  nlohmann::json examples = nlohmann::json::array();
  for (std::size_t i = 0; i < p.dataset.size(); ++i) {
    examples.push_back({{"input", value_to_json(p.dataset.inputs[i])}, {"output", value_to_json(p.dataset.outputs[i])}});
  }
  nlohmann::json doc{{"name", p.name},
                     {"grammar", p.grammar},
                     {"examples", std::move(examples)},
                     {"loss", loss_name(p.loss)},
                     {"objective", objective_to_json(p.objective)},
                     {"config",
                      {{"epsilon", p.config.epsilon},
                       {"height_bound", p.config.height_bound},
                       {"max_conjuncts", p.config.max_conjuncts},
                       {"min_gain", p.config.min_gain}}}};
  if (p.clean_outputs) {
    nlohmann::json clean = nlohmann::json::array();
    for (const auto& v : *p.clean_outputs) clean.push_back(value_to_json(v));
    doc["clean_outputs"] = std::move(clean);
  }
  if (!p.noise.is_null()) doc["noise"] = p.noise;
  return doc;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot read " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw FileError("cannot parse " + path.string() + ": " + e.what());
  }
  return parse_problem(doc);
}

void save_problem(const Problem& problem, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path.string());
  out << problem_to_json(problem).dump(2) << "\n";
  if (!out) throw FileError("cannot write " + path.string());
}

std::vector<Problem> load_problem_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw FileError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Problem> out;
  for (const auto& f : files) out.push_back(load_problem(f));
  return out;
}

}  // namespace refsyn
