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

#include "refsyn/cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "refsyn/bench/noise.hpp"
#include "refsyn/bench/oracle.hpp"
#include "refsyn/bench/problem.hpp"
#include "refsyn/bench/suite.hpp"
#include "refsyn/common/error.hpp"
#include "refsyn/dsl/families.hpp"

namespace refsyn {

namespace {

struct Overrides {
  std::optional<double> epsilon;
  std::optional<int> height_bound;
  std::optional<std::string> loss;
  std::optional<std::string> objective;
  std::optional<double> lambda;
  std::optional<int> max_conjuncts;
  std::optional<double> min_gain;

  void attach(CLI::App& app) {
    app.add_option("--epsilon", epsilon, "Tolerance on the final loss gap");
    app.add_option("--height-bound", height_bound, "Maximum parse-tree height");
    app.add_option("--loss", loss, "zero_one | zero_inf | dl | one_delete | n_sub");
    app.add_option("--objective", objective, "lexicographic | tradeoff");
    app.add_option("--lambda", lambda, "Complexity weight of the tradeoff objective");
    app.add_option("--max-conjuncts", max_conjuncts, "Atoms per refinement formula");
    app.add_option("--min-gain", min_gain, "Required abstract-loss increase per refinement");
  }

  // Rejects bad names and ranges before any file is touched.
  void validate() const {
    if (loss) parse_loss(*loss);
    if (objective) make_objective(Objective{});
    SynthesisConfig c;
    apply_config(c);
    c.validate();
  }

  Objective make_objective(Objective current) const {
    if (objective) {
      nlohmann::json spec{{"kind", *objective}};
      if (*objective == "tradeoff") spec["lambda"] = lambda.value_or(current.kind == Objective::Kind::Tradeoff ? current.lambda : 1.0);
      return parse_objective(spec);
    }
    if (lambda) {
      if (current.kind != Objective::Kind::Tradeoff) throw StructuralError("--lambda needs --objective tradeoff");
      return parse_objective({{"kind", "tradeoff"}, {"lambda", *lambda}});
    }
    return current;
  }

  void apply_config(SynthesisConfig& c) const {
    if (epsilon) c.epsilon = *epsilon;
    if (height_bound) c.height_bound = *height_bound;
    if (max_conjuncts) c.max_conjuncts = *max_conjuncts;
    if (min_gain) c.min_gain = *min_gain;
  }

  void apply(Problem& p) const {
    apply_config(p.config);
    p.config.validate();
    if (loss) p.loss = parse_loss(*loss);
    p.objective = make_objective(p.objective);
  }
};

// Runs `body`, mapping library errors onto exit codes.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

Problem load_with(const std::string& path, const Overrides& o) {
  Problem p;
  try {
    p = load_problem(path);
  } catch (const StructuralError& e) {
    throw FileError(path + ": " + e.what());
  }
  o.apply(p);
  return p;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw FileError("cannot write " + path);
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Optimal program synthesis from noisy input/output examples"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print refinement traces to stderr");

  Overrides overrides;
  std::string engine = "afta";
  std::optional<long> timeout_ms;
  std::string out_path;

  auto* solve = app.add_subcommand("solve", "Synthesize a program for one problem file");
  std::string problem_path;
  solve->add_option("problem", problem_path, "Problem JSON file")->required();
  solve->add_option("--engine", engine, "afta | cfta")->check(CLI::IsMember({"afta", "cfta"}));
  solve->add_option("--timeout-ms", timeout_ms, "Wall-clock budget");
  solve->add_option("--out", out_path, "Write the result as JSON");
  solve->add_flag("--verbose", verbose, "Print the refinement trace to stderr");
  overrides.attach(*solve);

  auto* bench = app.add_subcommand("bench", "Run every problem of a directory and write a CSV report");
  std::string dir;
  std::vector<std::string> engines{"afta", "cfta"};
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  bench->add_option("dir", dir, "Directory of problem files")->required();
  bench->add_option("--engine", engines, "Engines to run (repeatable)")->check(CLI::IsMember({"afta", "cfta"}));
  bench->add_option("--timeout-ms", timeout_ms, "Budget per run");
  bench->add_option("--jobs", jobs, "Parallel runs")->check(CLI::PositiveNumber);
  bench->add_option("--out", out_path, "CSV path (stdout if omitted)");
  bench->add_flag("--verbose", verbose, "Print one line per run to stderr");
  overrides.attach(*bench);

  auto* oracle = app.add_subcommand("oracle", "Exhaustively search for the optimum of one problem");
  oracle->add_option("problem", problem_path, "Problem JSON file")->required();
  oracle->add_option("--out", out_path, "Write the result as JSON");
  overrides.attach(*oracle);

  auto* noise = app.add_subcommand("noise", "Corrupt a problem's outputs, keeping the originals as clean outputs");
  std::string kind;
  std::size_t n = 1;
  double fraction = 0.95;
  std::uint64_t seed = 0;
  noise->add_option("problem", problem_path, "Problem JSON file")->required();
  noise->add_option("--kind", kind, "cyclic-delete | digit-sub")->required()->check(CLI::IsMember({"cyclic-delete", "digit-sub"}));
  noise->add_option("--n", n, "Number of trailing outputs to corrupt (cyclic-delete)");
  noise->add_option("--fraction", fraction, "Share of outputs to corrupt (digit-sub)");
  noise->add_option("--seed", seed, "Selection seed (digit-sub)");
  noise->add_option("--out", out_path, "Output problem file")->required();

  try {
    app.parse(argc, argv);
    overrides.validate();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*solve) {
    return guarded([&] {
      const Problem p = load_with(problem_path, overrides);
      const Deadline deadline = timeout_ms ? Deadline::after(std::chrono::milliseconds(*timeout_ms)) : Deadline::never();
      const RunReport r = run_problem(p, parse_engine(engine), deadline);
      if (verbose && !r.trace.is_null()) std::cerr << r.trace.dump(2) << "\n";
      if (r.outcome == Outcome::Timeout) throw TimeoutError(r.error);
      if (r.outcome == Outcome::Error) {
        if (r.error.find("iteration cap") != std::string::npos) throw InvariantError(r.error);
        std::cerr << "error: " << r.error << "\n";
        return static_cast<int>(kExitFailure);
      }
      std::cout << r.program << "\n" << render_score(*r.score) << "\n";
      std::cout << "iterations=" << r.iterations << " bank_size=" << r.bank_size << " states=" << r.states << "\n";
      if (r.clean_loss) std::cout << "clean_loss=" << r.clean_loss->render() << "\n";
      if (!out_path.empty()) {
        nlohmann::json doc{{"problem", r.problem}, {"engine", engine_name(r.engine)}, {"program", r.program},
                           {"loss", r.score->loss.render()}, {"complexity", r.score->complexity},
                           {"iterations", r.iterations}, {"bank_size", r.bank_size}, {"states", r.states}};
        if (!r.trace.is_null()) doc["trace"] = r.trace;
        write_text(out_path, doc.dump(2) + "\n");
      }
      return static_cast<int>(kExitOk);
    });
  }

  if (*bench) {
    return guarded([&] {
      std::vector<Problem> problems;
      try {
        problems = load_problem_dir(dir);
      } catch (const StructuralError& e) {
        throw FileError(e.what());
      }
      for (auto& p : problems) overrides.apply(p);
      std::vector<Engine> selected;
      for (const auto& e : engines) {
        if (std::find(selected.begin(), selected.end(), parse_engine(e)) == selected.end()) selected.push_back(parse_engine(e));
      }
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw FileError("cannot write " + out_path);
      }
      const auto reports = run_suite(problems, selected, timeout_ms, jobs);
      if (verbose) {
        for (const auto& r : reports) {
          std::cerr << r.problem << " " << engine_name(r.engine) << " " << outcome_name(r.outcome) << " "
                    << (r.score ? render_score(*r.score) : r.error) << "\n";
        }
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      write_csv(out, reports);
      if (!out) throw FileError("cannot write " + out_path);
      return static_cast<int>(kExitOk);
    });
  }

  if (*oracle) {
    return guarded([&] {
      const Problem p = load_with(problem_path, overrides);
      const Grammar grammar = load_grammar(p.grammar);
      const auto r = brute_force_optimum(grammar, p.dataset, p.objective, p.loss, CostModel::size(), p.config.height_bound);
      const std::string program = render_program(grammar, r.witness);
      std::cout << program << "\n" << render_score(r.score) << "\n" << "programs=" << r.programs << "\n";
      if (!out_path.empty()) {
        write_text(out_path, nlohmann::json{{"problem", p.name}, {"program", program}, {"loss", r.score.loss.render()},
                                            {"complexity", r.score.complexity}, {"programs", r.programs}}
                                 .dump(2) + "\n");
      }
      return static_cast<int>(kExitOk);
    });
  }

  // noise
  return guarded([&]() -> int {
    Problem p = load_with(problem_path, overrides);
    std::vector<std::string> outputs;
    for (const auto& v : p.dataset.outputs) {
      if (!is_string(v)) {
        std::cerr << "error: noise injection needs string outputs\n";
        return kExitUsage;
      }
      outputs.push_back(as_string(v));
    }
    std::vector<std::string> noisy;
    try {
      if (kind == "cyclic-delete") {
        noisy = apply_cyclic_deletion_noise(outputs, n);
        p.noise = {{"kind", kind}, {"n", n}};
      } else {
        noisy = apply_digit_substitution_noise(outputs, fraction, seed);
        p.noise = {{"kind", kind}, {"fraction", fraction}, {"seed", seed}};
      }
    } catch (const StructuralError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    if (!p.clean_outputs) p.clean_outputs = p.dataset.outputs;
    for (std::size_t i = 0; i < noisy.size(); ++i) p.dataset.outputs[i] = noisy[i];
    save_problem(p, out_path);
    return kExitOk;
  });
}

}  // namespace refsyn
