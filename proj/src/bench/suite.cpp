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

#include "refsyn/bench/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "refsyn/common/error.hpp"
#include "refsyn/dsl/families.hpp"

namespace refsyn {

Engine parse_engine(const std::string& name) {
  if (name == "afta") return Engine::Afta;
  if (name == "cfta") return Engine::Cfta;
  throw StructuralError("unknown engine '" + name + "'");
}

std::string engine_name(Engine engine) { return engine == Engine::Afta ? "afta" : "cfta"; }

std::string outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Solved:
      return "solved";
    case Outcome::Timeout:
      return "timeout";
    case Outcome::Error:
      return "error";
  }
  return "error";
}

RunReport run_problem(const Problem& problem, Engine engine, const Deadline& deadline) {
  RunReport report;
  report.problem = problem.name;
  report.engine = engine;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Grammar grammar = load_grammar(problem.grammar);
    const CostModel model = CostModel::size();
    SynthesisResult r;
    if (engine == Engine::Cfta) {
      r = synthesize_cfta(problem.dataset, grammar, problem.objective, problem.loss, model, problem.config.height_bound,
                          deadline);
    } else {
      r = synthesize(problem.dataset, grammar, problem.config, initial_bank(grammar), PredicateUniverse(grammar),
                     problem.objective, problem.loss, model, deadline);
      report.trace = r.trace.to_json();
    }
    report.outcome = Outcome::Solved;
    report.score = r.score;
    report.abstract_score = r.abstract_score;
    report.iterations = r.iterations;
    report.bank_size = r.bank_size;
    report.states = r.states;
    report.program = render_program(grammar, r.program);
    if (problem.clean_outputs) {
      report.clean_loss = dataset_loss(problem.loss, evaluate_all(grammar, r.program, problem.dataset.inputs),
                                       *problem.clean_outputs);
    }
  } catch (const TimeoutError& e) {
    report.outcome = Outcome::Timeout;
    report.error = e.what();
  } catch (const IterationCapError& e) {
    report.outcome = Outcome::Error;
    report.error = e.what();
    report.trace = e.trace().to_json();
  } catch (const std::exception& e) {
    report.outcome = Outcome::Error;
    report.error = e.what();
  }
  report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<RunReport> run_suite(const std::vector<Problem>& problems, const std::vector<Engine>& engines,
                                 std::optional<long> budget_ms, std::size_t parallelism) {
  struct Job {
    std::size_t problem;
    Engine engine;
  };
  std::vector<Job> jobs;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    for (Engine e : engines) jobs.push_back({p, e});
  }
  std::vector<RunReport> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const Deadline deadline = budget_ms ? Deadline::after(std::chrono::milliseconds(*budget_ms)) : Deadline::never();
      reports[j] = run_problem(problems[jobs[j].problem], jobs[j].engine, deadline);
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(parallelism, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::stable_sort(reports.begin(), reports.end(), [](const RunReport& a, const RunReport& b) {
    if (a.problem != b.problem) return a.problem < b.problem;
    return engine_name(a.engine) < engine_name(b.engine);
  });
  return reports;
}

void write_csv(std::ostream& out, const std::vector<RunReport>& reports) {
  out << "problem,engine,outcome,ms,loss,complexity,clean_loss,iterations,bank_size,states\n";
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  for (const auto& r : reports) {
    out << quote(r.problem) << ',' << engine_name(r.engine) << ',' << outcome_name(r.outcome) << ','
        << static_cast<long long>(r.ms + 0.5) << ',';
    if (r.score) out << r.score->loss.render() << ',' << ExtendedReal(r.score->complexity).render();
    else out << ',';
    out << ',';
    if (r.clean_loss) out << r.clean_loss->render();
    out << ',';
    if (r.outcome == Outcome::Solved) {
      out << r.iterations << ',';
      if (r.engine == Engine::Afta) out << r.bank_size;  // the baseline has no bank
      out << ',' << r.states;
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

}  // namespace refsyn
