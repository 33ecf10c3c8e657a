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

#include <chrono>
#include <cmath>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "refsyn/bench/noise.hpp"
#include "refsyn/bench/oracle.hpp"
#include "refsyn/bench/problem.hpp"
#include "refsyn/bench/suite.hpp"
#include "refsyn/common/error.hpp"
#include "refsyn/dsl/families.hpp"

using namespace refsyn;
using Strings = std::vector<std::string>;

namespace {

Problem arith_problem(std::vector<std::int64_t> ys) {
  Problem p;
  p.name = "arith";
  p.grammar = {{"family", "arith_example"}};
  for (std::size_t i = 0; i < ys.size(); ++i) {
    p.dataset.inputs.emplace_back(static_cast<std::int64_t>(i + 1));
    p.dataset.outputs.emplace_back(ys[i]);
  }
  p.config.height_bound = 3;
  return p;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("cyclic deletion noise") {
  CHECK(apply_cyclic_deletion_noise({"abc", "def"}, 1) == Strings{"abc", "ef"});
  CHECK(apply_cyclic_deletion_noise({"abc", "def", "ghi"}, 3) == Strings{"bc", "df", "gh"});
  CHECK(apply_cyclic_deletion_noise({"abc", "def"}, 0) == Strings{"abc", "def"});
  // positions wrap per output
  CHECK(apply_cyclic_deletion_noise({"ab", "xy", "pq"}, 3) == Strings{"b", "x", "q"});
  CHECK_THROWS_AS(apply_cyclic_deletion_noise({"abc"}, 2), StructuralError);
  CHECK_THROWS_AS(apply_cyclic_deletion_noise({"abc", ""}, 1), StructuralError);
}

TEST_CASE("digit substitution noise") {
  CHECK(apply_digit_substitution_noise({"123"}, 1.0, 0) == Strings{"223"});
  CHECK(apply_digit_substitution_noise({"123"}, 1.0, 99) == Strings{"223"});
  CHECK(apply_digit_substitution_noise({"9"}, 1.0, 5) == Strings{"0"});
  CHECK(apply_digit_substitution_noise({"a1", "b2"}, 0.0, 5) == Strings{"a1", "b2"});
  // the counter advances across corrupted outputs, counting digits only
  CHECK(apply_digit_substitution_noise({"1-2", "3-4", "5x6x7"}, 1.0, 3) == Strings{"2-2", "3-5", "5x6x8"});
  try {
    apply_digit_substitution_noise({"12", "ab"}, 1.0, 1);
    FAIL("expected an error");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find('1') != std::string::npos);
  }
  CHECK_THROWS_AS(apply_digit_substitution_noise({"1"}, 1.5, 1), StructuralError);
}

TEST_CASE("property: corruption count and determinism") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> frac(0, 1);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 30;
    const double f = i % 10 == 0 ? 0.95 : frac(rng);
    const std::uint64_t seed = rng();
    Strings outs;
    for (std::size_t k = 0; k < n; ++k) outs.push_back("x" + refsyn::testing::random_string(rng, "0123456789", 5) + "7");
    const auto a = apply_digit_substitution_noise(outs, f, seed);
    CHECK(a == apply_digit_substitution_noise(outs, f, seed));
    std::size_t changed = 0;
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(a[k].size() == outs[k].size());
      changed += a[k] != outs[k];
    }
    const std::size_t expect = static_cast<std::size_t>(std::ceil(f * static_cast<double>(n) - 1e-9));
    CHECK(changed == expect);
    CHECK(corruption_count(f, n) == expect);
    const auto sel = select_corrupted(n, f, seed);
    CHECK(sel.size() == expect);
    CHECK(std::set<std::size_t>(sel.begin(), sel.end()).size() == sel.size());
    CHECK(apply_cyclic_deletion_noise(outs, n % 3) == apply_cyclic_deletion_noise(outs, n % 3));
  }
  CHECK(corruption_count(0.95, 20) == 19);
  CHECK(corruption_count(0.95, 5) == 5);
}

TEST_CASE("brute-force oracle") {
  Grammar g = make_arith_grammar();
  Dataset d{{std::int64_t{1}, std::int64_t{2}}, {std::int64_t{3}, std::int64_t{4}}};
  auto r = brute_force_optimum(g, d, Objective::lexicographic(), LossKind::ZeroOne, CostModel::size(), 3);
  CHECK(r.score == Score{0, 3});
  CHECK(render_program(g, r.witness) == "x + 2");
  CHECK(r.programs > 0);
  CHECK_THROWS_AS(brute_force_optimum(g, d, Objective::lexicographic(), LossKind::ZeroOne, CostModel::size(), 0),
                  OracleInfeasibleError);
  CHECK_THROWS_AS(brute_force_optimum(g, d, Objective::lexicographic(), LossKind::ZeroOne, CostModel::size(), 3, 10),
                  OracleInfeasibleError);

  // x = <1, 2>, y = <3, 100>: nothing matches both
  Dataset bad{{std::int64_t{1}, std::int64_t{2}}, {std::int64_t{3}, std::int64_t{100}}};
  auto inf = brute_force_optimum(g, bad, Objective::lexicographic(), LossKind::ZeroInf, CostModel::size(), 2);
  CHECK(inf.score.loss.is_infinite());
  CHECK(inf.score.complexity == 1);
}

TEST_CASE("problem files round-trip") {
  const Problem p = load_problem(refsyn::testing::data_path("problems/prefix3.json"));
  CHECK(p.name == "prefix3");
  CHECK(p.dataset.size() == 5);
  REQUIRE(p.clean_outputs.has_value());
  const Problem q = parse_problem(problem_to_json(p));
  CHECK(problem_to_json(q) == problem_to_json(p));

  const auto dir = std::filesystem::temp_directory_path() / "refsyn_bench_test";
  std::filesystem::create_directories(dir);
  save_problem(p, dir / "copy.json");
  CHECK(problem_to_json(load_problem(dir / "copy.json")) == problem_to_json(p));
  std::filesystem::remove_all(dir);

  CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), FileError);
  nlohmann::json doc = problem_to_json(p);
  doc["examples"] = nlohmann::json::array();
  CHECK_THROWS_AS(parse_problem(doc), StructuralError);
  doc = problem_to_json(p);
  doc["clean_outputs"].erase(0);
  CHECK_THROWS_AS(parse_problem(doc), StructuralError);
  doc = problem_to_json(p);
  doc["grammar"] = {{"family", "nope"}};
  CHECK_THROWS_AS(parse_problem(doc), GrammarError);

  const auto all = load_problem_dir(refsyn::testing::data_path("problems"));
  CHECK(all.size() == 12);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].name < all[i].name);
}

TEST_CASE("run_problem and run_suite") {
  Problem p = arith_problem({3, 4});
  p.clean_outputs = std::vector<Value>{std::int64_t{3}, std::int64_t{4}};
  for (Engine e : {Engine::Afta, Engine::Cfta}) {
    auto r = run_problem(p, e);
    CHECK(r.outcome == Outcome::Solved);
    REQUIRE(r.score.has_value());
    CHECK(*r.score == Score{0, 3});
    CHECK(r.program == "x + 2");
    REQUIRE(r.clean_loss.has_value());
    CHECK(*r.clean_loss == 0);
    CHECK(r.states > 0);
  }

  auto expired = run_problem(p, Engine::Afta, Deadline::after(std::chrono::milliseconds(0)));
  CHECK(expired.outcome == Outcome::Timeout);
  CHECK_FALSE(expired.score.has_value());

  Problem q = arith_problem({3, 5});
  q.name = "another";
  auto reports = run_suite({p, q}, {Engine::Cfta, Engine::Afta}, std::nullopt, 2);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].problem == "another");
  CHECK(reports[0].engine == Engine::Afta);
  CHECK(reports[3].problem == "arith");
  CHECK(reports[3].engine == Engine::Cfta);
  for (const auto& r : reports) CHECK(r.outcome == Outcome::Solved);
  CHECK(reports[0].score->loss == 1);

  auto timed = run_suite({p}, {Engine::Afta, Engine::Cfta}, 0, 1);
  REQUIRE(timed.size() == 2);
  for (const auto& r : timed) {
    CHECK(r.outcome == Outcome::Timeout);
    CHECK(r.ms >= 0);
  }

  Problem broken = arith_problem({3});
  broken.grammar = {{"family", "string_v1"}};
  auto err = run_problem(broken, Engine::Afta);
  CHECK(err.outcome == Outcome::Error);
  CHECK_FALSE(err.error.empty());
}

TEST_CASE("bundled suite agrees with the oracle") {
  const auto problems = load_problem_dir(refsyn::testing::data_path("problems"));
  auto reports = run_suite(problems, {Engine::Afta, Engine::Cfta}, std::nullopt, 4);
  REQUIRE(reports.size() == problems.size() * 2);
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const Problem& p = problems[i];
    const Grammar g = load_grammar(p.grammar);
    auto oracle = brute_force_optimum(g, p.dataset, p.objective, p.loss, CostModel::size(), p.config.height_bound);
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& r = reports[2 * i + k];
      CHECK(r.problem == p.name);
      REQUIRE(r.outcome == Outcome::Solved);
      CHECK(compare_scores(p.objective, *r.score, oracle.score) == 0);
      CHECK(*r.clean_loss == 0);
    }
  }
}

TEST_CASE("csv report") {
  std::ostringstream empty;
  write_csv(empty, {});
  CHECK(empty.str() == "problem,engine,outcome,ms,loss,complexity,clean_loss,iterations,bank_size,states\n");

  Problem p = arith_problem({3, 4});
  auto reports = run_suite({p}, {Engine::Afta, Engine::Cfta}, std::nullopt, 1);
  reports.push_back(run_problem(p, Engine::Afta, Deadline::after(std::chrono::milliseconds(0))));
  std::ostringstream out;
  write_csv(out, reports);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 4);
  auto cells = [](const std::string& row) {
    std::vector<std::string> c;
    std::stringstream ss(row);
    for (std::string x; std::getline(ss, x, ',');) c.push_back(x);
    if (!row.empty() && row.back() == ',') c.emplace_back();
    return c;
  };
  const auto afta = cells(rows[1]), cfta = cells(rows[2]), late = cells(rows[3]);
  REQUIRE(afta.size() == 10);
  REQUIRE(cfta.size() == 10);
  REQUIRE(late.size() == 10);
  CHECK(afta[1] == "afta");
  CHECK(afta[2] == "solved");
  CHECK(afta[4] == "0");
  CHECK(afta[5] == "3");
  CHECK(afta[6] == "");  // no clean outputs
  CHECK_FALSE(afta[8].empty());
  CHECK(cfta[8].empty());
  CHECK(late[2] == "timeout");
  CHECK(late[4].empty());
}
