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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the tool with stderr discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string(REFSYN_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& rel) { return refsyn::testing::data_path(rel); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("solve") {
  auto r = cli("solve " + data("arith_example.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("x + 2\nloss=0 complexity=3\n") == 0);
  CHECK(r.out.find("iterations=") != std::string::npos);
  CHECK(r.out.find("bank_size=") != std::string::npos);

  auto c = cli("solve --engine cfta " + data("arith_example.json"));
  CHECK(c.code == 0);
  CHECK(c.out.find("x + 2\nloss=0 complexity=3\n") == 0);

  auto p = cli("solve " + data("problems/prefix3.json"));
  CHECK(p.code == 0);
  CHECK(p.out.find("clean_loss=0") != std::string::npos);

  auto eps = cli("solve --epsilon 100 --loss zero_one " + data("problems/prefix3.json"));
  CHECK(eps.code == 0);
  CHECK(eps.out.find("iterations=1 ") != std::string::npos);
}

TEST_CASE("solve writes JSON") {
  TempDir tmp("refsyn_cli_solve");
  const auto out = tmp.path / "r.json";
  auto r = cli("solve " + data("arith_example.json") + " --out " + out.string());
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["program"] == "x + 2");
  CHECK(doc["loss"] == "0");
}

TEST_CASE("exit codes") {
  CHECK(cli("solve /nonexistent/problem.json").code == 3);
  CHECK(cli("solve").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("solve --loss l7 " + data("arith_example.json")).code == 2);
  CHECK(cli("solve --objective pareto " + data("arith_example.json")).code == 2);
  CHECK(cli("solve --epsilon -1 " + data("arith_example.json")).code == 2);
  CHECK(cli("solve --height-bound 0 " + data("arith_example.json")).code == 2);
  CHECK(cli("solve --timeout-ms 0 " + data("problems/prefix3.json")).code == 4);
  CHECK(cli("bench /nonexistent/dir").code == 3);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("oracle") {
  auto r = cli("oracle " + data("arith_example.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("x + 2\nloss=0 complexity=3\n") == 0);
  CHECK(r.out.find("programs=") != std::string::npos);
}

TEST_CASE("bench") {
  auto full = cli("bench " + data("problems") + " --engine afta --engine cfta");
  CHECK(full.code == 0);
  CHECK(count_lines(full.out) == 25);
  CHECK(full.out.rfind("problem,engine,outcome,ms,loss,complexity,clean_loss,iterations,bank_size,states\n", 0) == 0);
  CHECK(full.out.find(",timeout,") == std::string::npos);
  CHECK(full.out.find(",error,") == std::string::npos);

  TempDir tmp("refsyn_cli_bench");
  auto empty = cli("bench " + tmp.path.string());
  CHECK(empty.code == 0);
  CHECK(empty.out == "problem,engine,outcome,ms,loss,complexity,clean_loss,iterations,bank_size,states\n");

  fs::copy_file(data("problems/prefix3.json"), tmp.path / "prefix3.json");
  const auto csv = tmp.path / "out.csv";
  auto late = cli("bench " + tmp.path.string() + " --timeout-ms 0 --out " + csv.string());
  CHECK(late.code == 0);
  const std::string text = slurp(csv);
  CHECK(count_lines(text) == 3);
  CHECK(text.find("prefix3,afta,timeout,") != std::string::npos);
  CHECK(text.find("prefix3,cfta,timeout,") != std::string::npos);

  CHECK(cli("bench " + tmp.path.string() + " --out /nonexistent/dir/out.csv").code == 3);
}

TEST_CASE("noise") {
  TempDir tmp("refsyn_cli_noise");
  const auto a = tmp.path / "a.json", b = tmp.path / "b.json";
  CHECK(cli("noise " + data("problems/prefix3.json") + " --kind cyclic-delete --n 1 --out " + a.string()).code == 0);
  const auto noisy = nlohmann::json::parse(slurp(a));
  const auto clean = nlohmann::json::parse(slurp(data("problems/prefix3.json")));
  const auto& ex = noisy["examples"];
  CHECK(ex.back()["output"] == "ep");
  for (std::size_t i = 0; i + 1 < ex.size(); ++i) CHECK(ex[i]["output"] == clean["examples"][i]["output"]);
  CHECK(noisy["clean_outputs"] == clean["clean_outputs"]);

  // the result feeds straight back into solve and bench
  auto solved = cli("solve " + a.string());
  CHECK(solved.code == 0);
  CHECK(solved.out.find("loss=1 ") != std::string::npos);
  CHECK(solved.out.find("clean_loss=0") != std::string::npos);
  fs::remove(b);
  CHECK(cli("bench " + tmp.path.string()).code == 0);

  // digit substitution is deterministic
  const auto d1 = tmp.path / "d1.json", d2 = tmp.path / "d2.json";
  const std::string src = data("problems/year.json");
  CHECK(cli("noise " + src + " --kind digit-sub --fraction 0.95 --seed 7 --out " + d1.string()).code == 0);
  CHECK(cli("noise " + src + " --kind digit-sub --fraction 0.95 --seed 7 --out " + d2.string()).code == 0);
  CHECK(slurp(d1) == slurp(d2));
  CHECK(slurp(d1) != slurp(src));

  CHECK(cli("noise " + data("problems/prefix3.json") + " --kind cyclic-delete --n 50 --out " + b.string()).code == 2);
  CHECK_FALSE(fs::exists(b));
  CHECK(cli("noise " + data("problems/prefix3.json") + " --kind digit-sub --fraction 1 --out " + b.string()).code == 2);
}
