// Copyright 2026 The dynstrength Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dynstrength/cli.hpp"
#include "dynstrength/report.hpp"

using namespace dynstrength;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dynstrength");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.0 / 3.0) == "0.666666666667");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(round12(std::acos(-1.0)) == 3.14159265359);
  CHECK(round12(-0.0) == 0.0);
}

TEST_CASE("strength of CNOT") {
  const Run r = run({"strength", "--gate", "cnot", "--measure", "k_sch"});
  REQUIRE(r.code == kExitOk);
  const auto j = json_of(r);
  CHECK(j["measure"] == "k_sch");
  CHECK(j["value"].get<double>() == 1.0);
  CHECK(j["bound_kind"] == "exact");
  CHECK(j.contains("restarts_used"));
  CHECK(j.contains("best_restart"));
}

TEST_CASE("canonical SWAP") {
  const Run r = run({"canonical", "--gate", "swap"});
  REQUIRE(r.code == kExitOk);
  const auto j = json_of(r);
  for (const auto& t : j["theta"]) CHECK(t.get<double>() == doctest::Approx(0.7854).epsilon(1e-4));
  CHECK(j["class"] == 4);
  CHECK(j["reconstruction_error"].get<double>() < 1e-8);
  const auto c = json_of(run({"canonical", "--gate", "up:0"}));
  CHECK(c["class"] == 1);
  CHECK(run({"canonical", "--gate", "toffoli"}).code == kExitValidation);
}

TEST_CASE("decompose") {
  const auto j = json_of(run({"decompose", "--gate", "toffoli:0"}));
  CHECK(j["partition"] == "2:4");
  CHECK(j["schmidt_number"] == 2);
  CHECK(j["k_sch"].get<double>() == doctest::Approx(0.811278124459));
  CHECK(j["coefficients"].size() == 2);
  CHECK(run({"decompose", "--gate", "haar:6,1"}).code == kExitValidation);  // no natural cut
  CHECK(json_of(run({"decompose", "--gate", "haar:6,1", "--partition", "2:3"}))["schmidt_number"] == 4);
  CHECK(run({"decompose", "--gate", "cnot", "--partition", "2:3"}).code == kExitValidation);
}

TEST_CASE("superadditivity sweep to a file") {
  const std::string path = "test_cli_fig4.csv";
  const Run r = run({"sweep", "--fig", "4", "--grid", "0:1:0.01", "--out", path});
  REQUIRE(r.code == kExitOk);
  const std::string text = slurp(path);
  std::remove(path.c_str());
  std::istringstream in(text);
  std::string line;
  int lines = 0;
  std::getline(in, line);
  CHECK(line == "p,twoH,Hsq,diff");
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 101);
  CHECK(text.find("0.5,2,0,-2\n") != std::string::npos);
}

TEST_CASE("identical flags give identical output") {
  const std::vector<std::string> args{"strength", "--gate", "haar:4,3", "--measure", "k_e", "--restarts", "2", "--seed", "7"};
  const Run a = run(args), b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(json_of(a)["seed"] == 7);
  CHECK(json_of(a)["bound_kind"] == "lower");
  CHECK(json_of(a)["witness"]["alpha"].size() == 4);
}

TEST_CASE("seed from the environment") {
  ::setenv("DYNSTRENGTH_SEED", "42", 1);
  CHECK(json_of(run({"strength", "--gate", "cnot"}))["seed"] == 42);
  CHECK(json_of(run({"strength", "--gate", "cnot", "--seed", "3"}))["seed"] == 3);
  ::setenv("DYNSTRENGTH_SEED", "x1", 1);
  CHECK(run({"strength", "--gate", "cnot"}).code == kExitValidation);
  ::unsetenv("DYNSTRENGTH_SEED");
}

TEST_CASE("metric strengths") {
  const auto j = json_of(run({"strength", "--gate", "swap", "--measure", "k_hs"}));
  CHECK(j["value"].get<double>() == doctest::Approx(2.0));
  CHECK(j["metric"] == "hilbert_schmidt");
  CHECK(j.contains("minimizer_k"));
  const auto op = json_of(run({"strength", "--gate", "cnot", "--measure", "k_d", "--metric", "op", "--restarts", "2"}));
  CHECK(op["bound_kind"] == "upper");
  CHECK(run({"strength", "--gate", "cnot", "--measure", "k_d", "--metric", "bad"}).code == kExitValidation);
}

TEST_CASE("channels") {
  const auto j = json_of(run({"channel", "--gate", "cnot", "--restarts", "4"}));
  REQUIRE(j["reports"].size() == 2);
  CHECK(j["reports"][0]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(j["reports"][1]["value"].get<double>() == doctest::Approx(1.0));
  const auto d = json_of(run({"channel", "--channel", "depolarizing", "--measure", "k_sch", "--restarts", "2"}));
  CHECK(d["reports"][0]["value"].get<double>() < 1e-9);
  CHECK(run({"channel", "--channel", "bogus"}).code == kExitValidation);
  CHECK(run({"channel", "--channel", "depolarizing", "--gate", "cnot"}).code == kExitValidation);
}

TEST_CASE("bounds") {
  const auto lr = json_of(run({"bound", "log-rank", "--fn", "eq:3"}));
  CHECK(lr["value"].get<double>() == doctest::Approx(0.75));
  const auto g = json_of(run({"bound", "gates", "--ku", "2", "--kmax", "1"}));
  CHECK(g["value"].get<double>() == 2.0);
  const auto q = json_of(run({"bound", "qft", "--qft", "1:2", "--numeric"}));
  CHECK(q["value"].get<double>() == 2.0);
  CHECK(q["inputs"]["swap_ratio"].get<double>() == 1.0);
  CHECK(run({"bound", "log-rank"}).code == kExitValidation);
  CHECK(run({"bound", "gates", "--ku", "2"}).code == kExitValidation);
  CHECK(run({"bound", "nope"}).code == kExitValidation);
}

TEST_CASE("axioms") {
  const Run r = run({"axioms", "--measure", "k_har", "--samples", "10"});
  REQUIRE(r.code == kExitOk);
  const auto j = json_of(r);
  CHECK(j["contradictions"] == 0);
  CHECK(j["cases"].size() == 12);
  CHECK(run({"axioms", "--measure", "k_x"}).code == kExitValidation);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitValidation);
  CHECK(run({"frobnicate"}).code == kExitValidation);
  const Run r = run({"strength", "--gate", "cnot", "--restarts", "0"});
  CHECK(r.code == kExitValidation);
  CHECK(run({"strength"}).code == kExitValidation);
  CHECK(run({"strength", "--gate", "up:2"}).code == kExitValidation);
  CHECK(run({"sweep", "--fig", "3"}).code == kExitValidation);
  CHECK(run({"sweep", "--fig", "4", "--grid", "0:1"}).code == kExitValidation);
  CHECK(run({"--help"}).code == kExitOk);
}
