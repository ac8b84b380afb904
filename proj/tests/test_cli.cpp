// Copyright 2026 The parafermion-rp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "pfrp/cli.hpp"

using namespace pfrp;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "pfrp_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

RunConfig command(Command c) {
  RunConfig r;
  r.command = c;
  return r;
}

}  // namespace

TEST_CASE("command names round trip") {
  for (const auto& name : command_names()) {
    const auto c = parse_command(name);
    REQUIRE(c);
    CHECK(to_string(*c) == name);
  }
  CHECK_FALSE(parse_command("nope"));
}

TEST_CASE("verify-relations") {
  RunConfig c = command(Command::verify_relations);
  c.n = 3;
  c.L = 4;
  const Result r = invoke(c);
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["residuals"]["max"].get<double>() <= 1e-11);
  CHECK(j["dimension"] == 9);
}

TEST_CASE("counterexample exits with a finding") {
  RunConfig c = command(Command::counterexample);
  c.n = 2;
  const Result r = invoke(c);
  CHECK(r.code == kExitViolation);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["value"][0].get<double>()) < 1e-12);
  CHECK(j["value"][1].get<double>() == doctest::Approx(2.35040239).epsilon(1e-8));
  c.j = 2;
  CHECK(invoke(c).code == kExitOk);
  c.j = 3;
  CHECK(invoke(c).code == kExitError);
}

TEST_CASE("rp-check report schema") {
  const auto spec = write_temp("bax.json", R"({"baxter": {"n": 3, "L": 4, "t": [-0.5, -1.0, -0.5]}})");
  RunConfig c = command(Command::rp_check);
  c.spec_path = spec;
  c.samples = 500;
  c.seed = 7;
  const Result r = invoke(c);
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"gram_min_eigenvalue", "max_diagonal_imag_abs", "min_diagonal_real",
                                         "partition_function", "samples", "seed", "tolerance", "violations"});
  CHECK(j["violations"].empty());
  CHECK(j["samples"] == 500);
  CHECK(j["seed"] == 7);
}

TEST_CASE("rp-check with violations still writes the report") {
  const auto spec = write_temp("bad.json", R"({"baxter": {"n": 3, "L": 4, "t": [-0.5, 1.0, -0.5]}})");
  RunConfig c = command(Command::rp_check);
  c.spec_path = spec;
  c.samples = 100;
  const Result r = invoke(c);
  CHECK(r.code == kExitViolation);
  CHECK_FALSE(json::parse(r.out)["violations"].empty());
}

TEST_CASE("flags override spec fields") {
  const auto spec = write_temp("s7.json", R"({"n": 3, "L": 2, "couplings": [{"exponents": [1, 0], "J": 1.0}]})");
  RunConfig c = command(Command::gram);
  c.spec_path = spec;
  c.n = 4;
  const Result r = invoke(c);
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out)["n"] == 4);
}

TEST_CASE("other commands") {
  const auto spec = write_temp("bax2.json", R"({"baxter": {"n": 2, "L": 4, "t": [0.5, -1.0, 0.5]}})");
  for (Command cmd : {Command::gram, Command::trotter, Command::bounds, Command::decompose}) {
    RunConfig c = command(cmd);
    c.spec_path = spec;
    c.samples = 20;
    const Result r = invoke(c);
    CHECK_MESSAGE(r.code == kExitOk, to_string(cmd) << ": " << r.err << r.out);
    CHECK(json::parse(r.out)["passed"] == true);
  }
  RunConfig f = command(Command::families);
  f.family = 3;
  f.kparam = 3;
  f.jprime = 2;
  CHECK(invoke(f).code == kExitOk);

  RunConfig b = command(Command::baxter);
  b.n = 3;
  b.L = 4;
  b.samples = 50;
  b.t = std::vector<double>{-0.5, -1.0, -0.5};
  CHECK(invoke(b).code == kExitOk);
  b.t = std::vector<double>{-0.5, 1.0, -0.5};
  const Result bad = invoke(b);
  CHECK(bad.code == kExitViolation);
  CHECK(json::parse(bad.out)["rule"] == "none");
  b.t = std::vector<double>{-0.5, -1.0};
  CHECK(invoke(b).code == kExitError);
}

TEST_CASE("usage and IO errors") {
  RunConfig c = command(Command::rp_check);
  Result r = invoke(c);
  CHECK(r.code == kExitError);
  CHECK(r.err.find("--spec") != std::string::npos);

  c.spec_path = "/nonexistent/spec.json";
  CHECK(invoke(c).code == kExitError);

  const auto broken = write_temp("broken.json", "{\"n\": 3,\n \"L\": }");
  c.spec_path = broken;
  r = invoke(c);
  CHECK(r.code == kExitError);
  CHECK(r.err.find("line 2") != std::string::npos);

  RunConfig v = command(Command::verify_relations);
  v.n = 3;
  v.L = 16;
  r = invoke(v);
  CHECK(r.code == kExitError);
  CHECK(r.err.find("4096") != std::string::npos);
  CHECK(r.err.find("6561") != std::string::npos);

  v.L = 3;
  CHECK(invoke(v).code == kExitError);
  v.L = 2;
  v.samples = 0;
  CHECK(invoke(v).code == kExitError);
  v.samples = 1;
  v.tol = 0.0;
  CHECK(invoke(v).code == kExitError);
  v.tol = 1e-9;
  v.k = 0;
  CHECK(invoke(v).code == kExitError);
  v.k = 1;
  v.out_path = "/nonexistent/dir/report.json";
  CHECK(invoke(v).code == kExitError);
}

TEST_CASE("report file output is deterministic") {
  const auto spec = write_temp("det.json", R"({"baxter": {"n": 2, "L": 4, "t": [0.3, -0.8, 0.3]}})");
  const auto dir = std::filesystem::temp_directory_path() / "pfrp_cli_tests";
  RunConfig c = command(Command::rp_check);
  c.spec_path = spec;
  c.samples = 100;
  c.seed = 42;
  std::string texts[2];
  for (int i = 0; i < 2; ++i) {
    c.out_path = dir / ("det" + std::to_string(i) + ".json");
    REQUIRE(invoke(c).code == kExitOk);
    std::ifstream in(*c.out_path, std::ios::binary);
    texts[i] = std::string(std::istreambuf_iterator<char>(in), {});
  }
  CHECK(!texts[0].empty());
  CHECK(texts[0] == texts[1]);
}
