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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pfrp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Reflection-positivity checks for parafermion chains"};
  app.require_subcommand(1);

  pfrp::RunConfig config;
  int n = 0;
  int sites = 0;
  std::string spec;
  std::string out;
  std::vector<double> t;

  for (const std::string& name : pfrp::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--n", n, "clock order n");
    sub->add_option("--L", sites, "number of sites (even)");
    sub->add_option("--j", config.j, "power of c_1 (counterexample)");
    sub->add_option("--k", config.k, "Trotter steps");
    sub->add_option("--samples", config.samples, "random samples");
    sub->add_option("--seed", config.seed, "RNG seed");
    sub->add_option("--tol", config.tol, "relative positivity tolerance");
    sub->add_option("--spec", spec, "Hamiltonian spec file (JSON)");
    sub->add_option("--out", out, "report path (default stdout)");
    sub->add_option("--family", config.family, "family 1, 2 or 3");
    sub->add_option("--kparam", config.kparam, "family parameter k");
    sub->add_option("--jprime", config.jprime, "family parameter j'");
    sub->add_option("--t", t, "Baxter couplings t_1..t_{L-1}")->delimiter(',');
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pfrp::kExitError;
  }

  CLI::App* sub = app.get_subcommands().front();
  config.command = *pfrp::parse_command(sub->get_name());
  if (sub->count("--n")) config.n = n;
  if (sub->count("--L")) config.L = sites;
  if (sub->count("--spec")) config.spec_path = spec;
  if (sub->count("--out")) config.out_path = out;
  if (sub->count("--t")) config.t = t;
  return pfrp::run(config, std::cout, std::cerr);
}
