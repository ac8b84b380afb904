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

#include "pfrp/cli.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "pfrp/report_json.hpp"
#include "pfrp/spec_file.hpp"

namespace pfrp {

namespace {

constexpr std::array<std::pair<Command, const char*>, 9> kCommands{{
    {Command::verify_relations, "verify-relations"},
    {Command::rp_check, "rp-check"},
    {Command::gram, "gram"},
    {Command::trotter, "trotter"},
    {Command::bounds, "bounds"},
    {Command::counterexample, "counterexample"},
    {Command::families, "families"},
    {Command::baxter, "baxter"},
    {Command::decompose, "decompose"},
}};

struct Outcome {
  Json report;
  bool passed;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int order_of(const RunConfig& c) { return c.n.value_or(2); }
int sites_of(const RunConfig& c) { return c.L.value_or(2); }

// Spec file if given, otherwise a Baxter chain from --t.
SpecFile spec_input(const RunConfig& c) {
  const SpecOverrides overrides{c.n, c.L};
  if (c.spec_path) {
    SpecFile spec = load_spec(*c.spec_path, overrides);
    if (c.t) {
      if (!spec.baxter_t) throw UsageError("--t applies only to Baxter spec files");
      spec.baxter_t = c.t;
    }
    return spec;
  }
  if (c.t) {
    SpecFile spec;
    spec.order = order_of(c);
    spec.sites = sites_of(c);
    spec.baxter_t = c.t;
    return spec;
  }
  throw UsageError(to_string(c.command) + " needs --spec or --t");
}

void require_baxter_length(const SpecFile& spec) {
  if (spec.baxter_t && static_cast<int>(spec.baxter_t->size()) != spec.sites - 1) {
    throw UsageError("--t needs L-1 = " + std::to_string(spec.sites - 1) + " values, got " +
                     std::to_string(spec.baxter_t->size()));
  }
}

Json spec_header(const HamiltonianSpec& h) {
  return {{"n", h.order()}, {"L", h.sites()}, {"rule", to_string(h.rule())}};
}

Outcome verify_relations(const RunConfig& c) {
  const Representation rep(order_of(c), sites_of(c));
  const YamazakiResiduals r = verify_yamazaki(rep);
  const bool ok = r.max() <= kRelationTolerance;
  return {{{"n", rep.order()},
           {"L", rep.sites()},
           {"dimension", rep.dimension()},
           {"residuals", to_json(r)},
           {"threshold", kRelationTolerance},
           {"passed", ok}},
          ok};
}

Outcome rp_check(const RunConfig& c) {
  const SpecFile file = spec_input(c);
  require_baxter_length(file);
  const HamiltonianSpec h = to_hamiltonian(file);
  const Representation rep(h.order(), h.sites());
  const RPReport r = check_rp(h, rep, {c.samples, c.seed, c.tol, 8});
  return {to_json(r), r.passed()};
}

Outcome gram(const RunConfig& c) {
  const SpecFile file = spec_input(c);
  require_baxter_length(file);
  const HamiltonianSpec h = to_hamiltonian(file);
  const Representation rep(h.order(), h.sites());
  const std::vector<Polynomial> basis = observable_monomials(h.order(), h.sites(), Half::minus);
  const GramResult g = gram_psd(h, rep, basis);
  const double scale = 1.0 + g.gram.cwiseAbs().maxCoeff();
  const bool ok = g.min_eigenvalue >= -c.tol * scale;
  Json out = spec_header(h);
  out["basis_size"] = basis.size();
  out["min_eigenvalue"] = g.min_eigenvalue;
  out["max_schwarz_excess"] = g.max_schwarz_excess;
  out["scale"] = scale;
  out["tolerance"] = c.tol;
  out["passed"] = ok;
  return {out, ok};
}

Outcome trotter(const RunConfig& c) {
  const SpecFile file = spec_input(c);
  require_baxter_length(file);
  const HamiltonianSpec h = to_hamiltonian(file);
  const Representation rep(h.order(), h.sites());
  const Matrix exact = matrix_exp(-rep.to_matrix(h.total()));
  const double e1 = (trotter_approximant(h, rep, c.k) - exact).norm();
  const double e2 = (trotter_approximant(h, rep, 2 * c.k) - exact).norm();
  const bool exact_split = e1 <= 1e-13 * (1.0 + exact.norm());
  const double ratio = exact_split ? 0.0 : e1 / e2;
  const bool ok = !exact_split && ratio >= 1.6 && ratio <= 2.4;
  Json out = spec_header(h);
  out["k"] = c.k;
  out["error_k"] = e1;
  out["error_2k"] = e2;
  out["ratio"] = ratio;
  out["window"] = {1.6, 2.4};
  out["passed"] = ok;
  return {out, ok};
}

Outcome bounds(const RunConfig& c) {
  const SpecFile file = spec_input(c);
  require_baxter_length(file);
  const SplitHamiltonian split = to_split(file);
  const int n = split.order();
  const int sites = split.sites();
  const Representation rep(n, sites);
  std::mt19937_64 rng(c.seed);

  const Polynomial id = Polynomial::identity(n, sites);
  const BoundsReport identity = rp_bounds_check(id, id, split, rep, c.tol);
  bool ok = identity.holds();
  double worst_minus_plus = identity.margin_minus_plus;
  double worst_plus_minus = identity.margin_plus_minus;
  Json failures = Json::array();
  for (int s = 0; s < c.samples; ++s) {
    const Polynomial a = random_observable(n, sites, Half::plus, rng);
    const Polynomial b = random_observable(n, sites, Half::plus, rng);
    const BoundsReport r = rp_bounds_check(a, b, split, rep, c.tol);
    worst_minus_plus = std::min(worst_minus_plus, r.margin_minus_plus);
    worst_plus_minus = std::min(worst_plus_minus, r.margin_plus_minus);
    if (!r.holds()) {
      ok = false;
      Json entry = to_json(r);
      entry["sample"] = s;
      failures.push_back(entry);
    }
  }
  return {{{"n", n},
           {"L", sites},
           {"identity", to_json(identity)},
           {"samples", c.samples},
           {"seed", c.seed},
           {"tolerance", c.tol},
           {"min_margin_minus_plus", worst_minus_plus},
           {"min_margin_plus_minus", worst_plus_minus},
           {"failures", failures},
           {"passed", ok}},
          ok};
}

// sum_{l>=1} 1/(l n - j)!
double series(int n, int j) {
  double total = 0.0;
  for (int l = 1;; ++l) {
    const double term = 1.0 / std::tgamma(static_cast<double>(l * n - j) + 1.0);
    total += term;
    if (term < 1e-18) break;
  }
  return total;
}

Outcome counterexample(const RunConfig& c) {
  const int n = order_of(c);
  const Representation rep(n, 2);
  const Complex value = counterexample_f(n, c.j, rep);
  const double dim = static_cast<double>(rep.dimension());
  const double angle = std::numbers::pi * c.j * (n - c.j) / n;
  const Complex predicted = std::polar(dim * series(n, c.j), angle);
  const bool positive = is_nonnegative_real(value, c.tol);
  return {{{"n", n},
           {"j", c.j},
           {"dimension", rep.dimension()},
           {"value", complex_json(value)},
           {"series_prediction", complex_json(predicted)},
           {"deviation", std::abs(value - predicted)},
           {"positive", positive}},
          positive};
}

Outcome families(const RunConfig& c) {
  const FamilyResult r = family_check(c.family, c.kparam, c.jprime, c.tol);
  return {{{"family", c.family},
           {"k", c.kparam},
           {"jprime", c.jprime},
           {"n", r.order},
           {"j", r.j},
           {"value", complex_json(r.value)},
           {"positive", r.positive}},
          r.positive};
}

Outcome baxter_run(const RunConfig& c) {
  SpecFile file;
  if (c.spec_path) {
    file = spec_input(c);
    if (!file.baxter_t) throw UsageError("baxter needs a spec file with a \"baxter\" object");
  } else {
    file.order = order_of(c);
    file.sites = sites_of(c);
    file.baxter_t = c.t.value_or(std::vector<double>(static_cast<std::size_t>(file.sites - 1), -1.0));
  }
  require_baxter_length(file);
  const std::vector<double>& t = *file.baxter_t;
  const SplitHamiltonian split = baxter_split(file.order, file.sites, t);
  const CouplingRule rule = validate_couplings(split.couplings, file.order);
  bool symmetric = true;
  for (int j = 1; j < file.sites; ++j) symmetric = symmetric && t[j - 1] == t[file.sites - j - 1];

  Json out = {{"n", file.order}, {"L", file.sites}, {"t", t}, {"rule", to_string(rule)}, {"symmetric", symmetric}};
  bool ok = symmetric && rule != CouplingRule::none;
  if (symmetric) {
    const HamiltonianSpec h = baxter(file.order, file.sites, t);
    const Representation rep(file.order, file.sites);
    const RPReport r = check_rp(h, rep, {c.samples, c.seed, c.tol, 8});
    out["rp"] = to_json(r);
    ok = ok && r.passed();
  }
  out["passed"] = ok;
  return {out, ok};
}

Outcome decompose_run(const RunConfig& c) {
  const SpecFile file = spec_input(c);
  require_baxter_length(file);
  const HamiltonianSpec h = to_hamiltonian(file);
  const Representation rep(h.order(), h.sites());
  const Matrix m = rep.to_matrix(h.total());
  const Polynomial back = decompose(m, rep);
  const double residual = (rep.to_matrix(back) - m).norm();
  const bool ok = approx_equal(back, h.total(), 1e-10) && residual <= kMatrixTolerance;
  Json terms = Json::array();
  for (const auto& [e, coeff] : back.terms()) {
    terms.push_back({{"exponents", std::vector<int>(e.entries().begin(), e.entries().end())},
                     {"coefficient", complex_json(coeff)}});
  }
  Json out = spec_header(h);
  out["terms"] = terms;
  out["residual"] = residual;
  out["passed"] = ok;
  return {out, ok};
}

Outcome dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::verify_relations: return verify_relations(c);
    case Command::rp_check: return rp_check(c);
    case Command::gram: return gram(c);
    case Command::trotter: return trotter(c);
    case Command::bounds: return bounds(c);
    case Command::counterexample: return counterexample(c);
    case Command::families: return families(c);
    case Command::baxter: return baxter_run(c);
    case Command::decompose: return decompose_run(c);
  }
  throw UsageError("unknown command");
}

}  // namespace

std::string to_string(Command command) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == command) return name;
  return "unknown";
}

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [cmd, text] : kCommands)
    if (name == text) return cmd;
  return std::nullopt;
}

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& [cmd, name] : kCommands) names.emplace_back(name);
  return names;
}

void validate(const RunConfig& c) {
  if (c.n && *c.n < 2) throw std::invalid_argument("--n must be >= 2");
  if (c.L && (*c.L < 2 || *c.L % 2 != 0)) throw std::invalid_argument("--L must be even and >= 2");
  if (c.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  if (!(c.tol > 0.0) || !std::isfinite(c.tol)) throw std::invalid_argument("--tol must be a positive number");
  if (c.k < 1) throw std::invalid_argument("--k must be >= 1");
  if (c.t) {
    for (double x : *c.t)
      if (!std::isfinite(x)) throw std::invalid_argument("--t values must be finite");
  }
  if (c.command == Command::families && (c.family < 1 || c.family > 3)) {
    throw std::invalid_argument("--family must be 1, 2 or 3");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  try {
    validate(config);
    outcome = dispatch(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  const std::string text = outcome.report.dump(2) + "\n";
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
      err << "error: cannot write report to '" << config.out_path->string() << "'\n";
      return kExitError;
    }
  } else {
    out << text;
  }
  return outcome.passed ? kExitOk : kExitViolation;
}

}  // namespace pfrp
