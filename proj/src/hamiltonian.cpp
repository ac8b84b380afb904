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

#include "pfrp/hamiltonian.hpp"

#include <cmath>
#include <sstream>

#include "pfrp/errors.hpp"
#include "pfrp/polynomial_io.hpp"

namespace pfrp {

std::string to_string(CouplingRule rule) {
  switch (rule) {
    case CouplingRule::all_nonneg: return "all_nonneg";
    case CouplingRule::even_n_alternating: return "even_n_alternating";
    case CouplingRule::none: return "none";
  }
  return "none";
}

void validate_coupling_keys(const CouplingTable& couplings, int order, int sites) {
  for (const auto& [key, value] : couplings) {
    if (key.order() != order || key.sites() != sites) {
      throw DimensionError("coupling key " + key.to_string() + " does not match n=" +
                           std::to_string(order) + ", L=" + std::to_string(sites));
    }
    if (!key.supported_on(Half::minus)) {
      throw DomainError("coupling key " + key.to_string() + " is not supported on sites 1.." +
                        std::to_string(sites / 2));
    }
    if (key.is_zero()) throw DomainError("coupling key of degree 0 is not a crossing term");
    if (!std::isfinite(value)) throw DomainError("coupling for " + key.to_string() + " is not finite");
  }
}

Polynomial build_h0(const CouplingTable& couplings, int order, int sites) {
  validate_coupling_keys(couplings, order, sites);
  Polynomial h0(order, sites);
  for (const auto& [key, value] : couplings) {
    const int d = degree(key);
    // (-1)^{d+1} folded into the phase as zeta^{n(d+1)}.
    const Phase phase = Phase::sign(order, d + 1) * crossing_phase(key);
    const ExponentVector target = add(key, reflect_vector(complement(key)));
    h0.add_term(target, value * phase.value());
  }
  return h0;
}

CouplingRule validate_couplings(const CouplingTable& couplings, int order) {
  bool nonneg = true;
  bool alternating = order % 2 == 0;
  for (const auto& [key, value] : couplings) {
    if (value < 0.0) nonneg = false;
    const double signed_value = degree(key) % 2 == 0 ? value : -value;
    if (signed_value < 0.0) alternating = false;
  }
  if (nonneg) return CouplingRule::all_nonneg;
  if (alternating) return CouplingRule::even_n_alternating;
  return CouplingRule::none;
}

HamiltonianSpec::HamiltonianSpec(Polynomial h_minus, CouplingTable couplings)
    : h_minus_(std::move(h_minus)),
      couplings_(std::move(couplings)),
      h_zero_(build_h0(couplings_, h_minus_.order(), h_minus_.sites())),
      h_plus_(reflect(h_minus_)),
      total_(h_minus_ + h_zero_ + h_plus_),
      rule_(validate_couplings(couplings_, h_minus_.order())) {}

HamiltonianSpec assemble(const Polynomial& h_minus, const CouplingTable& couplings) {
  std::ostringstream bad;
  const int n = h_minus.order();
  const int mid = h_minus.sites() / 2;
  for (const auto& [key, value] : h_minus.terms()) {
    bool off_side = false;
    for (int site = mid + 1; site <= key.sites(); ++site) off_side = off_side || key.at(site) != 0;
    if (off_side || degree(key) % n != 0) {
      bad << ' ' << key.to_string() << (off_side ? "[off minus half]" : "[degree not divisible by n]");
    }
  }
  if (!bad.str().empty()) {
    throw DomainError("h_minus is not in the minus observable algebra; offending terms:" + bad.str());
  }
  HamiltonianSpec spec(h_minus, couplings);
  const SymmetryReport sym = check_symmetries(spec.total());
  if (!sym.reflection_symbolic || !sym.gauge_symbolic) {
    throw DomainError("assembled Hamiltonian fails its symmetry invariants");
  }
  return spec;
}

bool SymmetryReport::ok() const {
  const bool matrix_ok = (reflection_matrix_gap < 0 || reflection_matrix_gap <= kMatrixTolerance) &&
                         (gauge_matrix_gap < 0 || gauge_matrix_gap <= kMatrixTolerance);
  return reflection_symbolic && gauge_symbolic && matrix_ok;
}

SymmetryReport check_symmetries(const Polynomial& h, const Representation* rep) {
  SymmetryReport r;
  const Polynomial reflected = reflect(h);
  const Polynomial gauged = gauge_apply(h);
  r.reflection_symbolic = approx_equal(reflected, h);
  r.gauge_symbolic = approx_equal(gauged, h);
  if (rep != nullptr) {
    const Matrix mh = rep->to_matrix(h);
    r.reflection_matrix_gap = (rep->to_matrix(reflected) - mh).norm();
    r.gauge_matrix_gap = (rep->to_matrix(gauged) - mh).norm();
  }
  return r;
}

SymmetryReport check_symmetries(const HamiltonianSpec& spec, const Representation* rep) {
  return check_symmetries(spec.total(), rep);
}

namespace {

void require_bonds(int sites, std::span<const double> t) {
  if (static_cast<int>(t.size()) != sites - 1) {
    throw DomainError("Baxter chain on L=" + std::to_string(sites) + " sites needs " +
                      std::to_string(sites - 1) + " couplings, got " + std::to_string(t.size()));
  }
  for (double x : t)
    if (!std::isfinite(x)) throw DomainError("Baxter coupling is not finite");
}

// -zeta t c_j c_{j+1}^{n-1}; already in normal order.
void add_bond(Polynomial& p, int j, double t) {
  const int n = p.order();
  std::vector<int> e(static_cast<std::size_t>(p.sites()), 0);
  e[static_cast<std::size_t>(j - 1)] = 1;
  e[static_cast<std::size_t>(j)] = n - 1;
  // -zeta = zeta^{n+1}.
  p.add_term(ExponentVector(n, std::move(e)), t * Phase::zeta_power(n, n + 1).value());
}

}  // namespace

Polynomial baxter_chain(int order, int sites, std::span<const double> t) {
  Polynomial h(order, sites);
  require_bonds(sites, t);
  for (int j = 1; j < sites; ++j) add_bond(h, j, t[static_cast<std::size_t>(j - 1)]);
  return h;
}

SplitHamiltonian baxter_split(int order, int sites, std::span<const double> t) {
  SplitHamiltonian s{Polynomial(order, sites), {}, Polynomial(order, sites)};
  require_bonds(sites, t);
  const int mid = sites / 2;
  for (int j = 1; j < mid; ++j) add_bond(s.h_minus, j, t[static_cast<std::size_t>(j - 1)]);
  for (int j = mid + 1; j < sites; ++j) add_bond(s.h_plus, j, t[static_cast<std::size_t>(j - 1)]);
  const double crossing = t[static_cast<std::size_t>(mid - 1)];
  // -zeta t c_m theta(c_m) is the |I| = 1 crossing term with J = -t.
  if (crossing != 0.0) s.couplings.emplace(ExponentVector::unit(order, sites, mid), -crossing);
  return s;
}

HamiltonianSpec baxter(int order, int sites, std::span<const double> t) {
  require_bonds(sites, t);
  const int mid = sites / 2;
  for (int j = 1; j < mid; ++j) {
    const double a = t[static_cast<std::size_t>(j - 1)];
    const double b = t[static_cast<std::size_t>(sites - j - 1)];
    if (a != b) {
      std::ostringstream os;
      os << "Baxter couplings must satisfy t_{L-j} = t_j; t_" << j << " = " << a << " but t_"
         << sites - j << " = " << b;
      throw DomainError(os.str());
    }
  }
  const SplitHamiltonian s = baxter_split(order, sites, t);
  return assemble(s.h_minus, s.couplings);
}

Polynomial SplitHamiltonian::h_zero() const { return build_h0(couplings, order(), sites()); }

Polynomial SplitHamiltonian::total() const { return h_minus + h_zero() + h_plus; }

Polynomial SplitHamiltonian::minus_doubled() const { return h_minus + h_zero() + reflect(h_minus); }

Polynomial SplitHamiltonian::plus_doubled() const { return reflect(h_plus) + h_zero() + h_plus; }

SplitHamiltonian split_of(const HamiltonianSpec& spec) {
  return {spec.h_minus(), spec.couplings(), spec.h_plus()};
}

std::vector<double> periodic_cut_couplings(std::span<const double> ring, int cut) {
  const int sites = static_cast<int>(ring.size());
  if (sites < 2 || sites % 2 != 0) throw DomainError("ring needs an even number of bonds >= 2");
  if (cut < 1 || cut > sites) throw DomainError("cut bond outside 1..L");
  std::vector<double> open(static_cast<std::size_t>(sites - 1));
  for (int j = 1; j < sites; ++j) {
    const int original = ((j + cut - sites / 2 - 1) % sites + sites) % sites;
    open[static_cast<std::size_t>(j - 1)] = ring[static_cast<std::size_t>(original)];
  }
  return open;
}

}  // namespace pfrp
