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

#include <doctest.h>

#include "helpers.hpp"
#include "pfrp/errors.hpp"
#include "pfrp/hamiltonian.hpp"

using namespace pfrp;
using namespace testing_support;

namespace {

ExponentVector ev(int n, std::vector<int> e) { return ExponentVector(n, std::move(e)); }

oracle::Matrix oracle_h0(const CouplingTable& table, const std::vector<oracle::Matrix>& gens) {
  oracle::Matrix m = oracle::Matrix::Zero(gens[0].rows(), gens[0].cols());
  for (const auto& [I, J] : table) {
    const int n = I.order();
    const long long d = degree(I);
    const double sign = d % 2 == 0 ? -1.0 : 1.0;
    m += sign * J * oracle::zeta(n, d * d) * oracle::monomial(gens, entries(I)) *
         oracle::reflected_monomial(gens, entries(I));
  }
  return m;
}

}  // namespace

TEST_CASE("crossing Hamiltonian coefficients") {
  CHECK(build_h0({}, 3, 4).is_zero());
  // Majorana: +i J c_1 c_2
  const Polynomial maj = build_h0({{ev(2, {1, 0}), 0.8}}, 2, 2);
  CHECK(approx_equal(maj, Polynomial::monomial(ev(2, {1, 1}), {0, 0.8})));
  // single bond at any n: zeta c theta(c)
  for (int n = 2; n <= 7; ++n) {
    const Polynomial h = build_h0({{ev(n, {1, 0}), 1.0}}, n, 2);
    CHECK(approx_equal(h, Polynomial::monomial(ev(n, {1, n - 1}), oracle::zeta(n, 1))));
  }
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2, 2);
  for (auto [n, L] : {std::pair{2, 4}, {3, 4}, {4, 4}, {5, 2}}) {
    const auto gens = oracle::generators(n, L);
    for (int t = 0; t < 10; ++t) {
      CouplingTable table;
      for (int k = 0; k < 3; ++k) {
        const auto I = random_on(n, L, Half::minus, rng);
        if (!I.is_zero()) table[I] = u(rng);
      }
      const Polynomial h0 = build_h0(table, n, L);
      CHECK((oracle_matrix(h0, gens) - oracle_h0(table, gens)).norm() < 1e-10);
      CHECK(approx_equal(reflect(h0), h0));
      CHECK(approx_equal(gauge_apply(h0), h0));
    }
  }
  CHECK_THROWS_AS(build_h0({{ev(3, {0, 0, 1, 0}), 1.0}}, 3, 4), DomainError);
  CHECK_THROWS_AS(build_h0({{ev(3, {0, 0, 0, 0}), 1.0}}, 3, 4), DomainError);
  CHECK_THROWS_AS(build_h0({{ev(3, {1, 0}), 1.0}}, 3, 4), DimensionError);
}

TEST_CASE("coupling sign rules") {
  CHECK(validate_couplings({{ev(3, {1, 0, 0, 0}), 1.0}, {ev(3, {1, 1, 0, 0}), 0.0}}, 3) == CouplingRule::all_nonneg);
  CHECK(validate_couplings({{ev(2, {1, 0}), -5.0}}, 2) == CouplingRule::even_n_alternating);
  CHECK(validate_couplings({{ev(3, {1, 0}), -1.0}}, 3) == CouplingRule::none);
  CHECK(validate_couplings({{ev(4, {1, 0, 0, 0}), -1.0}, {ev(4, {1, 1, 0, 0}), 2.0}}, 4) ==
        CouplingRule::even_n_alternating);
  CHECK(validate_couplings({{ev(4, {1, 0, 0, 0}), -1.0}, {ev(4, {1, 1, 0, 0}), -2.0}}, 4) == CouplingRule::none);
  CHECK(validate_couplings({}, 5) == CouplingRule::all_nonneg);
  CHECK(to_string(CouplingRule::even_n_alternating) == "even_n_alternating");
}

TEST_CASE("assembly") {
  const HamiltonianSpec zero = assemble(Polynomial(3, 4), {});
  CHECK(zero.total().is_zero());
  const HamiltonianSpec s7 = assemble(Polynomial(3, 2), {{ev(3, {1, 0}), 1.0}});
  CHECK(approx_equal(s7.total(), Polynomial::monomial(ev(3, {1, 2}), oracle::zeta(3, 1))));
  CHECK(approx_equal(reflect(s7.total()), s7.total()));
  CHECK(s7.rule() == CouplingRule::all_nonneg);

  const Polynomial hm = Polynomial::monomial(ev(3, {1, 2, 0, 0}), {0.3, 0.1});
  const HamiltonianSpec s = assemble(hm, {{ev(3, {1, 0, 0, 0}), 0.4}, {ev(3, {2, 2, 0, 0}), 0.1}});
  CHECK(approx_equal(s.h_plus(), reflect(hm)));
  CHECK(approx_equal(s.total(), s.h_minus() + s.h_zero() + s.h_plus()));
  const Representation rep(3, 4);
  const SymmetryReport sym = check_symmetries(s, &rep);
  CHECK(sym.ok());
  CHECK(sym.reflection_matrix_gap < 1e-10);
  CHECK(sym.gauge_matrix_gap < 1e-10);

  try {
    assemble(Polynomial::monomial(ev(3, {1, 0, 0, 0})) + Polynomial::monomial(ev(3, {0, 0, 1, 2})), {});
    FAIL("expected rejection");
  } catch (const DomainError& e) {
    const std::string what = e.what();
    CHECK(what.find("(1,0,0,0)") != std::string::npos);
    CHECK(what.find("(0,0,1,2)") != std::string::npos);
  }
}

TEST_CASE("symmetry negative control") {
  const Polynomial asym = Polynomial::monomial(ev(3, {1, 2, 0, 0}));
  const Representation rep(3, 4);
  const SymmetryReport r = check_symmetries(asym, &rep);
  CHECK_FALSE(r.reflection_symbolic);
  CHECK(r.gauge_symbolic);
  CHECK(r.reflection_matrix_gap > 0.1);
  CHECK_FALSE(r.ok());
  const SymmetryReport g = check_symmetries(Polynomial::generator(3, 4, 1) + reflect(Polynomial::generator(3, 4, 1)));
  CHECK(g.reflection_symbolic);
  CHECK_FALSE(g.gauge_symbolic);
  CHECK(g.reflection_matrix_gap < 0);
}

TEST_CASE("Baxter chain") {
  for (auto [n, L] : {std::pair{2, 4}, {3, 4}, {4, 4}, {3, 6}, {2, 2}}) {
    std::vector<double> t;
    for (int j = 1; j < L; ++j) t.push_back(-0.3 - 0.1 * std::min(j, L - j));
    const HamiltonianSpec h = baxter(n, L, t);
    CHECK(approx_equal(h.total(), baxter_chain(n, L, t)));
    CHECK(check_symmetries(h).ok());
    if (L <= 4) {
      // -zeta sum t_j c_j c_{j+1}^{n-1}
      const auto gens = oracle::generators(n, L);
      oracle::Matrix expected = oracle::Matrix::Zero(gens[0].rows(), gens[0].cols());
      for (int j = 1; j < L; ++j)
        expected -= oracle::zeta(n, 1) * t[j - 1] * gens[j - 1] * oracle::power(gens[j], n - 1);
      CHECK((oracle_matrix(h.total(), gens) - expected).norm() < 1e-10);
    }
    CHECK(h.couplings().at(ExponentVector::unit(n, L, L / 2)) == doctest::Approx(-t[L / 2 - 1]));
  }
  CHECK(baxter(2, 2, std::vector<double>{-1.0}).rule() == CouplingRule::all_nonneg);
  CHECK(baxter(3, 4, std::vector<double>{1.0, 0.5, 1.0}).rule() == CouplingRule::none);
  CHECK(baxter(3, 4, std::vector<double>{1.0, -0.5, 1.0}).rule() == CouplingRule::all_nonneg);
  const CouplingRule even = baxter(4, 4, std::vector<double>{1.0, -2.0, 1.0}).rule();
  CHECK(even != CouplingRule::none);
  CHECK(baxter(4, 4, std::vector<double>{1.0, 2.0, 1.0}).rule() == CouplingRule::even_n_alternating);

  try {
    baxter(3, 4, std::vector<double>{1.0, -0.5, 0.7});
    FAIL("expected rejection");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("t_1") != std::string::npos);
    CHECK(std::string(e.what()).find("t_3") != std::string::npos);
  }
  CHECK_THROWS_AS(baxter(3, 4, std::vector<double>{1.0, 1.0}), DomainError);
}

TEST_CASE("Baxter split keeps asymmetric couplings") {
  const std::vector<double> t{-0.3, -1.0, -1.7};
  const SplitHamiltonian s = baxter_split(3, 4, t);
  CHECK(approx_equal(s.total(), baxter_chain(3, 4, t)));
  CHECK(approx_equal(s.minus_doubled(), s.h_minus + s.h_zero() + reflect(s.h_minus)));
  CHECK(approx_equal(s.plus_doubled(), reflect(s.h_plus) + s.h_zero() + s.h_plus));
  const HamiltonianSpec sym = baxter(3, 4, std::vector<double>{-1.0, -1.0, -1.0});
  const SplitHamiltonian from = split_of(sym);
  CHECK(approx_equal(from.total(), sym.total()));
  CHECK(approx_equal(from.h_plus, sym.h_plus()));
}

TEST_CASE("periodic ring cut at any bond") {
  for (int L : {4, 6}) {
    const std::vector<double> ring(static_cast<std::size_t>(L), -0.7);
    for (int cut = 1; cut <= L; ++cut) {
      const std::vector<double> open = periodic_cut_couplings(ring, cut);
      CHECK(open.size() == static_cast<std::size_t>(L - 1));
      const HamiltonianSpec h = baxter(3, L, open);
      CHECK(check_symmetries(h).ok());
    }
    std::vector<double> uneven(static_cast<std::size_t>(L));
    for (int j = 0; j < L; ++j) uneven[j] = 1.0 + j;
    // cut bond lands in the middle of the open chain
    for (int cut = 1; cut <= L; ++cut) CHECK(periodic_cut_couplings(uneven, cut)[L / 2 - 1] == uneven[cut - 1]);
  }
  CHECK_THROWS_AS(periodic_cut_couplings(std::vector<double>{1.0, 1.0, 1.0}, 1), DomainError);
}
