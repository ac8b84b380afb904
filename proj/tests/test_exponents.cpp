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

#include <random>

#include <doctest.h>

#include "oracle.hpp"
#include "pfrp/errors.hpp"
#include "pfrp/exponents.hpp"

using pfrp::ExponentVector;

namespace {

ExponentVector ev(int n, std::vector<int> e) { return ExponentVector(n, std::move(e)); }

ExponentVector random_vector(int n, int L, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, n - 1);
  std::vector<int> e(L);
  for (int& x : e) x = d(rng);
  return ev(n, e);
}

}  // namespace

TEST_CASE("construction rejects bad shapes") {
  CHECK_THROWS_AS(ev(1, {0, 0}), pfrp::DomainError);
  CHECK_THROWS_AS(ev(3, {0, 0, 0}), pfrp::DomainError);
  CHECK_THROWS_AS(ev(3, {}), pfrp::DomainError);
  CHECK_THROWS_AS(ev(3, {3, 0}), pfrp::DomainError);
  CHECK_THROWS_AS(ev(3, {-1, 0}), pfrp::DomainError);
  CHECK_NOTHROW(ev(3, {2, 0}));
}

TEST_CASE("degree is not reduced") {
  CHECK(pfrp::degree(ExponentVector::zero(3, 4)) == 0);
  CHECK(pfrp::degree(ev(3, {1, 2})) == 3);
  CHECK(pfrp::degree(ev(3, {2, 2, 1, 0})) == 5);
}

TEST_CASE("add reduces mod n") {
  const auto i = ev(3, {2, 2});
  CHECK(pfrp::add(i, ExponentVector::zero(3, 2)) == i);
  CHECK(pfrp::add(i, ev(3, {2, 0})) == ev(3, {1, 2}));
  CHECK_THROWS_AS(pfrp::add(i, ExponentVector::zero(3, 4)), pfrp::DimensionError);
  CHECK_THROWS_AS(pfrp::add(i, ExponentVector::zero(4, 2)), pfrp::DimensionError);
}

TEST_CASE("circ and wedge values") {
  CHECK(pfrp::circ(ev(3, {1, 2}), ExponentVector::zero(3, 2)) == 0);
  CHECK(pfrp::circ(ev(3, {0, 1}), ev(3, {1, 0})) == 1);
  CHECK(pfrp::circ(ev(3, {1, 0}), ev(3, {0, 1})) == 0);
  CHECK(pfrp::circ(ev(3, {1, 1}), ev(3, {1, 1})) == 1);
  CHECK(pfrp::wedge(ev(3, {0, 1}), ev(3, {1, 0})) == 1);
  CHECK(pfrp::wedge(ev(3, {0, 1}), ev(3, {2, 0})) == 2);
}

TEST_CASE("circ against the matrix product oracle") {
  // c^a c^b = w^{-circ(a,b)} c^{a+b} fixes circ mod n.
  std::mt19937_64 rng(11);
  for (auto [n, L] : {std::pair{3, 2}, {3, 4}, {4, 4}, {2, 4}}) {
    const auto gens = oracle::generators(n, L);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_vector(n, L, rng);
      const auto b = random_vector(n, L, rng);
      const std::vector<int> ea(a.entries().begin(), a.entries().end());
      const std::vector<int> eb(b.entries().begin(), b.entries().end());
      const auto sum = pfrp::add(a, b);
      const std::vector<int> es(sum.entries().begin(), sum.entries().end());
      const oracle::Matrix lhs = oracle::monomial(gens, ea) * oracle::monomial(gens, eb);
      const oracle::Matrix rhs = oracle::omega(n, -pfrp::circ(a, b)) * oracle::monomial(gens, es);
      CHECK((lhs - rhs).norm() < 1e-10);
    }
  }
}

TEST_CASE("bilinear form properties") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const int L = 2 * (1 + trial % 3);
    const auto a = random_vector(n, L, rng);
    const auto b = random_vector(n, L, rng);
    CHECK(pfrp::wedge(a, b) == -pfrp::wedge(b, a));
    CHECK(pfrp::wedge(a, a) == 0);
    long long sym = 0;
    for (int j = 1; j <= L; ++j)
      for (int k = j + 1; k <= L; ++k) sym += a.at(j) * a.at(k);
    CHECK(pfrp::circ(a, a) == sym);
    CHECK((pfrp::degree(pfrp::add(a, b)) - pfrp::degree(a) - pfrp::degree(b)) % n == 0);
    CHECK(pfrp::complement(pfrp::complement(a)) == a);
    CHECK(pfrp::reflect_vector(pfrp::reflect_vector(a)) == a);
    CHECK(pfrp::reflect_vector(pfrp::complement(a)) == pfrp::complement(pfrp::reflect_vector(a)));
  }
}

TEST_CASE("cross-cut circ reduces to degree products") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const int L = 4;
    auto plus = random_vector(n, L, rng);
    auto minus = random_vector(n, L, rng);
    std::vector<int> p(plus.entries().begin(), plus.entries().end());
    std::vector<int> m(minus.entries().begin(), minus.entries().end());
    p[0] = p[1] = 0;
    m[2] = m[3] = 0;
    const auto I = ev(n, p);
    const auto J = ev(n, m);
    CHECK(I.supported_on(pfrp::Half::plus));
    CHECK(J.supported_on(pfrp::Half::minus));
    CHECK(pfrp::circ(J, I) == 0);
    CHECK(pfrp::circ(I, J) == pfrp::degree(I) * pfrp::degree(J));
  }
}

TEST_CASE("complement and reflection examples") {
  CHECK(pfrp::complement(ExponentVector::zero(3, 2)) == ExponentVector::zero(3, 2));
  CHECK(pfrp::complement(ev(3, {1, 2})) == ev(3, {2, 1}));
  CHECK(pfrp::reflect_vector(ev(3, {1, 0, 0, 2})) == ev(3, {2, 0, 0, 1}));
  CHECK(pfrp::reflect_vector(ev(3, {1, 2, 2, 1})) == ev(3, {1, 2, 2, 1}));
}

TEST_CASE("half enumeration") {
  const auto minus = pfrp::enumerate_half(3, 4, pfrp::Half::minus);
  CHECK(minus.size() == 9);
  for (const auto& v : minus) CHECK(v.supported_on(pfrp::Half::minus));
  const auto plus = pfrp::enumerate_half(2, 6, pfrp::Half::plus);
  CHECK(plus.size() == 8);
  for (const auto& v : plus) CHECK(v.supported_on(pfrp::Half::plus));
  CHECK(ExponentVector::unit(3, 4, 2, 4) == ev(3, {0, 1, 0, 0}));
  CHECK(ev(3, {1, 2, 0, 0}).to_string() == "(1,2,0,0)");
}
