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

#pragma once

#include <random>
#include <vector>

#include "oracle.hpp"
#include "pfrp/algebra.hpp"

namespace testing_support {

inline pfrp::ExponentVector random_vector(int n, int L, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, n - 1);
  std::vector<int> e(L);
  for (int& x : e) x = d(rng);
  return pfrp::ExponentVector(n, e);
}

// Entries outside the half are zeroed.
inline pfrp::ExponentVector random_on(int n, int L, pfrp::Half half, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, n - 1);
  std::vector<int> e(L, 0);
  const int lo = half == pfrp::Half::minus ? 0 : L / 2;
  for (int i = lo; i < lo + L / 2; ++i) e[i] = d(rng);
  return pfrp::ExponentVector(n, e);
}

inline pfrp::Complex random_coefficient(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng)};
}

inline pfrp::Polynomial random_polynomial(int n, int L, std::mt19937_64& rng, int terms = 4) {
  pfrp::Polynomial p(n, L);
  for (int t = 0; t < terms; ++t) p.add_term(random_vector(n, L, rng), random_coefficient(rng));
  return p;
}

inline pfrp::Polynomial random_half_polynomial(int n, int L, pfrp::Half half, std::mt19937_64& rng,
                                               int terms = 4) {
  pfrp::Polynomial p(n, L);
  for (int t = 0; t < terms; ++t) p.add_term(random_on(n, L, half, rng), random_coefficient(rng));
  return p;
}

inline std::vector<int> entries(const pfrp::ExponentVector& v) {
  return {v.entries().begin(), v.entries().end()};
}

// Matrix of a polynomial built from oracle generators.
inline oracle::Matrix oracle_matrix(const pfrp::Polynomial& p, const std::vector<oracle::Matrix>& gens) {
  oracle::Matrix m = oracle::Matrix::Zero(gens[0].rows(), gens[0].cols());
  for (const auto& [e, c] : p.terms()) m += c * oracle::monomial(gens, entries(e));
  return m;
}

// theta(p) as a matrix: conj coefficients, reflect factor by factor.
inline oracle::Matrix oracle_reflected(const pfrp::Polynomial& p, const std::vector<oracle::Matrix>& gens) {
  oracle::Matrix m = oracle::Matrix::Zero(gens[0].rows(), gens[0].cols());
  for (const auto& [e, c] : p.terms()) m += std::conj(c) * oracle::reflected_monomial(gens, entries(e));
  return m;
}

}  // namespace testing_support
