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

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfrp/exponents.hpp"
#include "pfrp/phase.hpp"

namespace pfrp {

using Complex = std::complex<double>;

/// Coefficients below this magnitude are dropped when a polynomial is
/// re-canonicalized.
inline constexpr double kPruneTolerance = 1e-14;

/// Default tolerance for comparing canonical forms.
inline constexpr double kCoefficientTolerance = 1e-12;

/// coefficient * C_I.
struct Monomial {
  Complex coefficient;
  ExponentVector exponents;
};

/// Normal-ordered element of the parafermion algebra: a finite sum
/// sum_I a_I C_I with every C_I in ascending-site order. Two polynomials
/// represent the same operator iff their term maps agree.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Complex>;

  Polynomial(int order, int sites);

  static Polynomial identity(int order, int sites, Complex scale = 1.0);
  static Polynomial monomial(const ExponentVector& exponents, Complex coefficient = 1.0);
  static Polynomial monomial(const Monomial& m) { return monomial(m.exponents, m.coefficient); }
  /// c_site^power.
  static Polynomial generator(int order, int sites, int site, int power = 1);

  int order() const { return order_; }
  int sites() const { return sites_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Complex coefficient(const ExponentVector& exponents) const;

  /// Accumulates coefficient * C_I into the polynomial.
  void add_term(const ExponentVector& exponents, Complex coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Complex scale);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
  friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }
  /// Algebra product, normal ordered.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void require_shape(const ExponentVector& exponents) const;
  void require_shape(const Polynomial& other) const;

  int order_;
  int sites_;
  TermMap terms_;
};

/// Max |a_I - b_I| over the union of supports <= tol.
bool approx_equal(const Polynomial& a, const Polynomial& b, double tol = kCoefficientTolerance);

/// C_I C_I' = omega^{-(I o I')} C_{I+I'}.
Monomial canonical_product(const Monomial& a, const Monomial& b);
Polynomial canonical_product(const Polynomial& a, const Polynomial& b);

/// The phase omega^{-(I o I)} that appears both in C_I^* = omega^{-(I o I)} C_{I^c}
/// and in theta(C_I) = omega^{-(I o I)} C_{theta I^c}.
Phase reordering_phase(const ExponentVector& exponents);

/// Hermitian adjoint, term by term.
Polynomial adjoint(const Polynomial& p);

/// The anti-linear reflection automorphism theta, c_i -> c_{L-i+1}^{n-1}.
Polynomial reflect(const Polynomial& p);

/// Local gauge U_site (c_site -> omega c_site) or, with no site, the global
/// gauge transformation that multiplies C_I by omega^{|I|}.
Polynomial gauge_apply(const Polynomial& p, std::optional<int> site = std::nullopt);

/// Support of a polynomial relative to the reflection cut.
enum class Side { minus, plus, crossing, scalar };

struct SideClass {
  Side side;
  /// Every term has degree divisible by n (globally gauge invariant).
  bool observable;
};

SideClass classify(const Polynomial& p);
/// Membership in the observable algebra of one half; scalars belong to both.
bool in_observable_algebra(const Polynomial& p, Half half);

std::string to_string(Side side);

/// Exact phase zeta^{|I|^2} omega^{-(I o I)} such that
/// zeta^{|I|^2} C_I theta(C_I) = crossing_phase(I) * C_{I + theta I^c}.
Phase crossing_phase(const ExponentVector& exponents);

/// coupling * zeta^{|I|^2} C_I theta(C_I) for I on the minus half. The result
/// is fixed by theta and by the global gauge transformation.
Polynomial build_X(const ExponentVector& exponents, double coupling);

/// True iff every nonzero entry equals n/2; the crossing term for I can only be
/// hermitian in that case.
bool hermiticity_condition(const ExponentVector& exponents);

/// Y + Y^*.
Polynomial hermitian_pair(const Polynomial& y);

}  // namespace pfrp
