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

#include "pfrp/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "pfrp/errors.hpp"

namespace pfrp {

namespace {

void prune(Polynomial::TermMap& terms, const ExponentVector& key) {
  auto it = terms.find(key);
  if (it != terms.end() && std::abs(it->second) <= kPruneTolerance) terms.erase(it);
}

}  // namespace

Polynomial::Polynomial(int order, int sites) : order_(order), sites_(sites) {
  // Reuse the ExponentVector validation for n and L.
  (void)ExponentVector::zero(order, sites);
}

Polynomial Polynomial::identity(int order, int sites, Complex scale) {
  Polynomial p(order, sites);
  p.add_term(ExponentVector::zero(order, sites), scale);
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& exponents, Complex coefficient) {
  Polynomial p(exponents.order(), exponents.sites());
  p.add_term(exponents, coefficient);
  return p;
}

Polynomial Polynomial::generator(int order, int sites, int site, int power) {
  return monomial(ExponentVector::unit(order, sites, site, power));
}

Complex Polynomial::coefficient(const ExponentVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Complex{} : it->second;
}

void Polynomial::require_shape(const ExponentVector& exponents) const {
  if (exponents.order() != order_ || exponents.sites() != sites_) {
    throw DimensionError("term " + exponents.to_string() + " (n=" +
                         std::to_string(exponents.order()) + ") does not fit a polynomial with n=" +
                         std::to_string(order_) + ", L=" + std::to_string(sites_));
  }
}

void Polynomial::require_shape(const Polynomial& other) const {
  if (other.order_ != order_ || other.sites_ != sites_) {
    throw DimensionError("polynomials disagree: n=" + std::to_string(order_) + ", L=" +
                         std::to_string(sites_) + " vs n=" + std::to_string(other.order_) +
                         ", L=" + std::to_string(other.sites_));
  }
}

void Polynomial::add_term(const ExponentVector& exponents, Complex coefficient) {
  require_shape(exponents);
  if (!std::isfinite(coefficient.real()) || !std::isfinite(coefficient.imag())) {
    throw DomainError("non-finite coefficient for term " + exponents.to_string());
  }
  if (coefficient == Complex{}) return;
  terms_[exponents] += coefficient;
  prune(terms_, exponents);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_shape(other);
  for (const auto& [key, value] : other.terms_) add_term(key, value);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_shape(other);
  for (const auto& [key, value] : other.terms_) add_term(key, -value);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex scale) {
  if (scale == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    if (std::abs(it->second) <= kPruneTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return canonical_product(a, b); }

bool approx_equal(const Polynomial& a, const Polynomial& b, double tol) {
  if (a.order() != b.order() || a.sites() != b.sites()) return false;
  for (const auto& [key, value] : a.terms())
    if (std::abs(value - b.coefficient(key)) > tol) return false;
  for (const auto& [key, value] : b.terms())
    if (std::abs(value - a.coefficient(key)) > tol) return false;
  return true;
}

Monomial canonical_product(const Monomial& a, const Monomial& b) {
  require_compatible(a.exponents, b.exponents);
  const Phase phase = Phase::omega_power(a.exponents.order(), -circ(a.exponents, b.exponents));
  return {a.coefficient * b.coefficient * phase.value(), add(a.exponents, b.exponents)};
}

Polynomial canonical_product(const Polynomial& a, const Polynomial& b) {
  if (a.order() != b.order() || a.sites() != b.sites()) {
    throw DimensionError("cannot multiply polynomials with different n or L");
  }
  Polynomial out(a.order(), a.sites());
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      const Monomial m = canonical_product(Monomial{va, ka}, Monomial{vb, kb});
      out.add_term(m.exponents, m.coefficient);
    }
  }
  return out;
}

Phase reordering_phase(const ExponentVector& exponents) {
  return Phase::omega_power(exponents.order(), -circ(exponents, exponents));
}

Polynomial adjoint(const Polynomial& p) {
  Polynomial out(p.order(), p.sites());
  for (const auto& [key, value] : p.terms()) {
    out.add_term(complement(key), std::conj(value) * reordering_phase(key).value());
  }
  return out;
}

Polynomial reflect(const Polynomial& p) {
  Polynomial out(p.order(), p.sites());
  for (const auto& [key, value] : p.terms()) {
    out.add_term(reflect_vector(complement(key)), std::conj(value) * reordering_phase(key).value());
  }
  return out;
}

Polynomial gauge_apply(const Polynomial& p, std::optional<int> site) {
  if (site && (*site < 1 || *site > p.sites())) {
    throw DomainError("gauge site " + std::to_string(*site) + " outside 1.." +
                      std::to_string(p.sites()));
  }
  Polynomial out(p.order(), p.sites());
  for (const auto& [key, value] : p.terms()) {
    const int power = site ? key.at(*site) : degree(key);
    out.add_term(key, value * Phase::omega_power(p.order(), power).value());
  }
  return out;
}

SideClass classify(const Polynomial& p) {
  bool any_minus = false;
  bool any_plus = false;
  bool observable = true;
  const int mid = p.sites() / 2;
  for (const auto& [key, value] : p.terms()) {
    (void)value;
    for (int site = 1; site <= p.sites(); ++site) {
      if (key.at(site) == 0) continue;
      (site <= mid ? any_minus : any_plus) = true;
    }
    if (degree(key) % p.order() != 0) observable = false;
  }
  Side side = Side::scalar;
  if (any_minus && any_plus) {
    side = Side::crossing;
  } else if (any_minus) {
    side = Side::minus;
  } else if (any_plus) {
    side = Side::plus;
  }
  return {side, observable};
}

bool in_observable_algebra(const Polynomial& p, Half half) {
  const SideClass c = classify(p);
  if (!c.observable) return false;
  if (c.side == Side::scalar) return true;
  return c.side == (half == Half::minus ? Side::minus : Side::plus);
}

std::string to_string(Side side) {
  switch (side) {
    case Side::minus: return "minus";
    case Side::plus: return "plus";
    case Side::crossing: return "crossing";
    case Side::scalar: return "scalar";
  }
  return "unknown";
}

Phase crossing_phase(const ExponentVector& exponents) {
  const int n = exponents.order();
  const std::int64_t d = degree(exponents);
  // C_I and theta(C_I) = omega^{-(I o I)} C_{theta I^c} are already in normal
  // order relative to each other: (I o theta I^c) = 0 for I on the minus half.
  return Phase::zeta_power(n, d * d) * reordering_phase(exponents);
}

Polynomial build_X(const ExponentVector& exponents, double coupling) {
  if (!exponents.supported_on(Half::minus)) {
    throw DomainError("X term needs an exponent vector on the minus half, got " +
                      exponents.to_string());
  }
  if (exponents.is_zero()) throw DomainError("X term needs positive degree");
  const ExponentVector target = add(exponents, reflect_vector(complement(exponents)));
  return Polynomial::monomial(target, coupling * crossing_phase(exponents).value());
}

bool hermiticity_condition(const ExponentVector& exponents) {
  if (!exponents.supported_on(Half::minus)) {
    throw DomainError("hermiticity test expects a minus-half exponent vector");
  }
  const int n = exponents.order();
  for (int e : exponents.entries()) {
    if (e == 0) continue;
    if (n % 2 != 0 || 2 * e != n) return false;
  }
  return true;
}

Polynomial hermitian_pair(const Polynomial& y) { return y + adjoint(y); }

}  // namespace pfrp
