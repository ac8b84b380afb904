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

#include "pfrp/representation.hpp"

#include <charconv>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "pfrp/errors.hpp"

namespace pfrp {

ClockShift clock_shift(int order) {
  if (order < 2) throw DomainError("clock/shift matrices need n >= 2, got " + std::to_string(order));
  ClockShift cs{Matrix::Zero(order, order), Matrix::Zero(order, order)};
  for (int k = 0; k < order; ++k) {
    cs.clock(k, k) = Phase::omega_power(order, k).value();
    cs.shift((k + 1) % order, k) = 1.0;
  }
  return cs;
}

Representation::Representation(int order, int sites, std::size_t dimension_cap)
    : order_(order), sites_(sites), dimension_(1) {
  (void)ExponentVector::zero(order, sites);
  const int pairs = sites / 2;
  std::size_t dim = 1;
  bool over = false;
  for (int a = 0; a < pairs; ++a) {
    over = over || dim > dimension_cap;
    if (!over) dim *= static_cast<std::size_t>(order);
  }
  if (over || dim > dimension_cap) {
    std::string required = over ? std::to_string(order) + "^" + std::to_string(pairs) : std::to_string(dim);
    throw ResourceError("representation for n=" + std::to_string(order) + ", L=" + std::to_string(sites) +
                        " needs dimension " + required + ", above the cap " + std::to_string(dimension_cap));
  }
  dimension_ = static_cast<Eigen::Index>(dim);

  const ClockShift cs = clock_shift(order);
  const Matrix id = Matrix::Identity(order, order);
  const Matrix odd_local = cs.clock;
  const Matrix even_local = Phase::zeta_power(order, order - 1).value() * (cs.clock * cs.shift);

  auto ladder = [&](int a, const Matrix& local) {
    Matrix out = Matrix::Identity(1, 1);
    for (int b = 0; b < pairs; ++b) {
      const Matrix& factor = b < a ? cs.shift : (b == a ? local : id);
      Matrix next = Eigen::kroneckerProduct(out, factor).eval();
      out = std::move(next);
    }
    return out;
  };

  generators_.reserve(static_cast<std::size_t>(sites));
  for (int a = 0; a < pairs; ++a) {
    generators_.push_back(ladder(a, odd_local));
    generators_.push_back(ladder(a, even_local));
  }

  powers_.resize(static_cast<std::size_t>(sites));
  for (int j = 0; j < sites; ++j) {
    auto& pw = powers_[static_cast<std::size_t>(j)];
    pw.reserve(static_cast<std::size_t>(order));
    pw.push_back(identity());
    for (int e = 1; e < order; ++e) pw.push_back(pw.back() * generators_[static_cast<std::size_t>(j)]);
  }
}

const Matrix& Representation::generator(int site) const {
  if (site < 1 || site > sites_) throw DomainError("generator index " + std::to_string(site) + " out of range");
  return generators_[static_cast<std::size_t>(site - 1)];
}

const Matrix& Representation::power(int site, int exponent) const {
  return powers_[static_cast<std::size_t>(site - 1)][static_cast<std::size_t>(exponent)];
}

Matrix Representation::monomial(const ExponentVector& exponents) const {
  if (exponents.order() != order_ || exponents.sites() != sites_) {
    throw DimensionError("monomial " + exponents.to_string() + " does not match the representation");
  }
  Matrix out = identity();
  for (int site = 1; site <= sites_; ++site) {
    const int e = exponents.at(site);
    if (e != 0) out = (out * power(site, e)).eval();
  }
  return out;
}

void require_compatible(const Polynomial& p, const Representation& rep) {
  if (p.order() != rep.order() || p.sites() != rep.sites()) {
    throw DimensionError("polynomial (n=" + std::to_string(p.order()) + ", L=" +
                         std::to_string(p.sites()) + ") does not match representation (n=" +
                         std::to_string(rep.order()) + ", L=" + std::to_string(rep.sites()) + ")");
  }
}

Matrix Representation::to_matrix(const Polynomial& p) const {
  require_compatible(p, *this);
  Matrix out = Matrix::Zero(dimension_, dimension_);
  for (const auto& [key, value] : p.terms()) out += value * monomial(key);
  return out;
}

Complex trace_monomial(const ExponentVector& exponents) {
  if (!exponents.is_zero()) return {0.0, 0.0};
  double dim = 1.0;
  for (int a = 0; a < exponents.sites() / 2; ++a) dim *= exponents.order();
  return {dim, 0.0};
}

Polynomial decompose(const Matrix& a, const Representation& rep, std::size_t enumeration_cap) {
  if (a.rows() != rep.dimension() || a.cols() != rep.dimension()) {
    throw DimensionError("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         ", representation dimension is " + std::to_string(rep.dimension()));
  }
  const int n = rep.order();
  const int sites = rep.sites();
  std::size_t count = 1;
  for (int j = 0; j < sites; ++j) {
    count *= static_cast<std::size_t>(n);
    if (count > enumeration_cap) {
      throw ResourceError("decomposition needs n^L basis monomials, above the cap " +
                          std::to_string(enumeration_cap));
    }
  }
  const double dim = static_cast<double>(rep.dimension());
  Polynomial out(n, sites);
  std::vector<int> digits(static_cast<std::size_t>(sites), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    ExponentVector key(n, digits);
    // Tr(C^* A) = sum_{ij} conj(C_ij) A_ij.
    const Complex coeff = rep.monomial(key).cwiseProduct(a.conjugate()).sum();
    out.add_term(key, std::conj(coeff) / dim);
    for (int pos = sites - 1; pos >= 0; --pos) {
      if (++digits[static_cast<std::size_t>(pos)] < n) break;
      digits[static_cast<std::size_t>(pos)] = 0;
    }
  }
  return out;
}

double YamazakiResiduals::max() const { return std::max({order, commutation, unitarity}); }

YamazakiResiduals verify_yamazaki(std::span<const Matrix> generators, int order) {
  YamazakiResiduals r;
  if (generators.empty()) return r;
  const Eigen::Index dim = generators.front().rows();
  const Matrix id = Matrix::Identity(dim, dim);
  const Complex omega = Phase::omega_power(order, 1).value();
  for (std::size_t j = 0; j < generators.size(); ++j) {
    const Matrix& g = generators[j];
    Matrix p = id;
    for (int e = 0; e < order; ++e) p = (p * g).eval();
    r.order = std::max(r.order, (p - id).norm());
    r.unitarity = std::max(r.unitarity, (g * g.adjoint() - id).norm());
    for (std::size_t k = j + 1; k < generators.size(); ++k) {
      const Matrix& h = generators[k];
      r.commutation = std::max(r.commutation, (g * h - omega * (h * g)).norm());
    }
  }
  return r;
}

YamazakiResiduals verify_yamazaki(const Representation& rep) {
  return verify_yamazaki(rep.generators(), rep.order());
}

std::string format_matrix(const Matrix& m) {
  auto num = [](double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
  };
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      os << (j ? " " : "") << num(z.real()) << (z.imag() < 0 || std::signbit(z.imag()) ? "" : "+")
         << num(z.imag()) << 'i';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pfrp
