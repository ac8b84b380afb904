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

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pfrp/algebra.hpp"

namespace pfrp {

using Matrix = Eigen::MatrixXcd;

/// Hard cap on the Hilbert-space dimension n^{L/2}.
inline constexpr std::size_t kDefaultDimensionCap = 4096;
/// Cap on n^L, the number of basis monomials `decompose` enumerates.
inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 20;
/// Matrix equality tolerance (Frobenius norm).
inline constexpr double kMatrixTolerance = 1e-10;

/// Clock sigma = diag(1, omega, ..., omega^{n-1}) and shift tau|k> = |k+1 mod n>,
/// so that sigma tau = omega tau sigma.
struct ClockShift {
  Matrix clock;
  Matrix shift;
};

ClockShift clock_shift(int order);

/// Irreducible representation of L parafermions of order n on
/// (C^n)^{tensor L/2}. Site pair a = 1..L/2 carries
///   c_{2a-1} = tau^{x(a-1)} x sigma x 1...,  c_{2a} = zeta^{n-1} tau^{x(a-1)} x (sigma tau) x 1...
/// The zeta^{n-1} prefactor makes c^n = 1 for either parity of n.
class Representation {
 public:
  Representation(int order, int sites, std::size_t dimension_cap = kDefaultDimensionCap);

  int order() const { return order_; }
  int sites() const { return sites_; }
  Eigen::Index dimension() const { return dimension_; }

  /// c_site, 1-based.
  const Matrix& generator(int site) const;
  std::span<const Matrix> generators() const { return generators_; }

  /// c_1^{n_1} ... c_L^{n_L}.
  Matrix monomial(const ExponentVector& exponents) const;
  Matrix to_matrix(const Polynomial& p) const;
  Matrix identity() const { return Matrix::Identity(dimension_, dimension_); }

 private:
  const Matrix& power(int site, int exponent) const;

  int order_;
  int sites_;
  Eigen::Index dimension_;
  std::vector<Matrix> generators_;
  // powers_[site - 1][e] = c_site^e.
  std::vector<std::vector<Matrix>> powers_;
};

/// Throws DimensionError unless the polynomial and representation share n, L.
void require_compatible(const Polynomial& p, const Representation& rep);

/// Tr(C_I) from the trace theorem: n^{L/2} for I = 0, otherwise 0.
Complex trace_monomial(const ExponentVector& exponents);

/// Coefficients a_I = Tr(C_I^* A) / n^{L/2} over all n^L basis monomials.
Polynomial decompose(const Matrix& a, const Representation& rep,
                     std::size_t enumeration_cap = kDefaultEnumerationCap);

/// Largest residuals of the defining relations over all generators.
struct YamazakiResiduals {
  double order = 0.0;         // max ||c_j^n - 1||
  double commutation = 0.0;   // max ||c_j c_j' - omega c_j' c_j||, j < j'
  double unitarity = 0.0;     // max ||c_j c_j^* - 1||
  double max() const;
};

YamazakiResiduals verify_yamazaki(const Representation& rep);
YamazakiResiduals verify_yamazaki(std::span<const Matrix> generators, int order);

/// Row-major text grid of `re+im i` entries, one row per line.
std::string format_matrix(const Matrix& m);

}  // namespace pfrp
