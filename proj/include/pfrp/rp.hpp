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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pfrp/algebra.hpp"
#include "pfrp/hamiltonian.hpp"
#include "pfrp/representation.hpp"

namespace pfrp {

/// Default relative positivity tolerance eps: a value v passes when
/// Re v >= -eps (1 + |v|).
inline constexpr double kPositivityTolerance = 1e-9;

/// exp(A) by scaling and squaring with a [13/13] Pade approximant.
/// Throws ResourceError on non-finite input or overflow.
Matrix matrix_exp(const Matrix& a);

/// e^{-H} in a given representation, computed once and reused by the
/// trace functionals below.
class BoltzmannWeight {
 public:
  BoltzmannWeight(const Polynomial& h, const Representation& rep);
  BoltzmannWeight(const Matrix& h_matrix, const Representation& rep);

  const Representation& representation() const { return *rep_; }
  const Matrix& weight() const { return weight_; }
  /// Tr(e^{-H}).
  Complex partition_function() const { return weight_.trace(); }
  /// Tr(A theta(B) e^{-H}); linear in A, anti-linear in B.
  Complex functional(const Polynomial& a, const Polynomial& b) const;
  /// Tr(theta(B) A e^{-H}).
  Complex functional_reversed(const Polynomial& a, const Polynomial& b) const;

 private:
  const Representation* rep_;
  Matrix weight_;
};

/// Tr(A theta(B) e^{-H}). A and B must lie on the same half.
Complex rp_functional(const Polynomial& a, const Polynomial& b, const HamiltonianSpec& spec,
                      const Representation& rep);

/// Pass test used throughout: Re v >= -tol (1 + |v|) and |Im v| <= tol (1 + |v|).
bool is_nonnegative_real(Complex v, double tol = kPositivityTolerance);

/// Random element of the observable algebra of one half: uniform exponent
/// vectors with degree divisible by n, standard complex Gaussian coefficients,
/// between 1 and max_terms terms.
Polynomial random_observable(int order, int sites, Half half, std::mt19937_64& rng,
                             int max_terms = 8);

/// Every observable monomial supported on `half`, identity first.
std::vector<Polynomial> observable_monomials(int order, int sites, Half half);

struct Violation {
  std::string witness;
  std::string kind;
  Complex value;
};

struct RPReport {
  Complex partition_function;
  /// Smallest Re f(A,A) / (1 + |f(A,A)|) over all witnesses.
  double min_diagonal_real = 0.0;
  /// Largest |Im f(A,A)| / (1 + |f(A,A)|) over all witnesses.
  double max_diagonal_imag_abs = 0.0;
  /// Smallest eigenvalue of the hermitized Gram matrix on the structured
  /// basis, divided by 1 + max |G_ab|.
  double gram_min_eigenvalue = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = kPositivityTolerance;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

struct RPOptions {
  int samples = 500;
  std::uint64_t seed = 0;
  double tolerance = kPositivityTolerance;
  int max_terms = 8;
};

/// Samples A in the minus observable algebra (plus the identity and every
/// observable monomial) and checks f(A,A) = Tr(A theta(A) e^{-H}) >= 0, the
/// equality Tr(A theta(A) e^{-H}) = Tr(theta(A) A e^{-H}), the reality of the
/// partition function and the Gram matrix on the structured set.
/// Violations are recorded, never thrown.
RPReport check_rp(const HamiltonianSpec& spec, const Representation& rep, const RPOptions& options);

struct GramResult {
  /// (G + G^*) / 2 with G_ab = f(A_a, A_b).
  Matrix gram;
  double min_eigenvalue = 0.0;
  /// max over pairs of |G_ab|^2 - G_aa G_bb (Schwarz defect; <= 0 expected).
  double max_schwarz_excess = 0.0;
};

GramResult gram_psd(const Polynomial& h, const Representation& rep, std::span<const Polynomial> basis);
GramResult gram_psd(const HamiltonianSpec& spec, const Representation& rep,
                    std::span<const Polynomial> basis);

/// [(1 - H_0/k) e^{-H_-/k} e^{-theta(H_-)/k}]^k.
Matrix trotter_approximant(const HamiltonianSpec& spec, const Representation& rep, int k);

struct ConservationReport {
  int trials = 0;
  /// Tuples whose total degree is not divisible by n.
  int nonconserving = 0;
  /// Largest |Tr(T theta(T))| among those, T = A C_1 B_1 ... C_k B_k.
  double max_nonconserving_trace = 0.0;
  /// Smallest Re Tr(T theta(T)) over the conserving tuples (expected >= 0).
  double min_conserving_real = 0.0;
  /// Largest matrix residual of the rearrangement phase identity.
  double max_rearrangement_residual = 0.0;
  /// Tuples where the symbolic rearrangement identity failed.
  int symbolic_failures = 0;
};

/// Samples tuples (I^(1), ..., I^(k)) on the minus half with random A, B_j in
/// the minus observable algebra. Trials are drawn until `trials` tuples with
/// non-conserved total degree have been seen (and at least `trials` overall).
ConservationReport conservation_law_check(const Representation& rep, int trials, std::uint64_t seed);

struct BoundsReport {
  Complex value;              // f(A,B) = Tr(A theta(B) e^{-H})
  double norm_minus_a = 0.0;  // ||A||_-
  double norm_plus_a = 0.0;   // ||A||_+
  double norm_minus_b = 0.0;
  double norm_plus_b = 0.0;
  double margin_minus_plus = 0.0;  // ||A||_- ||B||_+ - |f|
  double margin_plus_minus = 0.0;  // ||A||_+ ||B||_- - |f|
  Complex partition_function;
  double partition_minus = 0.0;  // Tr e^{-(H_- + H_0 + theta H_-)}
  double partition_plus = 0.0;   // Tr e^{-(theta H_+ + H_0 + H_+)}
  double partition_margin = 0.0;
  /// A squared norm came out negative beyond tolerance: the auxiliary
  /// Hamiltonian is not reflection positive on that element.
  bool auxiliary_violation = false;
  double tolerance = kPositivityTolerance;

  /// Every margin >= -tol (1 + bound).
  bool holds() const;
};

BoundsReport rp_bounds_check(const Polynomial& a, const Polynomial& b, const SplitHamiltonian& h,
                             const Representation& rep, double tol = kPositivityTolerance);

/// f(c^j) = Tr(c^j theta(c^j) e^{-H}) for L = 2 and H = zeta c theta(c).
Complex counterexample_f(int order, int j, const Representation& rep);

struct FamilyResult {
  int order = 0;
  int j = 0;
  Complex value;
  bool positive = false;
};

/// (n, j) of a positivity family: 1 -> (k^3, k^2); 2 -> (2k^2, 2k j');
/// 3 -> (k^2, j' k) with k odd. Throws DomainError outside the definitions.
std::pair<int, int> family_parameters(int family, int k, int jprime);
FamilyResult family_check(int family, int k, int jprime, double tol = kPositivityTolerance,
                          std::size_t dimension_cap = kDefaultDimensionCap);

struct LoopReport {
  double ground_energy = 0.0;
  int ground_degeneracy = 0;
  /// P W P is a multiple of P, within 1e-8.
  bool w_order = false;
  double w_order_defect = 0.0;
  /// <Omega, W Omega> for an orthonormal basis of the ground space.
  std::vector<Complex> expectations;
  /// All expectations real and >= -1e-8 (only meaningful under W-order).
  bool nonnegative = false;
};

/// Ground-state expectation of the loop W_A = A theta(A) for hermitian H.
/// Throws DomainError if H is not hermitian or A is not in the minus
/// observable algebra.
LoopReport loop_expectation(const Polynomial& a, const Polynomial& h, const Representation& rep);

}  // namespace pfrp
