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

#include "pfrp/rp.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "pfrp/errors.hpp"
#include "pfrp/polynomial_io.hpp"

namespace pfrp {

Matrix matrix_exp(const Matrix& a) {
  if (!a.allFinite()) throw ResourceError("matrix exponential of a non-finite matrix");
  if (a.size() == 0) return a;
  if (a.isZero(0.0)) return Matrix::Identity(a.rows(), a.cols());
  Matrix out = a.exp();
  if (!out.allFinite()) throw ResourceError("matrix exponential overflowed");
  return out;
}

BoltzmannWeight::BoltzmannWeight(const Polynomial& h, const Representation& rep)
    : BoltzmannWeight(rep.to_matrix(h), rep) {}

BoltzmannWeight::BoltzmannWeight(const Matrix& h_matrix, const Representation& rep)
    : rep_(&rep), weight_(matrix_exp(-h_matrix)) {
  if (h_matrix.rows() != rep.dimension() || h_matrix.cols() != rep.dimension()) {
    throw DimensionError("Hamiltonian matrix does not match the representation dimension");
  }
}

Complex BoltzmannWeight::functional(const Polynomial& a, const Polynomial& b) const {
  const Matrix left = rep_->to_matrix(a) * rep_->to_matrix(reflect(b));
  // Tr(X W) = sum_ij X_ij W_ji.
  return left.cwiseProduct(weight_.transpose()).sum();
}

Complex BoltzmannWeight::functional_reversed(const Polynomial& a, const Polynomial& b) const {
  const Matrix left = rep_->to_matrix(reflect(b)) * rep_->to_matrix(a);
  return left.cwiseProduct(weight_.transpose()).sum();
}

namespace {

void require_same_half(const Polynomial& a, const Polynomial& b) {
  const SideClass ca = classify(a);
  const SideClass cb = classify(b);
  if (ca.side == Side::crossing || cb.side == Side::crossing) {
    throw DomainError("functional arguments must each lie on one half of the chain");
  }
  if (ca.side != Side::scalar && cb.side != Side::scalar && ca.side != cb.side) {
    throw DomainError("functional arguments lie on different halves");
  }
}

double relative(double x, Complex v) { return x / (1.0 + std::abs(v)); }

}  // namespace

Complex rp_functional(const Polynomial& a, const Polynomial& b, const HamiltonianSpec& spec,
                      const Representation& rep) {
  require_same_half(a, b);
  return BoltzmannWeight(spec.total(), rep).functional(a, b);
}

bool is_nonnegative_real(Complex v, double tol) {
  const double scale = 1.0 + std::abs(v);
  return v.real() >= -tol * scale && std::abs(v.imag()) <= tol * scale;
}

Polynomial random_observable(int order, int sites, Half half, std::mt19937_64& rng, int max_terms) {
  std::vector<ExponentVector> candidates;
  for (auto& v : enumerate_half(order, sites, half))
    if (degree(v) % order == 0) candidates.push_back(std::move(v));
  std::uniform_int_distribution<int> count_dist(1, std::max(1, max_terms));
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  Polynomial p(order, sites);
  const int count = count_dist(rng);
  for (int t = 0; t < count; ++t) {
    const std::size_t idx = pick(rng);
    const double re = gauss(rng);
    const double im = gauss(rng);
    p.add_term(candidates[idx], {re, im});
  }
  return p;
}

std::vector<Polynomial> observable_monomials(int order, int sites, Half half) {
  std::vector<Polynomial> out;
  for (const auto& v : enumerate_half(order, sites, half))
    if (degree(v) % order == 0) out.push_back(Polynomial::monomial(v));
  return out;
}

RPReport check_rp(const HamiltonianSpec& spec, const Representation& rep, const RPOptions& options) {
  require_compatible(spec.total(), rep);
  RPReport report;
  report.samples = options.samples;
  report.seed = options.seed;
  report.tolerance = options.tolerance;
  const double tol = options.tolerance;

  const BoltzmannWeight weight(spec.total(), rep);
  report.partition_function = weight.partition_function();
  if (!is_nonnegative_real(report.partition_function, tol) || report.partition_function.real() <= 0.0) {
    report.violations.push_back({"identity", "partition_function", report.partition_function});
  }

  const int n = spec.order();
  const int sites = spec.sites();
  const std::vector<Polynomial> basis = observable_monomials(n, sites, Half::minus);

  report.min_diagonal_real = std::numeric_limits<double>::infinity();
  report.max_diagonal_imag_abs = 0.0;
  auto examine = [&](const Polynomial& a, const std::string& id) {
    const Complex f = weight.functional(a, a);
    const Complex g = weight.functional_reversed(a, a);
    const double re = relative(f.real(), f);
    const double im = relative(std::abs(f.imag()), f);
    report.min_diagonal_real = std::min(report.min_diagonal_real, re);
    report.max_diagonal_imag_abs = std::max(report.max_diagonal_imag_abs, im);
    if (re < -tol) report.violations.push_back({id, "diagonal_negative", f});
    if (im > tol) report.violations.push_back({id, "diagonal_imaginary", f});
    if (relative(std::abs(f - g), f) > tol) report.violations.push_back({id, "order_asymmetry", f - g});
  };

  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& key = basis[i].terms().begin()->first;
    examine(basis[i], "basis[" + std::to_string(i) + "] " + key.to_string());
  }
  std::mt19937_64 rng(options.seed);
  for (int s = 0; s < options.samples; ++s) {
    examine(random_observable(n, sites, Half::minus, rng, options.max_terms),
            "sample[" + std::to_string(s) + "]");
  }

  const GramResult gram = gram_psd(spec.total(), rep, basis);
  const double scale = 1.0 + gram.gram.cwiseAbs().maxCoeff();
  report.gram_min_eigenvalue = gram.min_eigenvalue / scale;
  if (report.gram_min_eigenvalue < -tol) {
    report.violations.push_back({"gram", "gram_negative_eigenvalue", {gram.min_eigenvalue, 0.0}});
  }
  return report;
}

GramResult gram_psd(const Polynomial& h, const Representation& rep, std::span<const Polynomial> basis) {
  const BoltzmannWeight weight(h, rep);
  const auto m = static_cast<Eigen::Index>(basis.size());
  Matrix g(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      g(a, b) = weight.functional(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);

  GramResult out;
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      out.max_schwarz_excess = std::max(out.max_schwarz_excess,
                                        std::norm(g(a, b)) - g(a, a).real() * g(b, b).real());
  out.gram = (g + g.adjoint()) / 2.0;
  if (m > 0) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(out.gram, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = solver.eigenvalues().minCoeff();
  }
  return out;
}

GramResult gram_psd(const HamiltonianSpec& spec, const Representation& rep,
                    std::span<const Polynomial> basis) {
  for (const auto& p : basis) {
    if (!in_observable_algebra(p, Half::minus)) {
      throw DomainError("Gram basis elements must lie in the minus observable algebra");
    }
  }
  return gram_psd(spec.total(), rep, basis);
}

Matrix trotter_approximant(const HamiltonianSpec& spec, const Representation& rep, int k) {
  if (k < 1) throw DomainError("Trotter step count must be >= 1");
  const double inv = 1.0 / static_cast<double>(k);
  const Matrix step = (rep.identity() - inv * rep.to_matrix(spec.h_zero())) *
                      matrix_exp(-inv * rep.to_matrix(spec.h_minus())) *
                      matrix_exp(-inv * rep.to_matrix(spec.h_plus()));
  Matrix result = rep.identity();
  Matrix base = step;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) result = (result * base).eval();
    if (e > 1) base = (base * base).eval();
  }
  return result;
}

ConservationReport conservation_law_check(const Representation& rep, int trials, std::uint64_t seed) {
  const int n = rep.order();
  const int sites = rep.sites();
  ConservationReport report;
  report.min_conserving_real = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length_dist(1, 4);
  const std::vector<ExponentVector> minus_vectors = enumerate_half(n, sites, Half::minus);
  std::uniform_int_distribution<std::size_t> pick(0, minus_vectors.size() - 1);

  auto mat = [&](const Polynomial& p) { return rep.to_matrix(p); };
  const int max_iterations = 100 * std::max(1, trials);

  while ((report.nonconserving < trials || report.trials < trials) && report.trials < max_iterations) {
    ++report.trials;
    const int k = length_dist(rng);
    const Polynomial a = random_observable(n, sites, Half::minus, rng, 3);
    Polynomial t = a;
    Polynomial lhs = a * reflect(a);
    Matrix lhs_matrix = mat(a) * mat(reflect(a));
    std::int64_t total_degree = 0;
    std::vector<std::int64_t> degrees;
    for (int j = 0; j < k; ++j) {
      const ExponentVector& key = minus_vectors[pick(rng)];
      const Polynomial c = Polynomial::monomial(key);
      const Polynomial b = random_observable(n, sites, Half::minus, rng, 3);
      t = t * c * b;
      lhs = lhs * c * reflect(c) * b * reflect(b);
      lhs_matrix = (lhs_matrix * mat(c) * mat(reflect(c)) * mat(b) * mat(reflect(b))).eval();
      degrees.push_back(degree(key));
      total_degree += degree(key);
    }
    std::int64_t pair_sum = 0;
    for (std::size_t x = 0; x < degrees.size(); ++x)
      for (std::size_t y = x + 1; y < degrees.size(); ++y) pair_sum += degrees[x] * degrees[y];
    const Complex phase = Phase::omega_power(n, pair_sum).value();

    const Polynomial reflected = reflect(t);
    const Polynomial rhs = (t * reflected) * phase;
    double coeff_scale = 1.0;
    for (const auto& [key, value] : rhs.terms()) coeff_scale = std::max(coeff_scale, std::abs(value));
    if (!approx_equal(lhs, rhs, 1e-10 * coeff_scale)) ++report.symbolic_failures;

    const Matrix rhs_matrix = phase * (mat(t) * mat(reflected));
    const double residual = (lhs_matrix - rhs_matrix).norm() / (1.0 + rhs_matrix.norm());
    report.max_rearrangement_residual = std::max(report.max_rearrangement_residual, residual);

    const Complex trace = (mat(t) * mat(reflected)).trace();
    if (total_degree % n != 0) {
      ++report.nonconserving;
      report.max_nonconserving_trace = std::max(report.max_nonconserving_trace, std::abs(trace));
    } else {
      report.min_conserving_real = std::min(report.min_conserving_real, trace.real());
    }
  }
  if (report.min_conserving_real == std::numeric_limits<double>::infinity()) report.min_conserving_real = 0.0;
  return report;
}

bool BoundsReport::holds() const {
  auto ok = [&](double margin, double bound) { return margin >= -tolerance * (1.0 + bound); };
  const double fa = std::abs(value);
  return !auxiliary_violation && ok(margin_minus_plus, margin_minus_plus + fa) &&
         ok(margin_plus_minus, margin_plus_minus + fa) &&
         ok(partition_margin, partition_margin + std::abs(partition_function));
}

BoundsReport rp_bounds_check(const Polynomial& a, const Polynomial& b, const SplitHamiltonian& h,
                             const Representation& rep, double tol) {
  require_same_half(a, b);
  const bool a_ok = in_observable_algebra(a, Half::plus) || in_observable_algebra(a, Half::minus);
  const bool b_ok = in_observable_algebra(b, Half::plus) || in_observable_algebra(b, Half::minus);
  if (!a_ok || !b_ok) throw DomainError("bounds need observables (degree divisible by n)");
  if (!in_observable_algebra(h.h_minus, Half::minus) || !in_observable_algebra(h.h_plus, Half::plus)) {
    throw DomainError("split Hamiltonian needs H_- and H_+ in the observable algebras of their halves");
  }

  BoundsReport r;
  r.tolerance = tol;
  const BoltzmannWeight full(h.total(), rep);
  const BoltzmannWeight minus(h.minus_doubled(), rep);
  const BoltzmannWeight plus(h.plus_doubled(), rep);

  auto norm_of = [&](const BoltzmannWeight& w, const Polynomial& x) {
    const Complex sq = w.functional(x, x);
    if (!is_nonnegative_real(sq, tol)) r.auxiliary_violation = true;
    return std::sqrt(std::max(0.0, sq.real()));
  };

  r.value = full.functional(a, b);
  r.norm_minus_a = norm_of(minus, a);
  r.norm_plus_a = norm_of(plus, a);
  r.norm_minus_b = norm_of(minus, b);
  r.norm_plus_b = norm_of(plus, b);
  r.margin_minus_plus = r.norm_minus_a * r.norm_plus_b - std::abs(r.value);
  r.margin_plus_minus = r.norm_plus_a * r.norm_minus_b - std::abs(r.value);

  r.partition_function = full.partition_function();
  const Complex zm = minus.partition_function();
  const Complex zp = plus.partition_function();
  if (!is_nonnegative_real(zm, tol) || !is_nonnegative_real(zp, tol)) r.auxiliary_violation = true;
  r.partition_minus = zm.real();
  r.partition_plus = zp.real();
  r.partition_margin = std::sqrt(std::max(0.0, r.partition_minus) * std::max(0.0, r.partition_plus)) -
                       std::abs(r.partition_function);
  return r;
}

Complex counterexample_f(int order, int j, const Representation& rep) {
  if (rep.sites() != 2 || rep.order() != order) {
    throw DimensionError("counterexample needs a two-site representation of order " + std::to_string(order));
  }
  if (j < 1 || j > order) throw DomainError("power j must lie in 1..n, got " + std::to_string(j));
  CouplingTable couplings{{ExponentVector::unit(order, 2, 1), 1.0}};
  const HamiltonianSpec spec = assemble(Polynomial(order, 2), couplings);
  const Polynomial a = Polynomial::generator(order, 2, 1, j);
  return BoltzmannWeight(spec.total(), rep).functional(a, a);
}

std::pair<int, int> family_parameters(int family, int k, int jprime) {
  auto reject = [&](const std::string& why) -> std::pair<int, int> {
    throw DomainError("family " + std::to_string(family) + " with k=" + std::to_string(k) +
                      ", j'=" + std::to_string(jprime) + ": " + why);
  };
  if (k < 1) return reject("k must be a positive integer");
  switch (family) {
    case 1:
      if (k < 2) return reject("k = 1 gives j = n, outside j < n");
      return {k * k * k, k * k};
    case 2:
      if (jprime < 1 || jprime >= k) return reject("needs 1 <= j' < k");
      return {2 * k * k, 2 * k * jprime};
    case 3:
      if (k % 2 == 0) return reject("needs odd k");
      if (jprime < 1 || jprime >= k) return reject("needs 1 <= j' < k");
      return {k * k, jprime * k};
    default:
      return reject("family must be 1, 2 or 3");
  }
}

FamilyResult family_check(int family, int k, int jprime, double tol, std::size_t dimension_cap) {
  const auto [n, j] = family_parameters(family, k, jprime);
  const Representation rep(n, 2, dimension_cap);
  FamilyResult out;
  out.order = n;
  out.j = j;
  out.value = counterexample_f(n, j, rep);
  out.positive = out.value.real() >= -tol && std::abs(out.value.imag()) <= tol;
  return out;
}

LoopReport loop_expectation(const Polynomial& a, const Polynomial& h, const Representation& rep) {
  if (!in_observable_algebra(a, Half::minus)) {
    throw DomainError("loop operator needs A in the minus observable algebra");
  }
  const Matrix mh = rep.to_matrix(h);
  if ((mh - mh.adjoint()).norm() > kMatrixTolerance) {
    throw DomainError("loop expectations are only supported for hermitian Hamiltonians");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver((mh + mh.adjoint()) / 2.0);
  const Eigen::VectorXd& energies = solver.eigenvalues();
  const double lo = energies.minCoeff();
  const double width = energies.maxCoeff() - lo;
  const double threshold = 1e-8 * std::max(1.0, width);

  std::vector<Eigen::Index> ground;
  for (Eigen::Index i = 0; i < energies.size(); ++i)
    if (energies(i) <= lo + threshold) ground.push_back(i);

  Matrix basis(mh.rows(), static_cast<Eigen::Index>(ground.size()));
  for (std::size_t c = 0; c < ground.size(); ++c)
    basis.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(ground[c]);

  const Matrix w = rep.to_matrix(a) * rep.to_matrix(reflect(a));
  const Matrix block = basis.adjoint() * w * basis;
  const auto d = static_cast<double>(ground.size());
  const Complex mean = block.trace() / d;

  LoopReport r;
  r.ground_energy = lo;
  r.ground_degeneracy = static_cast<int>(ground.size());
  r.w_order_defect = (block - mean * Matrix::Identity(block.rows(), block.cols())).norm();
  r.w_order = r.w_order_defect <= 1e-8;
  r.nonnegative = true;
  for (Eigen::Index i = 0; i < block.rows(); ++i) {
    const Complex e = block(i, i);
    r.expectations.push_back(e);
    if (e.real() < -1e-8 || std::abs(e.imag()) > 1e-8) r.nonnegative = false;
  }
  return r;
}

}  // namespace pfrp
