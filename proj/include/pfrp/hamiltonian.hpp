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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pfrp/algebra.hpp"
#include "pfrp/representation.hpp"

namespace pfrp {

/// Real couplings J_I for crossing terms C_I theta(C_I), keyed by exponent
/// vectors on the minus half with positive degree.
using CouplingTable = std::map<ExponentVector, double>;

/// Which sign hypothesis on the crossing couplings holds.
enum class CouplingRule {
  all_nonneg,          // J_I >= 0 for every I
  even_n_alternating,  // n even and (-1)^{|I|} J_I >= 0 for every I
  none,                // neither; positivity is not guaranteed
};

std::string to_string(CouplingRule rule);

/// Throws DomainError for a key off the minus half, of degree 0, of the
/// wrong shape, or with a non-finite coupling.
void validate_coupling_keys(const CouplingTable& couplings, int order, int sites);

/// H_0 = sum_I (-1)^{|I|+1} zeta^{|I|^2} J_I C_I theta(C_I).
Polynomial build_h0(const CouplingTable& couplings, int order, int sites);

CouplingRule validate_couplings(const CouplingTable& couplings, int order);

/// H = H_- + H_0 + H_+ with H_+ = theta(H_-). Immutable after assembly.
class HamiltonianSpec {
 public:
  int order() const { return h_minus_.order(); }
  int sites() const { return h_minus_.sites(); }
  const Polynomial& h_minus() const { return h_minus_; }
  const Polynomial& h_zero() const { return h_zero_; }
  const Polynomial& h_plus() const { return h_plus_; }
  const CouplingTable& couplings() const { return couplings_; }
  CouplingRule rule() const { return rule_; }
  const Polynomial& total() const { return total_; }

 private:
  friend HamiltonianSpec assemble(const Polynomial&, const CouplingTable&);
  HamiltonianSpec(Polynomial h_minus, CouplingTable couplings);

  Polynomial h_minus_;
  CouplingTable couplings_;
  Polynomial h_zero_;
  Polynomial h_plus_;
  Polynomial total_;
  CouplingRule rule_;
};

/// Builds H_+ and H_0, checks reflection and gauge invariance, and records the
/// coupling rule. h_minus must lie in the minus observable algebra; otherwise
/// DomainError lists the offending terms.
HamiltonianSpec assemble(const Polynomial& h_minus, const CouplingTable& couplings);

struct SymmetryReport {
  bool reflection_symbolic = false;
  bool gauge_symbolic = false;
  /// ||M(theta(H)) - M(H)||_F and ||M(U(H)) - M(H)||_F; negative when no
  /// representation was supplied.
  double reflection_matrix_gap = -1.0;
  double gauge_matrix_gap = -1.0;
  bool ok() const;
};

SymmetryReport check_symmetries(const Polynomial& h, const Representation* rep = nullptr);
SymmetryReport check_symmetries(const HamiltonianSpec& spec, const Representation* rep = nullptr);

/// The open clock chain -zeta sum_{j=1}^{L-1} t_j c_j c_{j+1}^{n-1}, for any
/// real t (no symmetry requirement).
Polynomial baxter_chain(int order, int sites, std::span<const double> t);

/// Baxter clock chain split at the middle bond: H_- collects bonds j < L/2,
/// the crossing bond enters as coupling J = -t_{L/2} on e_{L/2}. Requires
/// t_{L-j} = t_j; otherwise DomainError names the first failing pair.
HamiltonianSpec baxter(int order, int sites, std::span<const double> t);

/// H = H_- + H_0 + H_+ with independent H_+ in the plus observable algebra.
struct SplitHamiltonian {
  Polynomial h_minus;
  CouplingTable couplings;
  Polynomial h_plus;

  int order() const { return h_minus.order(); }
  int sites() const { return h_minus.sites(); }
  Polynomial h_zero() const;
  Polynomial total() const;
  /// H_- + H_0 + theta(H_-).
  Polynomial minus_doubled() const;
  /// theta(H_+) + H_0 + H_+.
  Polynomial plus_doubled() const;
};

SplitHamiltonian split_of(const HamiltonianSpec& spec);

/// Baxter chain with arbitrary real t, split at the middle bond.
SplitHamiltonian baxter_split(int order, int sites, std::span<const double> t);

/// Open-chain couplings after cutting a ring of L bonds (bond b joins sites b
/// and b+1 mod L) so that bond `cut` becomes the middle bond L/2. The bond
/// opposite to the cut becomes the open boundary and is dropped.
std::vector<double> periodic_cut_couplings(std::span<const double> ring, int cut);

}  // namespace pfrp
