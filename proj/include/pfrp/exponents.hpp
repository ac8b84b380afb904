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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pfrp {

/// Which half of the chain an index set lives on. Sites 1..L/2 form the
/// minus half, sites L/2+1..L the plus half; the reflection swaps them.
enum class Half { minus, plus };

/// Exponent multi-index (n_1, ..., n_L) of the ordered monomial
/// c_1^{n_1} c_2^{n_2} ... c_L^{n_L}, with every entry in [0, n).
///
/// Sites are 1-based in the public interface (`at(site)`), matching the
/// physics labelling; `entries()` exposes the raw 0-based storage.
class ExponentVector {
 public:
  /// Validates L even, L >= 2, n >= 2 and 0 <= entry < n. Throws DomainError.
  ExponentVector(int order, std::vector<int> entries);

  static ExponentVector zero(int order, int sites);
  /// power * e_site, reduced mod n.
  static ExponentVector unit(int order, int sites, int site, int power = 1);

  int order() const { return order_; }
  int sites() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  int at(int site) const;

  bool is_zero() const;
  /// True when every nonzero entry sits on the given half.
  bool supported_on(Half half) const;

  std::string to_string() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  ExponentVector() = default;

  int order_ = 2;
  std::vector<int> entries_;
};

/// Total degree |I| = sum of entries, not reduced mod n.
int degree(const ExponentVector& v);

/// Componentwise sum mod n.
ExponentVector add(const ExponentVector& a, const ExponentVector& b);

/// Ordering form  a o b = sum_{j > j'} a_j b_{j'}  (left index strictly
/// greater). With this convention C_a C_b = omega^{-(a o b)} C_{a+b}.
std::int64_t circ(const ExponentVector& a, const ExponentVector& b);

/// a ^ b = (a o b) - (b o a); antisymmetric.
std::int64_t wedge(const ExponentVector& a, const ExponentVector& b);

/// Entries n - n_j reduced mod n, so zero entries stay zero.
ExponentVector complement(const ExponentVector& v);

/// Site reversal j -> L - j + 1.
ExponentVector reflect_vector(const ExponentVector& v);

/// Throws DimensionError unless a and b share n and L.
void require_compatible(const ExponentVector& a, const ExponentVector& b);

/// Every exponent vector supported on `half`, in lexicographic order.
std::vector<ExponentVector> enumerate_half(int order, int sites, Half half);

}  // namespace pfrp
