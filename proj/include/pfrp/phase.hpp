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
#include <cstdint>

namespace pfrp {

/// Exact power of zeta = e^{i pi / n}, the primitive 2n-th root of unity
/// with zeta^2 = omega = e^{2 pi i / n}. Stored as an exponent mod 2n so that
/// long chains of phase factors never drift.
class Phase {
 public:
  Phase(int order, std::int64_t zeta_exponent);

  static Phase one(int order) { return Phase(order, 0); }
  static Phase zeta_power(int order, std::int64_t k) { return Phase(order, k); }
  static Phase omega_power(int order, std::int64_t k) { return Phase(order, 2 * k); }
  /// (-1)^k = zeta^{n k}.
  static Phase sign(int order, std::int64_t k) { return Phase(order, static_cast<std::int64_t>(order) * k); }

  int order() const { return order_; }
  /// Exponent of zeta in [0, 2n).
  int exponent() const { return exponent_; }
  bool is_one() const { return exponent_ == 0; }

  Phase operator*(const Phase& other) const;
  Phase& operator*=(const Phase& other) { return *this = *this * other; }
  Phase conj() const { return Phase(order_, -exponent_); }

  /// Complex value; exact at multiples of pi/2.
  std::complex<double> value() const;

  friend bool operator==(const Phase&, const Phase&) = default;

 private:
  int order_;
  int exponent_;
};

/// zeta^k for parafermion order n, evaluated with the same rule as Phase::value.
std::complex<double> zeta_value(int order, std::int64_t k);

}  // namespace pfrp
