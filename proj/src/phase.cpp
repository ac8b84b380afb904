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

#include "pfrp/phase.hpp"

#include <cmath>
#include <numbers>

#include "pfrp/errors.hpp"

namespace pfrp {

Phase::Phase(int order, std::int64_t zeta_exponent) : order_(order), exponent_(0) {
  if (order < 2) throw DomainError("phase order must be >= 2");
  const std::int64_t m = 2 * static_cast<std::int64_t>(order);
  exponent_ = static_cast<int>(((zeta_exponent % m) + m) % m);
}

Phase Phase::operator*(const Phase& other) const {
  if (other.order_ != order_) throw DimensionError("phases of different order");
  return Phase(order_, static_cast<std::int64_t>(exponent_) + other.exponent_);
}

std::complex<double> Phase::value() const { return zeta_value(order_, exponent_); }

std::complex<double> zeta_value(int order, std::int64_t k) {
  const std::int64_t m = 2 * static_cast<std::int64_t>(order);
  k = ((k % m) + m) % m;
  // Quarter turns are exact.
  if ((2 * k) % order == 0) {
    switch ((2 * k) / order) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  const double angle = std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace pfrp
