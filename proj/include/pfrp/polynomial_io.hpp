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

#include <string>
#include <string_view>

#include "pfrp/algebra.hpp"

namespace pfrp {

/// One line per term, `coeff * c1^a c2^b ...`, `coeff * 1` for the identity
/// and a single `0` line for the zero polynomial.
///
/// A coefficient that is exactly an integer multiple r * zeta^k is written as
/// `r*z^k` (or `r` when k = 0); any other value as `(re,im)` with the shortest
/// round-trip decimals. Parsing the output reproduces the polynomial bit for bit.
std::string format_polynomial(const Polynomial& p);

/// Inverse of format_polynomial. Throws DomainError with the offending line.
Polynomial parse_polynomial(std::string_view text, int order, int sites);

}  // namespace pfrp
