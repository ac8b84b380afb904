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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfrp/errors.hpp"
#include "pfrp/hamiltonian.hpp"

namespace pfrp {

/// Malformed spec file. The message starts with `line L, column C:` for
/// syntax errors and with the JSON pointer of the offending value otherwise.
class SpecParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Hamiltonian description read from JSON:
///
///   {"n": 3, "L": 4,
///    "h_minus":   [{"coefficient": [re, im], "exponents": [..L ints..]}, ...],
///    "couplings": [{"exponents": [..], "J": x}, ...],
///    "h_plus":    [...]}            // optional independent H_+ (bounds only)
///
/// or the shortcut {"baxter": {"n": 3, "L": 4, "t": [..L-1 reals..]}}.
struct SpecFile {
  int order = 0;
  int sites = 0;
  std::optional<Polynomial> h_minus;
  CouplingTable couplings;
  std::optional<Polynomial> h_plus;
  std::optional<std::vector<double>> baxter_t;
};

/// Values given here replace the corresponding file fields.
struct SpecOverrides {
  std::optional<int> order;
  std::optional<int> sites;
};

SpecFile parse_spec(std::string_view text, const SpecOverrides& overrides = {});
SpecFile load_spec(const std::filesystem::path& path, const SpecOverrides& overrides = {});

/// Symmetric Hamiltonian (Baxter shortcut requires t_{L-j} = t_j).
/// A supplied h_plus must equal theta(h_minus).
HamiltonianSpec to_hamiltonian(const SpecFile& spec);

/// Split form with independent H_+ (defaults to theta(H_-)).
SplitHamiltonian to_split(const SpecFile& spec);

}  // namespace pfrp
