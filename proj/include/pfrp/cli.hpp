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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pfrp {

enum class Command {
  verify_relations,
  rp_check,
  gram,
  trotter,
  bounds,
  counterexample,
  families,
  baxter,
  decompose,
};

std::string to_string(Command command);
std::optional<Command> parse_command(const std::string& name);
std::vector<std::string> command_names();

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

/// Residual bound for the relation suite.
inline constexpr double kRelationTolerance = 1e-11;

/// Command-line flags override the matching spec-file fields.
struct RunConfig {
  Command command = Command::verify_relations;
  std::optional<int> n;
  std::optional<int> L;
  std::optional<std::filesystem::path> spec_path;
  int k = 32;
  int j = 1;
  int samples = 500;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::optional<std::filesystem::path> out_path;
  int family = 1;
  int kparam = 2;
  int jprime = 1;
  /// Baxter couplings t_1..t_{L-1}.
  std::optional<std::vector<double>> t;
};

/// Throws std::invalid_argument on an invalid combination.
void validate(const RunConfig& config);

/// Runs the command, writes the JSON report to out_path (or `out`), and
/// returns the exit code. Errors go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pfrp
