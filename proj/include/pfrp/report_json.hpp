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

#include <json.hpp>

#include "pfrp/representation.hpp"
#include "pfrp/rp.hpp"

namespace pfrp {

using Json = nlohmann::json;

/// [re, im].
Json complex_json(Complex z);

/// Exactly the RPReport fields: partition_function, min_diagonal_real,
/// max_diagonal_imag_abs, gram_min_eigenvalue, samples, seed, tolerance,
/// violations.
Json to_json(const RPReport& report);
Json to_json(const YamazakiResiduals& residuals);
Json to_json(const BoundsReport& report);
Json to_json(const ConservationReport& report);
Json to_json(const LoopReport& report);

}  // namespace pfrp
