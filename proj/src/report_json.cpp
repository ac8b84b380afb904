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

#include "pfrp/report_json.hpp"

namespace pfrp {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const RPReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"witness", v.witness}, {"kind", v.kind}, {"value", complex_json(v.value)}});
  }
  return {
      {"partition_function", complex_json(report.partition_function)},
      {"min_diagonal_real", report.min_diagonal_real},
      {"max_diagonal_imag_abs", report.max_diagonal_imag_abs},
      {"gram_min_eigenvalue", report.gram_min_eigenvalue},
      {"samples", report.samples},
      {"seed", report.seed},
      {"tolerance", report.tolerance},
      {"violations", violations},
  };
}

Json to_json(const YamazakiResiduals& r) {
  return {{"order", r.order}, {"commutation", r.commutation}, {"unitarity", r.unitarity}, {"max", r.max()}};
}

Json to_json(const BoundsReport& r) {
  return {
      {"value", complex_json(r.value)},
      {"norm_minus_a", r.norm_minus_a},
      {"norm_plus_a", r.norm_plus_a},
      {"norm_minus_b", r.norm_minus_b},
      {"norm_plus_b", r.norm_plus_b},
      {"margin_minus_plus", r.margin_minus_plus},
      {"margin_plus_minus", r.margin_plus_minus},
      {"partition_function", complex_json(r.partition_function)},
      {"partition_minus", r.partition_minus},
      {"partition_plus", r.partition_plus},
      {"partition_margin", r.partition_margin},
      {"auxiliary_violation", r.auxiliary_violation},
      {"holds", r.holds()},
  };
}

Json to_json(const ConservationReport& r) {
  return {
      {"trials", r.trials},
      {"nonconserving", r.nonconserving},
      {"max_nonconserving_trace", r.max_nonconserving_trace},
      {"min_conserving_real", r.min_conserving_real},
      {"max_rearrangement_residual", r.max_rearrangement_residual},
      {"symbolic_failures", r.symbolic_failures},
  };
}

Json to_json(const LoopReport& r) {
  Json expectations = Json::array();
  for (const auto& e : r.expectations) expectations.push_back(complex_json(e));
  return {
      {"ground_energy", r.ground_energy},
      {"ground_degeneracy", r.ground_degeneracy},
      {"w_order", r.w_order},
      {"w_order_defect", r.w_order_defect},
      {"expectations", expectations},
      {"nonnegative", r.nonnegative},
  };
}

}  // namespace pfrp
