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

#include "pfrp/spec_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pfrp {

namespace {

using Json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail_at(const std::string& pointer, const std::string& what) {
  throw SpecParseError((pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const Json& require(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) fail_at(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(pointer, "missing field '" + key + "'");
  return *it;
}

int read_int(const Json& v, const std::string& pointer) {
  if (!v.is_number_integer()) fail_at(pointer, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < -1000000 || x > 1000000) fail_at(pointer, "integer out of range");
  return static_cast<int>(x);
}

double read_real(const Json& v, const std::string& pointer) {
  if (!v.is_number()) fail_at(pointer, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail_at(pointer, "number is not finite");
  return x;
}

ExponentVector read_exponents(const Json& v, int order, int sites, const std::string& pointer) {
  if (!v.is_array()) fail_at(pointer, "expected an array of exponents");
  if (static_cast<int>(v.size()) != sites) {
    fail_at(pointer, "expected " + std::to_string(sites) + " exponents, got " + std::to_string(v.size()));
  }
  std::vector<int> e;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = pointer + "/" + std::to_string(i);
    const int x = read_int(v[i], at);
    if (x < 0 || x >= order) {
      fail_at(at, "exponent " + std::to_string(x) + " outside 0.." + std::to_string(order - 1));
    }
    e.push_back(x);
  }
  return ExponentVector(order, std::move(e));
}

Polynomial read_terms(const Json& v, int order, int sites, const std::string& pointer) {
  if (!v.is_array()) fail_at(pointer, "expected an array of terms");
  Polynomial p(order, sites);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = pointer + "/" + std::to_string(i);
    const Json& coeff = require(v[i], "coefficient", at);
    Complex c;
    if (coeff.is_array()) {
      if (coeff.size() != 2) fail_at(at + "/coefficient", "expected [re, im]");
      c = {read_real(coeff[0], at + "/coefficient/0"), read_real(coeff[1], at + "/coefficient/1")};
    } else {
      c = {read_real(coeff, at + "/coefficient"), 0.0};
    }
    p.add_term(read_exponents(require(v[i], "exponents", at), order, sites, at + "/exponents"), c);
  }
  return p;
}

void check_shape(int order, int sites, const std::string& pointer) {
  if (order < 2) fail_at(pointer, "n must be >= 2");
  if (sites < 2 || sites % 2 != 0) fail_at(pointer, "L must be even and >= 2");
}

}  // namespace

SpecFile parse_spec(std::string_view text, const SpecOverrides& overrides) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw SpecParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what());
  } catch (const Json::out_of_range& e) {
    // Number overflow: locate the first token that overflows a double.
    std::string message = e.what();
    std::size_t byte = std::string_view::npos;
    const auto quote = message.find('\'');
    if (quote != std::string::npos) {
      const auto end = message.find('\'', quote + 1);
      if (end != std::string::npos) byte = text.find(message.substr(quote + 1, end - quote - 1));
    }
    if (byte == std::string_view::npos) throw SpecParseError(message);
    const auto [line, column] = line_column(text, byte);
    throw SpecParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message);
  }

  SpecFile spec;
  try {
    if (!doc.is_object()) fail_at("", "spec file must be a JSON object");
    if (doc.contains("baxter")) {
      const Json& b = doc["baxter"];
      spec.order = overrides.order.value_or(read_int(require(b, "n", "/baxter"), "/baxter/n"));
      spec.sites = overrides.sites.value_or(read_int(require(b, "L", "/baxter"), "/baxter/L"));
      check_shape(spec.order, spec.sites, "/baxter");
      const Json& t = require(b, "t", "/baxter");
      if (!t.is_array()) fail_at("/baxter/t", "expected an array of couplings");
      std::vector<double> ts;
      for (std::size_t i = 0; i < t.size(); ++i) ts.push_back(read_real(t[i], "/baxter/t/" + std::to_string(i)));
      if (static_cast<int>(ts.size()) != spec.sites - 1) {
        fail_at("/baxter/t", "expected " + std::to_string(spec.sites - 1) + " couplings, got " +
                                 std::to_string(ts.size()));
      }
      spec.baxter_t = std::move(ts);
      return spec;
    }

    spec.order = overrides.order.value_or(read_int(require(doc, "n", ""), "/n"));
    spec.sites = overrides.sites.value_or(read_int(require(doc, "L", ""), "/L"));
    check_shape(spec.order, spec.sites, "");
    spec.h_minus = doc.contains("h_minus") ? read_terms(doc["h_minus"], spec.order, spec.sites, "/h_minus")
                                           : Polynomial(spec.order, spec.sites);
    if (doc.contains("h_plus")) spec.h_plus = read_terms(doc["h_plus"], spec.order, spec.sites, "/h_plus");
    if (doc.contains("couplings")) {
      const Json& cs = doc["couplings"];
      if (!cs.is_array()) fail_at("/couplings", "expected an array");
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string at = "/couplings/" + std::to_string(i);
        const ExponentVector key = read_exponents(require(cs[i], "exponents", at), spec.order, spec.sites, at + "/exponents");
        const double j = read_real(require(cs[i], "J", at), at + "/J");
        if (!key.supported_on(Half::minus)) fail_at(at + "/exponents", "coupling key must lie on sites 1..L/2");
        if (key.is_zero()) fail_at(at + "/exponents", "coupling key must have positive degree");
        if (!spec.couplings.emplace(key, j).second) fail_at(at, "duplicate coupling key " + key.to_string());
      }
    }
  } catch (const SpecParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw SpecParseError(e.what());
  }
  return spec;
}

SpecFile load_spec(const std::filesystem::path& path, const SpecOverrides& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open spec file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec(buf.str(), overrides);
  } catch (const SpecParseError& e) {
    throw SpecParseError(path.string() + ": " + e.what());
  }
}

HamiltonianSpec to_hamiltonian(const SpecFile& spec) {
  if (spec.baxter_t) return baxter(spec.order, spec.sites, *spec.baxter_t);
  const Polynomial h_minus = spec.h_minus.value_or(Polynomial(spec.order, spec.sites));
  HamiltonianSpec h = assemble(h_minus, spec.couplings);
  if (spec.h_plus && !approx_equal(*spec.h_plus, h.h_plus())) {
    throw DomainError("h_plus differs from theta(h_minus); use the bounds command for split Hamiltonians");
  }
  return h;
}

SplitHamiltonian to_split(const SpecFile& spec) {
  if (spec.baxter_t) return baxter_split(spec.order, spec.sites, *spec.baxter_t);
  const Polynomial h_minus = spec.h_minus.value_or(Polynomial(spec.order, spec.sites));
  validate_coupling_keys(spec.couplings, spec.order, spec.sites);
  return {h_minus, spec.couplings, spec.h_plus.value_or(reflect(h_minus))};
}

}  // namespace pfrp
