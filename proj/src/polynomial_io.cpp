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

#include "pfrp/polynomial_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "pfrp/errors.hpp"

namespace pfrp {

namespace {

// Shared by the writer and the reader so that r*z^k round-trips exactly.
Complex scaled_zeta(double r, int order, int k) {
  const Complex z = zeta_value(order, k);
  return {r * z.real(), r * z.imag()};
}

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_coefficient(Complex c, int order) {
  for (int k = 0; k < 2 * order; ++k) {
    const Complex z = zeta_value(order, k);
    const double r = std::round((c * std::conj(z)).real());
    if (r == 0.0 || std::abs(r) > 9.0e15) continue;
    if (scaled_zeta(r, order, k) == c) {
      return k == 0 ? shortest(r) : shortest(r) + "*z^" + std::to_string(k);
    }
  }
  return "(" + shortest(c.real()) + "," + shortest(c.imag()) + ")";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw DomainError("polynomial text line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view s, std::size_t line) {
  s = trim(s);
  double value = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    fail(line, "cannot parse number '" + std::string(s) + "'");
  }
  if (!std::isfinite(value)) fail(line, "non-finite number '" + std::string(s) + "'");
  return value;
}

long parse_int(std::string_view s, std::size_t line) {
  s = trim(s);
  long value = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    fail(line, "cannot parse integer '" + std::string(s) + "'");
  }
  return value;
}

Complex parse_coefficient(std::string_view s, int order, std::size_t line) {
  s = trim(s);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') fail(line, "unterminated complex coefficient");
    const auto inner = s.substr(1, s.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) fail(line, "complex coefficient needs (re,im)");
    return {parse_double(inner.substr(0, comma), line), parse_double(inner.substr(comma + 1), line)};
  }
  const auto star = s.find("*z^");
  if (star == std::string_view::npos) return {parse_double(s, line), 0.0};
  const double r = parse_double(s.substr(0, star), line);
  const long k = parse_int(s.substr(star + 3), line);
  if (k < 0 || k >= 2 * order) fail(line, "zeta exponent out of range");
  return scaled_zeta(r, order, static_cast<int>(k));
}

}  // namespace

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [key, value] : p.terms()) {
    os << format_coefficient(value, p.order()) << " *";
    if (key.is_zero()) {
      os << " 1";
    } else {
      for (int site = 1; site <= key.sites(); ++site) {
        const int e = key.at(site);
        if (e == 0) continue;
        os << " c" << site;
        if (e != 1) os << '^' << e;
      }
    }
    os << '\n';
  }
  return os.str();
}

Polynomial parse_polynomial(std::string_view text, int order, int sites) {
  Polynomial out(order, sites);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line == "0") continue;

    // The coefficient may itself contain "*z^", so split at the " * " separator.
    const auto sep = line.rfind(" *");
    if (sep == std::string_view::npos) fail(line_no, "expected 'coeff * monomial'");
    const Complex coeff = parse_coefficient(line.substr(0, sep), order, line_no);
    std::string_view rest = trim(line.substr(sep + 2));

    std::vector<int> exps(static_cast<std::size_t>(sites), 0);
    if (rest != "1") {
      std::istringstream tokens{std::string(rest)};
      std::string tok;
      int last_site = 0;
      while (tokens >> tok) {
        if (tok.size() < 2 || tok[0] != 'c') fail(line_no, "bad factor '" + tok + "'");
        const auto caret = tok.find('^');
        const long site = parse_int(std::string_view(tok).substr(1, caret == std::string::npos ? std::string::npos : caret - 1), line_no);
        const long power = caret == std::string::npos ? 1 : parse_int(std::string_view(tok).substr(caret + 1), line_no);
        if (site < 1 || site > sites) fail(line_no, "site " + std::to_string(site) + " out of range");
        if (site <= last_site) fail(line_no, "factors must appear in ascending site order");
        if (power < 1 || power >= order) fail(line_no, "exponent " + std::to_string(power) + " out of range");
        exps[static_cast<std::size_t>(site - 1)] = static_cast<int>(power);
        last_site = static_cast<int>(site);
      }
    }
    out.add_term(ExponentVector(order, std::move(exps)), coeff);
  }
  return out;
}

}  // namespace pfrp
