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

#include "pfrp/exponents.hpp"

#include <sstream>

#include "pfrp/errors.hpp"

namespace pfrp {

ExponentVector::ExponentVector(int order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ < 2) throw DomainError("parafermion order must be >= 2, got " + std::to_string(order_));
  const auto sites = entries_.size();
  if (sites < 2 || sites % 2 != 0) {
    throw DomainError("number of sites must be even and >= 2, got " + std::to_string(sites));
  }
  for (std::size_t j = 0; j < sites; ++j) {
    if (entries_[j] < 0 || entries_[j] >= order_) {
      throw DomainError("exponent at site " + std::to_string(j + 1) + " is " +
                        std::to_string(entries_[j]) + ", expected 0.." +
                        std::to_string(order_ - 1));
    }
  }
}

ExponentVector ExponentVector::zero(int order, int sites) {
  if (sites < 0) throw DomainError("negative site count");
  return ExponentVector(order, std::vector<int>(static_cast<std::size_t>(sites), 0));
}

ExponentVector ExponentVector::unit(int order, int sites, int site, int power) {
  if (site < 1 || site > sites) {
    throw DomainError("site " + std::to_string(site) + " outside 1.." + std::to_string(sites));
  }
  std::vector<int> e(static_cast<std::size_t>(sites), 0);
  if (order >= 2) e[static_cast<std::size_t>(site - 1)] = ((power % order) + order) % order;
  return ExponentVector(order, std::move(e));
}

int ExponentVector::at(int site) const {
  if (site < 1 || site > sites()) {
    throw DomainError("site " + std::to_string(site) + " outside 1.." + std::to_string(sites()));
  }
  return entries_[static_cast<std::size_t>(site - 1)];
}

bool ExponentVector::is_zero() const {
  for (int e : entries_)
    if (e != 0) return false;
  return true;
}

bool ExponentVector::supported_on(Half half) const {
  const std::size_t mid = entries_.size() / 2;
  const std::size_t lo = half == Half::minus ? mid : 0;
  const std::size_t hi = half == Half::minus ? entries_.size() : mid;
  for (std::size_t j = lo; j < hi; ++j)
    if (entries_[j] != 0) return false;
  return true;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < entries_.size(); ++j) os << (j ? "," : "") << entries_[j];
  os << ')';
  return os.str();
}

void require_compatible(const ExponentVector& a, const ExponentVector& b) {
  if (a.order() != b.order() || a.sites() != b.sites()) {
    throw DimensionError("exponent vectors disagree: n=" + std::to_string(a.order()) +
                         ", L=" + std::to_string(a.sites()) + " vs n=" +
                         std::to_string(b.order()) + ", L=" + std::to_string(b.sites()));
  }
}

int degree(const ExponentVector& v) {
  int d = 0;
  for (int e : v.entries()) d += e;
  return d;
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  require_compatible(a, b);
  const int n = a.order();
  std::vector<int> e(a.entries().begin(), a.entries().end());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = (e[j] + b.entries()[j]) % n;
  return ExponentVector(n, std::move(e));
}

std::int64_t circ(const ExponentVector& a, const ExponentVector& b) {
  require_compatible(a, b);
  // Running prefix sum of b over indices strictly below j.
  std::int64_t total = 0;
  std::int64_t prefix = 0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t j = 0; j < ea.size(); ++j) {
    total += static_cast<std::int64_t>(ea[j]) * prefix;
    prefix += eb[j];
  }
  return total;
}

std::int64_t wedge(const ExponentVector& a, const ExponentVector& b) {
  return circ(a, b) - circ(b, a);
}

ExponentVector complement(const ExponentVector& v) {
  const int n = v.order();
  std::vector<int> e(v.entries().begin(), v.entries().end());
  for (int& x : e) x = (n - x) % n;
  return ExponentVector(n, std::move(e));
}

ExponentVector reflect_vector(const ExponentVector& v) {
  std::vector<int> e(v.entries().rbegin(), v.entries().rend());
  return ExponentVector(v.order(), std::move(e));
}

std::vector<ExponentVector> enumerate_half(int order, int sites, Half half) {
  const int half_sites = sites / 2;
  const int offset = half == Half::minus ? 0 : half_sites;
  std::vector<ExponentVector> out;
  std::vector<int> digits(static_cast<std::size_t>(half_sites), 0);
  while (true) {
    std::vector<int> e(static_cast<std::size_t>(sites), 0);
    for (int j = 0; j < half_sites; ++j) e[static_cast<std::size_t>(offset + j)] = digits[static_cast<std::size_t>(j)];
    out.emplace_back(order, std::move(e));
    int pos = half_sites - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == order) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace pfrp
