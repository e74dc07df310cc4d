// Copyright 2026 The btlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "btlab/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "btlab/errors.hpp"

namespace btlab {
namespace {

Exponents AddExponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (int v = 0; v < kMaxVariables; ++v) {
    unsigned sum = unsigned{a[v]} + unsigned{b[v]};
    if (sum > std::numeric_limits<uint16_t>::max()) {
      throw Error(ErrorKind::kOutOfRange, "exponent overflow in polynomial product");
    }
    out[v] = static_cast<uint16_t>(sum);
  }
  return out;
}

}  // namespace

size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
  uint64_t words[sizeof(Exponents) / sizeof(uint64_t)];
  std::memcpy(words, e.data(), sizeof(Exponents));
  uint64_t h = 0x9e3779b97f4a7c15ull;
  for (uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return static_cast<size_t>(h ^ (h >> 31));
}

int TotalDegree(const Exponents& e) {
  int total = 0;
  for (uint16_t x : e) total += x;
  return total;
}

bool MonomialBefore(const Exponents& a, const Exponents& b) {
  int da = TotalDegree(a), db = TotalDegree(b);
  if (da != db) return da < db;
  return a > b;
}

RationalPolynomial RationalPolynomial::Constant(int variable_count, const mpq_class& value) {
  RationalPolynomial poly(variable_count);
  if (value != 0) {
    poly.terms_.push_back(Term{Exponents{}, value});
    poly.terms_.back().coeff.canonicalize();
  }
  return poly;
}

RationalPolynomial RationalPolynomial::Monomial(int variable_count, int var, int power, const mpq_class& coeff) {
  if (var < 0 || var >= variable_count || variable_count > kMaxVariables) {
    throw Error(ErrorKind::kOutOfRange, "variable index " + std::to_string(var));
  }
  RationalPolynomial poly(variable_count);
  if (coeff == 0) return poly;
  Term term;
  term.exponents[static_cast<size_t>(var)] = static_cast<uint16_t>(power);
  term.coeff = coeff;
  term.coeff.canonicalize();
  poly.terms_.push_back(std::move(term));
  return poly;
}

bool RationalPolynomial::HasIntegerCoefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff.get_den() == 1; });
}

size_t RationalPolynomial::MaxCoefficientBits() const {
  size_t bits = 0;
  for (const auto& t : terms_) bits = std::max(bits, mpz_sizeinbase(t.coeff.get_num_mpz_t(), 2));
  return bits;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  variable_count_ = std::max(variable_count_, other.variable_count_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() ||
        (i < terms_.size() && MonomialBefore(terms_[i].exponents, other.terms_[j].exponents))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || MonomialBefore(other.terms_[j].exponents, terms_[i].exponents)) {
      merged.push_back(other.terms_[j++]);
    } else {
      Term t = std::move(terms_[i++]);
      t.coeff += other.terms_[j++].coeff;
      if (t.coeff != 0) merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) { return *this += -other; }

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  mpq_class factor = scalar;
  factor.canonicalize();
  for (auto& t : terms_) t.coeff *= factor;
  return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out(std::max(a.variable_count_, b.variable_count_));
  if (a.is_zero() || b.is_zero()) return out;
  std::unordered_map<Exponents, mpq_class, ExponentsHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 4 + 16);
  mpq_class product;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(product.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      acc[AddExponents(ta.exponents, tb.exponents)] += product;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [exps, coeff] : acc) {
    if (coeff != 0) out.terms_.push_back(RationalPolynomial::Term{exps, std::move(coeff)});
  }
  out.Canonicalize();
  return out;
}

RationalPolynomial RationalPolynomial::Pow(unsigned exponent) const {
  RationalPolynomial result = Constant(variable_count_, 1);
  RationalPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

mpq_class RationalPolynomial::Coefficient(const Exponents& exponents) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                             [](const Term& t, const Exponents& e) { return MonomialBefore(t.exponents, e); });
  if (it != terms_.end() && it->exponents == exponents) return it->coeff;
  return 0;
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].exponents != b.terms_[k].exponents || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  }
  return true;
}

std::string RationalPolynomial::ToString(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class magnitude = abs(t.coeff);
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    bool any_var = false;
    for (int v = 0; v < variable_count_; ++v) {
      uint16_t e = t.exponents[static_cast<size_t>(v)];
      if (e == 0) continue;
      if (any_var) mono << '*';
      mono << names.at(static_cast<size_t>(v));
      if (e > 1) mono << '^' << e;
      any_var = true;
    }
    if (!any_var) {
      out << magnitude.get_str();
    } else if (magnitude == 1) {
      out << mono.str();
    } else {
      out << magnitude.get_str() << '*' << mono.str();
    }
  }
  return out.str();
}

void RationalPolynomial::Canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return MonomialBefore(a.exponents, b.exponents); });
}

}  // namespace btlab
