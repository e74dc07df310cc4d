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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace btlab {

inline constexpr int kMaxVariables = 16;

// Dense exponent vector over at most kMaxVariables indeterminates.
using Exponents = std::array<uint16_t, kMaxVariables>;

struct ExponentsHash {
  size_t operator()(const Exponents& e) const noexcept;
};

int TotalDegree(const Exponents& e);

// Canonical term order: ascending total degree, then lexicographically
// descending exponent vectors (lower variable indices outrank higher ones).
bool MonomialBefore(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in canonical order with no zero coefficients.
class RationalPolynomial {
 public:
  struct Term {
    Exponents exponents{};
    mpq_class coeff;
  };

  RationalPolynomial() = default;
  explicit RationalPolynomial(int variable_count) : variable_count_(variable_count) {}

  static RationalPolynomial Constant(int variable_count, const mpq_class& value);
  // coeff * var^power
  static RationalPolynomial Monomial(int variable_count, int var, int power, const mpq_class& coeff = 1);

  int variable_count() const { return variable_count_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool HasIntegerCoefficients() const;
  // Largest |numerator| bit length over all coefficients.
  size_t MaxCoefficientBits() const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const mpq_class& scalar);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const mpq_class& s) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  RationalPolynomial operator-() const;

  RationalPolynomial Pow(unsigned exponent) const;

  // Coefficient of a monomial, zero when absent.
  mpq_class Coefficient(const Exponents& exponents) const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

  // Renders terms in canonical order, naming variable v via names[v].
  std::string ToString(const std::vector<std::string>& names) const;

 private:
  void Canonicalize();

  int variable_count_ = 0;
  std::vector<Term> terms_;
};

}  // namespace btlab
