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

#include <cstdint>
#include <string>
#include <vector>

#include "btlab/polynomial.hpp"

namespace btlab {

// Witt polynomials in x_0..x_{n-1}, y_0..y_{n-1}. Variables are interleaved:
// x_i has index 2i and y_i has index 2i + 1, so S_i does not depend on n.
using WittPoly = RationalPolynomial;

enum class WittLaw { kSum, kProduct, kNegation };

const char* LawSymbol(WittLaw law);  // "S", "P", "I"

bool IsPrime(int64_t n);

// Sum_{i<=l} p^i x_i^(p^(l-i)).
WittPoly GhostPolynomial(int p, int l);

// Ghost polynomial in the x (or y) variables.
WittPoly GhostPolynomial(int p, int l, bool y_block);

// Component polynomials of the Witt law, indices 0..n-1, each in 2n
// variables. Solved level by level from the ghost identities over Q; throws
// NonIntegralCoefficient if any coefficient fails to be an integer.
// Results are memoized per (law, p).
std::vector<WittPoly> WittPolynomials(WittLaw law, int p, int n);

std::vector<WittPoly> SumPolynomials(int p, int n);
std::vector<WittPoly> ProductPolynomials(int p, int n);
std::vector<WittPoly> NegationPolynomials(int p, int n);

// Names for the 2n interleaved variables: x_0, y_0, x_1, y_1, ...
std::vector<std::string> WittVariableNames(int n);

// "S_1 = x_1 + y_1 - x_0*y_0"
std::string RenderWittPolynomial(WittLaw law, int index, const WittPoly& poly, int n);

// Truncated Witt vector over F_p with components in 0..p-1.
struct WittVec {
  int p = 2;
  std::vector<int> components;

  int length() const { return static_cast<int>(components.size()); }
  friend bool operator==(const WittVec&, const WittVec&) = default;
};

WittVec MakeWittVec(int p, std::vector<int> components);
WittVec ZeroWittVec(int p, int n);

WittVec WittAdd(const WittVec& x, const WittVec& y);
WittVec WittMul(const WittVec& x, const WittVec& y);
WittVec WittNeg(const WittVec& x);

// (x_0^p, x_1^p, ...)
WittVec Frobenius(const WittVec& x);
// (0, x_0, ..., x_{n-2}); the top component is dropped.
WittVec Verschiebung(const WittVec& x);
// (0, x_0^p, ..., x_{n-2}^p)
WittVec PMultiple(const WittVec& x);
// (a, 0, ..., 0)
WittVec Teichmuller(int p, int a, int n);

// Image of the integer k under Z -> W_n(F_p), computed by repeated addition of
// the unit.
WittVec WittFromInteger(int p, int n, int64_t k);

struct RingIsoReport {
  bool bijective = false;
  bool additive = false;
  bool multiplicative = false;
  int64_t modulus = 0;  // p^n

  bool pass() const { return bijective && additive && multiplicative; }
};

// Checks k -> k*tau(1) is a ring isomorphism Z/p^n -> W_n(F_p) using full
// addition and multiplication tables. Throws TableTooLarge if p^n > 10^5.
RingIsoReport RingIsoTable(int p, int n);

}  // namespace btlab
