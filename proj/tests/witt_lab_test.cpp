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

#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"

#include "btlab/errors.hpp"
#include "btlab/polynomial.hpp"
#include "btlab/witt.hpp"

namespace btlab {
namespace {

int X(int i) { return 2 * i; }
int Y(int i) { return 2 * i + 1; }

WittPoly Mono(int nvars, std::initializer_list<std::pair<int, int>> powers, const mpq_class& coeff) {
  WittPoly out = WittPoly::Constant(nvars, coeff);
  for (auto [var, power] : powers) out = out * WittPoly::Monomial(nvars, var, power);
  return out;
}

long long IntPow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Integer of Z/p^n represented by a Witt vector over F_p: sum of p^i times
// the Teichmueller representative of x_i, which is x_i^(p^(n-1)) mod p^n.
long long ToInteger(const WittVec& x) {
  const int n = x.length();
  const long long q = IntPow(x.p, n);
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    long long t = 1;
    const long long e = IntPow(x.p, n - 1);
    for (long long k = 0; k < e; ++k) t = t * x.components[static_cast<size_t>(i)] % q;
    total = (total + IntPow(x.p, i) * t) % q;
  }
  return total;
}

std::vector<WittVec> AllVectors(int p, int n) {
  std::vector<WittVec> out;
  std::vector<int> c(static_cast<size_t>(n), 0);
  while (true) {
    out.push_back(MakeWittVec(p, c));
    int k = 0;
    while (k < n && ++c[static_cast<size_t>(k)] == p) c[static_cast<size_t>(k++)] = 0;
    if (k == n) break;
  }
  return out;
}

WittVec RandomVec(std::mt19937_64& rng, int p, int n) {
  std::vector<int> c(static_cast<size_t>(n));
  for (int& v : c) v = static_cast<int>(rng() % static_cast<uint64_t>(p));
  return MakeWittVec(p, c);
}

const std::vector<std::pair<int, int>> kSmallRings = {{2, 3}, {3, 2}, {5, 2}};

TEST(RationalPolynomial, ArithmeticAndRendering) {
  WittPoly a = WittPoly::Monomial(2, 0, 1) + WittPoly::Monomial(2, 1, 1);
  WittPoly sq = a.Pow(2);
  EXPECT_EQ(sq.ToString({"x", "y"}), "x^2 + 2*x*y + y^2");
  EXPECT_EQ((sq - sq).is_zero(), true);
  EXPECT_EQ((a * mpq_class(1, 2)).ToString({"x", "y"}), "1/2*x + 1/2*y");
  EXPECT_FALSE((a * mpq_class(1, 2)).HasIntegerCoefficients());
  EXPECT_TRUE(sq.HasIntegerCoefficients());
  EXPECT_EQ((-a).ToString({"x", "y"}), "-x - y");
  EXPECT_EQ(WittPoly::Constant(2, 0).ToString({"x", "y"}), "0");
  Exponents e{};
  e[0] = 1;
  e[1] = 1;
  EXPECT_EQ(sq.Coefficient(e), 2);
}

TEST(GhostPolynomial, Examples) {
  EXPECT_EQ(GhostPolynomial(2, 0), WittPoly::Monomial(2, X(0), 1));
  EXPECT_EQ(GhostPolynomial(2, 1), WittPoly::Monomial(4, X(0), 2) + WittPoly::Monomial(4, X(1), 1, 2));
  EXPECT_EQ(GhostPolynomial(3, 2), WittPoly::Monomial(6, X(0), 9) + WittPoly::Monomial(6, X(1), 3, 3) +
                                       WittPoly::Monomial(6, X(2), 1, 9));
}

TEST(WittPolynomials, ClosedFormsLowDegree) {
  for (int p : {2, 3, 5}) {
    auto s = SumPolynomials(p, 2);
    auto pr = ProductPolynomials(p, 2);
    EXPECT_EQ(s[0], Mono(4, {{X(0), 1}}, 1) + Mono(4, {{Y(0), 1}}, 1));
    WittPoly s1 = Mono(4, {{X(1), 1}}, 1) + Mono(4, {{Y(1), 1}}, 1);
    mpz_class binom = 1;
    for (int i = 1; i <= p - 1; ++i) {
      binom = binom * (p - i + 1) / i;
      mpq_class coeff(binom, p);
      coeff.canonicalize();
      s1 -= Mono(4, {{X(0), i}, {Y(0), p - i}}, coeff);
    }
    EXPECT_EQ(s[1], s1) << "p=" << p;
    EXPECT_EQ(pr[0], Mono(4, {{X(0), 1}, {Y(0), 1}}, 1));
    WittPoly p1 = Mono(4, {{Y(0), p}, {X(1), 1}}, 1) + Mono(4, {{Y(1), 1}, {X(0), p}}, 1) +
                  Mono(4, {{X(1), 1}, {Y(1), 1}}, p);
    EXPECT_EQ(pr[1], p1) << "p=" << p;
  }
}

TEST(WittPolynomials, RenderedSumForTwo) {
  auto s = SumPolynomials(2, 2);
  EXPECT_EQ(RenderWittPolynomial(WittLaw::kSum, 1, s[1], 2), "S_1 = x_1 + y_1 - x_0*y_0");
}

TEST(WittPolynomials, NegationLevelZero) {
  for (int p : {2, 3, 5, 7}) {
    EXPECT_EQ(NegationPolynomials(p, 1)[0], Mono(2, {{X(0), 1}}, -1));
  }
  // Over F_2 the sign disappears: I_0 reduces to x_0.
  EXPECT_EQ(WittNeg(MakeWittVec(2, {1})), MakeWittVec(2, {1}));
}

TEST(WittPolynomials, GhostCompatibility) {
  for (int p : {2, 3, 5}) {
    const int n = p == 5 ? 3 : 4;
    auto s = SumPolynomials(p, n);
    auto pr = ProductPolynomials(p, n);
    auto neg = NegationPolynomials(p, n);
    for (int l = 0; l < n; ++l) {
      WittPoly ghost_s(2 * n), ghost_p(2 * n), ghost_i(2 * n);
      for (int i = 0; i <= l; ++i) {
        const unsigned e = static_cast<unsigned>(IntPow(p, l - i));
        const mpq_class w(static_cast<long>(IntPow(p, i)));
        ghost_s += s[static_cast<size_t>(i)].Pow(e) * w;
        ghost_p += pr[static_cast<size_t>(i)].Pow(e) * w;
        ghost_i += neg[static_cast<size_t>(i)].Pow(e) * w;
      }
      WittPoly wx = GhostPolynomial(p, l, false), wy = GhostPolynomial(p, l, true);
      EXPECT_EQ(ghost_s, wx + wy) << "p=" << p << " l=" << l;
      EXPECT_EQ(ghost_p, wx * wy) << "p=" << p << " l=" << l;
      EXPECT_EQ(ghost_i, -wx) << "p=" << p << " l=" << l;
    }
  }
}

TEST(WittPolynomials, IntegralThroughLengthFour) {
  for (int p : {2, 3, 5}) {
    for (WittLaw law : {WittLaw::kSum, WittLaw::kProduct, WittLaw::kNegation}) {
      for (const auto& poly : WittPolynomials(law, p, 4)) EXPECT_TRUE(poly.HasIntegerCoefficients());
    }
  }
}

TEST(WittPolynomials, MatchesGoldenFiles) {
  struct Case {
    int p;
    int n;
    const char* file;
  };
  for (Case c : {Case{2, 3, "witt_p2_len3.txt"}, Case{3, 3, "witt_p3_len3.txt"}, Case{5, 2, "witt_p5_len2.txt"}}) {
    std::ifstream in(std::string(BTLAB_GOLDEN_DIR) + "/" + c.file, std::ios::binary);
    ASSERT_TRUE(in) << c.file;
    std::stringstream golden;
    golden << in.rdbuf();
    std::string rendered;
    for (WittLaw law : {WittLaw::kSum, WittLaw::kProduct, WittLaw::kNegation}) {
      auto polys = WittPolynomials(law, c.p, c.n);
      for (int i = 0; i < c.n; ++i) {
        rendered += RenderWittPolynomial(law, i, polys[static_cast<size_t>(i)], c.n) + "\n";
      }
    }
    EXPECT_EQ(rendered, golden.str()) << c.file;
  }
}

TEST(WittPolynomials, Errors) {
  EXPECT_THROW(SumPolynomials(4, 2), Error);
  EXPECT_THROW(SumPolynomials(2, 0), Error);
  try {
    ProductPolynomials(9, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotPrime);
  }
}

TEST(WittArithmetic, ProductEvaluationInZ4) {
  // 3 * 1 = 3 in Z/4; 3 = (1,1) and 1 = (1,0).
  EXPECT_EQ(WittMul(MakeWittVec(2, {1, 1}), MakeWittVec(2, {1, 0})), MakeWittVec(2, {1, 1}));
  EXPECT_EQ(WittAdd(MakeWittVec(2, {1, 0, 0}), MakeWittVec(2, {1, 0, 0})), MakeWittVec(2, {0, 1, 0}));
}

TEST(WittArithmetic, AgreesWithTeichmuellerExpansion) {
  for (auto [p, n] : kSmallRings) {
    const long long q = IntPow(p, n);
    auto all = AllVectors(p, n);
    for (const auto& x : all) {
      EXPECT_EQ(ToInteger(WittNeg(x)), (q - ToInteger(x)) % q);
      for (const auto& y : all) {
        EXPECT_EQ(ToInteger(WittAdd(x, y)), (ToInteger(x) + ToInteger(y)) % q);
        EXPECT_EQ(ToInteger(WittMul(x, y)), ToInteger(x) * ToInteger(y) % q);
      }
    }
  }
}

TEST(WittArithmetic, IdentitiesAndInverse) {
  std::mt19937_64 rng(3);
  for (auto [p, n] : kSmallRings) {
    WittVec zero = ZeroWittVec(p, n), one = Teichmuller(p, 1, n);
    for (int trial = 0; trial < 100; ++trial) {
      WittVec x = RandomVec(rng, p, n);
      EXPECT_EQ(WittAdd(x, zero), x);
      EXPECT_EQ(WittMul(x, one), x);
      EXPECT_EQ(WittAdd(x, WittNeg(x)), zero);
    }
  }
}

TEST(WittArithmetic, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(4);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    for (int trial = 0; trial < 200; ++trial) {
      WittVec a = RandomVec(rng, p, n), b = RandomVec(rng, p, n), c = RandomVec(rng, p, n);
      EXPECT_EQ(WittAdd(a, b), WittAdd(b, a));
      EXPECT_EQ(WittMul(a, b), WittMul(b, a));
      EXPECT_EQ(WittAdd(WittAdd(a, b), c), WittAdd(a, WittAdd(b, c)));
      EXPECT_EQ(WittMul(WittMul(a, b), c), WittMul(a, WittMul(b, c)));
      EXPECT_EQ(WittMul(a, WittAdd(b, c)), WittAdd(WittMul(a, b), WittMul(a, c)));
    }
  }
}

TEST(WittOperators, Examples) {
  EXPECT_EQ(Frobenius(MakeWittVec(3, {2, 1})), MakeWittVec(3, {2, 1}));
  EXPECT_EQ(Verschiebung(MakeWittVec(2, {1, 1, 0})), MakeWittVec(2, {0, 1, 1}));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) EXPECT_EQ(PMultiple(MakeWittVec(2, {a, b})), MakeWittVec(2, {0, a}));
  }
}

TEST(WittOperators, FrobeniusVerschiebungRelations) {
  std::mt19937_64 rng(5);
  for (auto [p, n] : kSmallRings) {
    for (int trial = 0; trial < 200; ++trial) {
      WittVec x = RandomVec(rng, p, n), y = RandomVec(rng, p, n);
      EXPECT_EQ(Frobenius(Verschiebung(x)), PMultiple(x));
      EXPECT_EQ(Verschiebung(Frobenius(x)), PMultiple(x));
      EXPECT_EQ(WittMul(x, Verschiebung(y)), Verschiebung(WittMul(Frobenius(x), y)));
      EXPECT_EQ(Frobenius(WittAdd(x, y)), WittAdd(Frobenius(x), Frobenius(y)));
      EXPECT_EQ(Frobenius(WittMul(x, y)), WittMul(Frobenius(x), Frobenius(y)));
      WittVec sum = ZeroWittVec(p, n);
      for (int k = 0; k < p; ++k) sum = WittAdd(sum, x);
      EXPECT_EQ(PMultiple(x), sum);
    }
  }
}

TEST(Teichmuller, Multiplicative) {
  EXPECT_EQ(Teichmuller(5, 0, 2), ZeroWittVec(5, 2));
  EXPECT_EQ(Teichmuller(5, 1, 2), MakeWittVec(5, {1, 0}));
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      EXPECT_EQ(WittMul(Teichmuller(5, a, 2), Teichmuller(5, b, 2)), Teichmuller(5, a * b % 5, 2));
    }
  }
}

TEST(WittFromInteger, MatchesExpansion) {
  for (auto [p, n] : kSmallRings) {
    const long long q = IntPow(p, n);
    for (long long k = 0; k < q; ++k) EXPECT_EQ(ToInteger(WittFromInteger(p, n, k)), k);
  }
}

TEST(RingIsoTable, SmallRings) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {5, 1}}) {
    RingIsoReport r = RingIsoTable(p, n);
    EXPECT_TRUE(r.pass()) << p << "^" << n;
    EXPECT_EQ(r.modulus, IntPow(p, n));
  }
}

TEST(RingIsoTable, Errors) {
  try {
    RingIsoTable(7, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTableTooLarge);
  }
  try {
    RingIsoTable(6, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotPrime);
  }
}

TEST(WittVec, MismatchErrors) {
  try {
    WittAdd(MakeWittVec(2, {1, 0}), MakeWittVec(2, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLengthMismatch);
  }
  try {
    WittMul(MakeWittVec(2, {1}), MakeWittVec(3, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrimeMismatch);
  }
  EXPECT_THROW(MakeWittVec(3, {3}), Error);
}

}  // namespace
}  // namespace btlab
