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

#include "btlab/witt.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "btlab/errors.hpp"

namespace btlab {
namespace {

constexpr int kMaxWittLength = kMaxVariables / 2;

int XVar(int i) { return 2 * i; }
int YVar(int i) { return 2 * i + 1; }

void RequirePrime(int p) {
  if (!IsPrime(p)) throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
}

void RequireLength(int n) {
  if (n < 1 || n > kMaxWittLength) {
    throw Error(ErrorKind::kOutOfRange,
                "Witt length " + std::to_string(n) + " outside 1.." + std::to_string(kMaxWittLength));
  }
}

mpz_class PowZ(int base, unsigned exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return out;
}

// A polynomial reduced modulo p as a function on F_p: coefficients in 0..p-1
// and every positive exponent folded into 1..p-1 via a^p = a.
struct ModTerm {
  Exponents exponents{};
  int coeff = 0;
};
using ModPoly = std::vector<ModTerm>;

ModPoly ReduceModP(const WittPoly& poly, int p) {
  std::map<Exponents, int> acc;
  mpz_class residue;
  for (const auto& term : poly.terms()) {
    mpz_fdiv_r_ui(residue.get_mpz_t(), term.coeff.get_num_mpz_t(), static_cast<unsigned long>(p));
    int c = static_cast<int>(residue.get_si());
    if (c == 0) continue;
    Exponents e = term.exponents;
    for (auto& x : e) {
      if (x > 0) x = static_cast<uint16_t>((x - 1) % (p - 1) + 1);
    }
    acc[e] = (acc[e] + c) % p;
  }
  ModPoly out;
  for (const auto& [e, c] : acc) {
    if (c != 0) out.push_back(ModTerm{e, c});
  }
  return out;
}

int EvaluateModP(const ModPoly& poly, const std::vector<int>& values, int p) {
  int64_t total = 0;
  for (const auto& term : poly) {
    int64_t value = term.coeff;
    for (size_t v = 0; v < values.size() && value != 0; ++v) {
      for (uint16_t k = 0; k < term.exponents[v]; ++k) value = value * values[v] % p;
    }
    total = (total + value) % p;
  }
  return static_cast<int>(total);
}

// Memoized solutions per (law, p). `powers[i]` holds Q_i^(p^(L-1-i)) where L
// is the number of solved components, so the next level only raises each to
// the p-th power.
struct LawEntry {
  std::vector<WittPoly> polys;
  std::vector<WittPoly> powers;
  std::shared_ptr<const std::vector<ModPoly>> reduced = std::make_shared<std::vector<ModPoly>>();
};

std::mutex& CacheMutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::pair<WittLaw, int>, LawEntry>& Cache() {
  static std::map<std::pair<WittLaw, int>, LawEntry> cache;
  return cache;
}

WittPoly GhostTarget(WittLaw law, int p, int l) {
  switch (law) {
    case WittLaw::kSum: return GhostPolynomial(p, l, false) + GhostPolynomial(p, l, true);
    case WittLaw::kProduct: return GhostPolynomial(p, l, false) * GhostPolynomial(p, l, true);
    case WittLaw::kNegation: return -GhostPolynomial(p, l, false);
  }
  return {};
}

void ExtendEntry(LawEntry& entry, WittLaw law, int p, int n) {
  auto reduced = std::make_shared<std::vector<ModPoly>>(*entry.reduced);
  for (int l = static_cast<int>(entry.polys.size()); l < n; ++l) {
    for (auto& power : entry.powers) power = power.Pow(static_cast<unsigned>(p));
    WittPoly acc = GhostTarget(law, p, l);
    for (int i = 0; i < l; ++i) {
      acc -= entry.powers[static_cast<size_t>(i)] * mpq_class(PowZ(p, static_cast<unsigned>(i)));
    }
    acc *= mpq_class(mpz_class(1), PowZ(p, static_cast<unsigned>(l)));
    if (!acc.HasIntegerCoefficients()) {
      throw Error(ErrorKind::kNonIntegralCoefficient,
                  std::string(LawSymbol(law)) + "_" + std::to_string(l) + " for p=" + std::to_string(p));
    }
    reduced->push_back(ReduceModP(acc, p));
    entry.powers.push_back(acc);
    entry.polys.push_back(std::move(acc));
  }
  entry.reduced = std::move(reduced);
}

LawEntry& EntryFor(WittLaw law, int p, int n) {
  RequirePrime(p);
  RequireLength(n);
  LawEntry& entry = Cache()[{law, p}];
  if (static_cast<int>(entry.polys.size()) < n) ExtendEntry(entry, law, p, n);
  return entry;
}

std::shared_ptr<const std::vector<ModPoly>> ReducedPolys(WittLaw law, int p, int n) {
  std::lock_guard<std::mutex> lock(CacheMutex());
  return EntryFor(law, p, n).reduced;
}

void CheckComponents(const WittVec& x) {
  RequirePrime(x.p);
  RequireLength(x.length());
  for (int c : x.components) {
    if (c < 0 || c >= x.p) {
      throw Error(ErrorKind::kOutOfRange, "component " + std::to_string(c) + " not in F_" + std::to_string(x.p));
    }
  }
}

void CheckCompatible(const WittVec& x, const WittVec& y) {
  if (x.p != y.p) {
    throw Error(ErrorKind::kPrimeMismatch, "p=" + std::to_string(x.p) + " vs p=" + std::to_string(y.p));
  }
  if (x.length() != y.length()) {
    throw Error(ErrorKind::kLengthMismatch,
                "length " + std::to_string(x.length()) + " vs " + std::to_string(y.length()));
  }
}

WittVec ApplyLaw(WittLaw law, const WittVec& x, const WittVec* y) {
  const int n = x.length();
  auto polys = ReducedPolys(law, x.p, n);
  std::vector<int> values(static_cast<size_t>(2 * n), 0);
  for (int i = 0; i < n; ++i) {
    values[static_cast<size_t>(XVar(i))] = x.components[static_cast<size_t>(i)];
    if (y) values[static_cast<size_t>(YVar(i))] = y->components[static_cast<size_t>(i)];
  }
  WittVec out{x.p, std::vector<int>(static_cast<size_t>(n))};
  for (int k = 0; k < n; ++k) {
    out.components[static_cast<size_t>(k)] = EvaluateModP((*polys)[static_cast<size_t>(k)], values, x.p);
  }
  return out;
}

int PowMod(int a, int e, int p) {
  int64_t r = 1;
  for (int k = 0; k < e; ++k) r = r * a % p;
  return static_cast<int>(r);
}

}  // namespace

const char* LawSymbol(WittLaw law) {
  switch (law) {
    case WittLaw::kSum: return "S";
    case WittLaw::kProduct: return "P";
    case WittLaw::kNegation: return "I";
  }
  return "?";
}

bool IsPrime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

WittPoly GhostPolynomial(int p, int l, bool y_block) {
  RequirePrime(p);
  RequireLength(l + 1);
  WittPoly ghost(2 * (l + 1));
  for (int i = 0; i <= l; ++i) {
    mpz_class degree = PowZ(p, static_cast<unsigned>(l - i));
    if (degree > 65535) throw Error(ErrorKind::kOutOfRange, "ghost degree too large");
    ghost += WittPoly::Monomial(2 * (l + 1), y_block ? YVar(i) : XVar(i), static_cast<int>(degree.get_si()),
                                mpq_class(PowZ(p, static_cast<unsigned>(i))));
  }
  return ghost;
}

WittPoly GhostPolynomial(int p, int l) { return GhostPolynomial(p, l, false); }

std::vector<WittPoly> WittPolynomials(WittLaw law, int p, int n) {
  std::lock_guard<std::mutex> lock(CacheMutex());
  const LawEntry& entry = EntryFor(law, p, n);
  return std::vector<WittPoly>(entry.polys.begin(), entry.polys.begin() + n);
}

std::vector<WittPoly> SumPolynomials(int p, int n) { return WittPolynomials(WittLaw::kSum, p, n); }
std::vector<WittPoly> ProductPolynomials(int p, int n) { return WittPolynomials(WittLaw::kProduct, p, n); }
std::vector<WittPoly> NegationPolynomials(int p, int n) { return WittPolynomials(WittLaw::kNegation, p, n); }

std::vector<std::string> WittVariableNames(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back("x_" + std::to_string(i));
    names.push_back("y_" + std::to_string(i));
  }
  return names;
}

std::string RenderWittPolynomial(WittLaw law, int index, const WittPoly& poly, int n) {
  return std::string(LawSymbol(law)) + "_" + std::to_string(index) + " = " + poly.ToString(WittVariableNames(n));
}

WittVec MakeWittVec(int p, std::vector<int> components) {
  WittVec x{p, std::move(components)};
  CheckComponents(x);
  return x;
}

WittVec ZeroWittVec(int p, int n) { return MakeWittVec(p, std::vector<int>(static_cast<size_t>(n), 0)); }

WittVec WittAdd(const WittVec& x, const WittVec& y) {
  CheckCompatible(x, y);
  CheckComponents(x);
  CheckComponents(y);
  return ApplyLaw(WittLaw::kSum, x, &y);
}

WittVec WittMul(const WittVec& x, const WittVec& y) {
  CheckCompatible(x, y);
  CheckComponents(x);
  CheckComponents(y);
  return ApplyLaw(WittLaw::kProduct, x, &y);
}

WittVec WittNeg(const WittVec& x) {
  CheckComponents(x);
  return ApplyLaw(WittLaw::kNegation, x, nullptr);
}

WittVec Frobenius(const WittVec& x) {
  CheckComponents(x);
  WittVec out = x;
  for (int& c : out.components) c = PowMod(c, x.p, x.p);
  return out;
}

WittVec Verschiebung(const WittVec& x) {
  CheckComponents(x);
  WittVec out{x.p, std::vector<int>(x.components.size(), 0)};
  for (size_t i = 1; i < x.components.size(); ++i) out.components[i] = x.components[i - 1];
  return out;
}

WittVec PMultiple(const WittVec& x) {
  CheckComponents(x);
  WittVec out{x.p, std::vector<int>(x.components.size(), 0)};
  for (size_t i = 1; i < x.components.size(); ++i) out.components[i] = PowMod(x.components[i - 1], x.p, x.p);
  return out;
}

WittVec Teichmuller(int p, int a, int n) {
  std::vector<int> components(static_cast<size_t>(n), 0);
  if (n > 0) components[0] = a;
  return MakeWittVec(p, std::move(components));
}

WittVec WittFromInteger(int p, int n, int64_t k) {
  RequirePrime(p);
  RequireLength(n);
  mpz_class modulus = PowZ(p, static_cast<unsigned>(n));
  if (modulus > 100000) {
    throw Error(ErrorKind::kTableTooLarge, "p^n = " + modulus.get_str() + " exceeds 10^5");
  }
  const int64_t q = modulus.get_si();
  int64_t steps = ((k % q) + q) % q;
  const WittVec one = Teichmuller(p, 1, n);
  WittVec acc = ZeroWittVec(p, n);
  for (int64_t s = 0; s < steps; ++s) acc = WittAdd(acc, one);
  return acc;
}

RingIsoReport RingIsoTable(int p, int n) {
  RequirePrime(p);
  RequireLength(n);
  mpz_class modulus = PowZ(p, static_cast<unsigned>(n));
  if (modulus > 100000) {
    throw Error(ErrorKind::kTableTooLarge, "p^n = " + modulus.get_str() + " exceeds 10^5");
  }
  const int64_t q = modulus.get_si();
  RingIsoReport report;
  report.modulus = q;

  // image[k] = k * tau(1), built by successive additions.
  std::vector<WittVec> image;
  image.reserve(static_cast<size_t>(q));
  const WittVec one = Teichmuller(p, 1, n);
  image.push_back(ZeroWittVec(p, n));
  for (int64_t k = 1; k < q; ++k) image.push_back(WittAdd(image.back(), one));

  auto encode = [p](const WittVec& x) {
    int64_t code = 0;
    for (auto it = x.components.rbegin(); it != x.components.rend(); ++it) code = code * p + *it;
    return code;
  };
  std::vector<bool> hit(static_cast<size_t>(q), false);
  report.bijective = true;
  for (const auto& x : image) {
    int64_t code = encode(x);
    if (hit[static_cast<size_t>(code)]) report.bijective = false;
    hit[static_cast<size_t>(code)] = true;
  }

  report.additive = report.multiplicative = true;
  for (int64_t a = 0; a < q; ++a) {
    for (int64_t b = 0; b < q; ++b) {
      const auto& xa = image[static_cast<size_t>(a)];
      const auto& xb = image[static_cast<size_t>(b)];
      if (WittAdd(xa, xb) != image[static_cast<size_t>((a + b) % q)]) report.additive = false;
      if (WittMul(xa, xb) != image[static_cast<size_t>((a * b) % q)]) report.multiplicative = false;
    }
  }
  return report;
}

}  // namespace btlab
