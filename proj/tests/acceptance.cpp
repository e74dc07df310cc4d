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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "btlab/gamma_graph.hpp"
#include "btlab/invariants.hpp"
#include "btlab/kraft.hpp"
#include "btlab/orbits.hpp"
#include "btlab/permutation.hpp"
#include "btlab/sweep.hpp"
#include "btlab/witt.hpp"

namespace btlab {
namespace {

// Collects failures for one criterion; the first few are printed.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++count_;
  }
  bool ok() const { return count_ == 0; }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
  int count_ = 0;
};

std::string Join(const std::vector<int>& v) {
  std::string out = "(";
  for (size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

std::string PointList(const ProductOrbit& orbit) {
  std::string out = "(";
  for (size_t k = 0; k < orbit.size(); ++k) {
    out += (k ? "," : "") + std::string("(") + std::to_string(orbit.points[k].i) + "," +
           std::to_string(orbit.points[k].j) + ")";
  }
  return out + ")";
}

void SquareExample(Check& check) {
  auto r = ComputeInvariants(ParsePermutation("(1 2 3 4)"), Signature{2, 2}, 4);
  check.Expect(r.gamma == std::vector<int>{3, 4, 4, 4}, "gamma=" + Join(r.gamma));
  check.Expect(r.c_exponent == std::vector<int>{4, 16, 32, 48}, "c_exponent=" + Join(r.c_exponent));
  check.Expect(r.isomorphism_number == 2, "isomorphism_number=" + std::to_string(r.isomorphism_number));
  check.Expect(r.specializing_height == 4, "specializing_height=" + std::to_string(r.specializing_height));
}

void MinimalExample(Check& check) {
  const std::vector<std::string> expected = {
      "[(1,1)]=((1,1),(4,4),(2,2),(5,5),(3,3)), eps=(0,0,0,0,0)",
      "[(1,2)]=((1,2),(4,5),(2,3),(5,1),(3,4)), eps=(0,0,0,-1,1)",
      "[(1,3)]=((1,3),(4,1),(2,4),(5,2),(3,5)), eps=(0,-1,1,-1,1)",
      "[(1,4)]=((1,4),(4,2),(2,5),(5,3),(3,1)), eps=(1,-1,1,-1,0)",
      "[(1,5)]=((1,5),(4,3),(2,1),(5,4),(3,2)), eps=(1,-1,0,0,0)",
  };
  Permutation perm = ParsePermutation("4,5,1,2,3");
  Signature sig{2, 3};
  auto orbits = PairOrbits(perm);
  check.Expect(orbits.size() == expected.size(), "orbit count " + std::to_string(orbits.size()));
  for (size_t k = 0; k < orbits.size() && k < expected.size(); ++k) {
    const auto& rep = orbits[k].points.front();
    std::string line = "[(" + std::to_string(rep.i) + "," + std::to_string(rep.j) + ")]=" + PointList(orbits[k]) +
                       ", eps=" + Join(EpsilonSequence(orbits[k], sig).values);
    check.Expect(line == expected[k], "got " + line);
  }
  auto r = ComputeInvariants(perm, sig, 1);
  check.Expect(r.gamma[0] == 6 && r.gamma[0] == sig.c * sig.d, "gamma(1)=" + std::to_string(r.gamma[0]));
}

void DimensionOneFamily(Check& check) {
  for (int c = 1; c <= 5; ++c) {
    auto r = ComputeInvariants(LongCycle(c + 1), Signature{c, 1}, 4);
    for (int m = 1; m <= 4; ++m) {
      const size_t k = static_cast<size_t>(m - 1);
      const std::string tag = "c=" + std::to_string(c) + " m=" + std::to_string(m);
      check.Expect(r.gamma[k] == c, tag + " gamma=" + std::to_string(r.gamma[k]));
      const int expect_c = m * (c + 1) * (c + 1) - c * (c + 1);
      check.Expect(r.c_exponent[k] == expect_c, tag + " c_exponent=" + std::to_string(r.c_exponent[k]));
    }
    check.Expect(r.isomorphism_number == 1, "c=" + std::to_string(c) + " n=" + std::to_string(r.isomorphism_number));
  }
}

void LongCycleFamily(Check& check) {
  for (int h = 1; h <= 8; ++h) {
    for (int d = 0; 2 * d <= h; ++d) {
      const int c = h - d;
      const int levels = h + 2;
      auto r = ComputeInvariants(LongCycle(h), Signature{c, d}, levels);
      for (int m = 1; m <= levels; ++m) {
        const size_t k = static_cast<size_t>(m - 1);
        const std::string tag = "h=" + std::to_string(h) + " d=" + std::to_string(d) + " m=" + std::to_string(m);
        const int g = m <= d ? m * (h - m) : c * d;
        const int e = m <= d ? m * m * h : m * h * h - c * d * h;
        check.Expect(r.gamma[k] == g, tag + " gamma=" + std::to_string(r.gamma[k]));
        check.Expect(r.c_exponent[k] == e, tag + " c_exponent=" + std::to_string(r.c_exponent[k]));
      }
      check.Expect(r.isomorphism_number == d, "h=" + std::to_string(h) + " d=" + std::to_string(d) +
                                                  " n=" + std::to_string(r.isomorphism_number));
    }
  }
}

const std::vector<SweepCase>& Sweep() {
  static const std::vector<SweepCase> sweep = RandomSweep(7, 200, 7);
  return sweep;
}

void OracleSweep(Check& check) {
  for (const auto& sample : Sweep()) {
    CrossCheckVerdict v = CrossCheck(sample.perm, sample.sig, 4);
    check.Expect(v.pass, v.first_mismatch ? v.first_mismatch->Describe() : "fail");
  }
}

void GammaProperties(Check& check) {
  for (const auto& sample : Sweep()) {
    auto r = ComputeInvariants(sample.perm, sample.sig, 4);
    for (const auto& v : CheckGammaProperties(r.gamma, sample.sig.c * sample.sig.d)) {
      check.Expect(false, sample.perm.ToOneLine() + ": " + v);
    }
  }
}

void NegationSymmetry(Check& check) {
  SplitMix64 rng(20260101);
  for (int trial = 0; trial < 1000; ++trial) {
    const int l = 1 + static_cast<int>(rng.Below(12));
    EpsilonSeq e;
    for (int s = 0; s < l; ++s) e.values.push_back(static_cast<int>(rng.Below(3)) - 1);
    EpsilonSeq neg = e.Negated();
    for (int n = 1; n <= 12; ++n) {
      check.Expect(SegmentCount(e, n) == SegmentCount(neg, n), "a_" + std::to_string(n) + " on " + Join(e.values));
    }
    check.Expect(CircularLevel(e) == CircularLevel(neg), "circular_level on " + Join(e.values));
  }
}

WittPoly Mono(int nvars, std::initializer_list<std::pair<int, int>> powers, const mpq_class& coeff) {
  WittPoly out = WittPoly::Constant(nvars, coeff);
  for (auto [var, power] : powers) out = out * WittPoly::Monomial(nvars, var, power);
  return out;
}

void WittPolynomialsCheck(Check& check) {
  const int x0 = 0, y0 = 1, x1 = 2, y1 = 3;
  for (int p : {2, 3, 5}) {
    const std::string tag = "p=" + std::to_string(p);
    auto s = SumPolynomials(p, 2);
    auto pr = ProductPolynomials(p, 2);
    check.Expect(s[0] == Mono(4, {{x0, 1}}, 1) + Mono(4, {{y0, 1}}, 1), tag + " S_0");
    WittPoly s1 = Mono(4, {{x1, 1}}, 1) + Mono(4, {{y1, 1}}, 1);
    mpz_class binom = 1;
    for (int i = 1; i <= p - 1; ++i) {
      binom = binom * (p - i + 1) / i;
      mpq_class coeff(binom, p);
      coeff.canonicalize();
      s1 -= Mono(4, {{x0, i}, {y0, p - i}}, coeff);
    }
    check.Expect(s[1] == s1, tag + " S_1");
    check.Expect(pr[0] == Mono(4, {{x0, 1}, {y0, 1}}, 1), tag + " P_0");
    WittPoly p1 = Mono(4, {{y0, p}, {x1, 1}}, 1) + Mono(4, {{y1, 1}, {x0, p}}, 1) + Mono(4, {{x1, 1}, {y1, 1}}, p);
    check.Expect(pr[1] == p1, tag + " P_1");
    for (WittLaw law : {WittLaw::kSum, WittLaw::kProduct, WittLaw::kNegation}) {
      try {
        auto polys = WittPolynomials(law, p, 4);
        for (const auto& poly : polys) check.Expect(poly.HasIntegerCoefficients(), tag + " integrality");
      } catch (const std::exception& e) {
        check.Expect(false, tag + " " + LawSymbol(law) + ": " + e.what());
      }
    }
  }
}

WittVec RandomVec(SplitMix64& rng, int p, int n) {
  std::vector<int> c(static_cast<size_t>(n));
  for (int& v : c) v = static_cast<int>(rng.Below(static_cast<uint64_t>(p)));
  return MakeWittVec(p, c);
}

void WittRingTables(Check& check) {
  const std::vector<std::pair<int, int>> rings = {{2, 3}, {3, 2}, {5, 2}};
  for (auto [p, n] : rings) {
    RingIsoReport r = RingIsoTable(p, n);
    check.Expect(r.pass(), "ring table p=" + std::to_string(p) + " n=" + std::to_string(n));
  }
  SplitMix64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    auto [p, n] = rings[static_cast<size_t>(trial) % rings.size()];
    WittVec x = RandomVec(rng, p, n), y = RandomVec(rng, p, n);
    check.Expect(Frobenius(Verschiebung(x)) == PMultiple(x), "FV != p");
    check.Expect(Verschiebung(Frobenius(x)) == PMultiple(x), "VF != p");
    check.Expect(WittMul(x, Verschiebung(y)) == Verschiebung(WittMul(Frobenius(x), y)), "x*V(y) != V(F(x)*y)");
  }
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      check.Expect(WittMul(Teichmuller(5, a, 2), Teichmuller(5, b, 2)) == Teichmuller(5, a * b % 5, 2),
                   "teichmuller " + std::to_string(a) + "*" + std::to_string(b));
    }
  }
}

void Bt1Classification(Check& check) {
  for (int h = 1; h <= 8; ++h) {
    for (int c = 0; c <= h; ++c) {
      try {
        check.Expect(CountBT1(Signature{c, h - c}) == Binomial(h, c), "count " + std::to_string(c));
      } catch (const std::exception& e) {
        check.Expect(false, e.what());
      }
    }
  }
  std::set<std::string> two_by_two;
  for (const auto& cls : EnumerateBT1(Signature{2, 2})) two_by_two.insert(cls.ToString());
  check.Expect(two_by_two == std::set<std::string>{"FFVV", "FV+FV", "FFV+V", "FVV+F", "FV+F+V", "F+F+V+V"},
               "(2,2) enumeration");
  for (int h = 1; h <= 6; ++h) {
    std::vector<int> images(static_cast<size_t>(h));
    std::iota(images.begin(), images.end(), 1);
    std::vector<std::set<std::string>> seen(static_cast<size_t>(h + 1));
    do {
      Permutation perm(images);
      for (int d = 0; d <= h; ++d) {
        seen[static_cast<size_t>(d)].insert(KraftType(perm, Signature{h - d, d}).ToString());
      }
    } while (std::next_permutation(images.begin(), images.end()));
    for (int d = 0; d <= h; ++d) {
      std::set<std::string> expected;
      for (const auto& cls : EnumerateBT1(Signature{h - d, d})) expected.insert(cls.ToString());
      check.Expect(seen[static_cast<size_t>(d)] == expected,
                   "kraft image h=" + std::to_string(h) + " d=" + std::to_string(d));
    }
  }
  check.Expect(KraftType(Permutation::Identity(1), Signature{1, 0}).ToString() == "F", "Z/p is not F");
  check.Expect(KraftType(Permutation::Identity(1), Signature{0, 1}).ToString() == "V", "mu_p is not V");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no time bound
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace btlab

int main() {
  using namespace btlab;
  const std::vector<Criterion> criteria = {
      {1, "square example (c=d=2, pi=(1 2 3 4))", 0, SquareExample},
      {2, "minimal example orbits and gamma(1)", 0, MinimalExample},
      {3, "d=1 long-cycle family", 0, DimensionOneFamily},
      {4, "long-cycle family d<=c, h<=8", 1.0, LongCycleFamily},
      {5, "oracle sweep, 200 samples, h<=7, m<=4", 30.0, OracleSweep},
      {6, "gamma table properties on the sweep", 0, GammaProperties},
      {7, "negation symmetry on 1000 sequences", 0, NegationSymmetry},
      {8, "Witt polynomial closed forms and integrality", 60.0, WittPolynomialsCheck},
      {9, "Witt ring tables and F/V identities", 0, WittRingTables},
      {10, "BT1 classification", 5.0, Bt1Classification},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      check.Expect(false, "took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << "criterion " << c.id << ": " << (check.ok() ? "PASS" : "FAIL") << "  " << c.name << "  [" << timing
              << "]\n";
    for (const auto& f : check.failures()) std::cout << "    " << f << "\n";
    if (!check.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
