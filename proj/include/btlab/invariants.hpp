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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "btlab/orbits.hpp"
#include "btlab/permutation.hpp"

namespace btlab {

// A free linear segment: starts at a -1 (1-based `start`), runs `length`
// steps cyclically, keeps partial sums strictly negative until it returns to
// zero on a +1. `level` is the depth of the deepest partial sum.
struct Segment {
  int start = 0;
  int length = 0;
  int level = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct OrbitProfile {
  ProductOrbit orbit;
  EpsilonSeq eps;
  std::vector<Segment> segments;   // sorted by start
  std::optional<int> circular_level;  // set iff eps sums to zero

  // a_n: number of segments of level n.
  int SegmentsOfLevel(int level) const;
};

// All free linear segments of a cyclic sequence, sorted by start. Each start
// yields at most one segment and a walk never exceeds eps.size() steps.
std::vector<Segment> SegmentScan(const EpsilonSeq& eps);

// a_n(eps) for n >= 1.
int SegmentCount(const EpsilonSeq& eps, int level);

// max - min of the prefix sums C_0 = 0, ..., C_l when the sum is zero.
std::optional<int> CircularLevel(const EpsilonSeq& eps);

OrbitProfile MakeProfile(ProductOrbit orbit, const Signature& sig);

std::vector<OrbitProfile> OrbitProfiles(const Permutation& perm, const Signature& sig);

// Dimension of the automorphism scheme at level m: segments of level <= m.
int Gamma(std::span<const OrbitProfile> profiles, int m);

// log_p of the number of connected components of the endomorphism scheme.
int ComponentExponent(std::span<const OrbitProfile> profiles, int m);

// 0 when every label is zero (cd = 0); otherwise max(1, deepest segment level).
int IsomorphismNumber(std::span<const OrbitProfile> profiles);

struct InvariantReport {
  Permutation perm = Permutation::Identity(1);
  Signature sig;
  std::vector<OrbitProfile> profiles;
  std::vector<int> gamma;       // gamma[m - 1] for m = 1..max_level
  std::vector<int> c_exponent;  // same indexing
  int isomorphism_number = 0;
  int specializing_height = 0;
};

// Violations of the structural properties of a gamma table gamma[m-1]:
// nondecreasing, nonincreasing first differences, bounded by cd, and
// gamma(m) * n <= m * gamma(n) for m > n. Empty when all hold.
std::vector<std::string> CheckGammaProperties(std::span<const int> gamma, int cd);

InvariantReport ComputeInvariants(const Permutation& perm, const Signature& sig, int max_level);

}  // namespace btlab
