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

#include <compare>
#include <cstddef>
#include <vector>

#include "btlab/permutation.hpp"

namespace btlab {

// A point (i, j) of J x J, 1-based.
struct IndexPair {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// One orbit of (pi, pi) acting diagonally on J x J. The successor of points[s]
// is points[s + 1] (cyclically), and points[0] is the lexicographically least
// pair of the orbit.
struct ProductOrbit {
  std::vector<IndexPair> points;

  size_t size() const { return points.size(); }
  friend bool operator==(const ProductOrbit&, const ProductOrbit&) = default;
};

// Labels in {-1, 0, +1} aligned with an orbit's points.
struct EpsilonSeq {
  std::vector<int> values;

  size_t size() const { return values.size(); }
  int operator[](size_t s) const { return values[s]; }
  EpsilonSeq Negated() const;
  int Sum() const;
  friend bool operator==(const EpsilonSeq&, const EpsilonSeq&) = default;
};

// mu[s] = 1 exactly where eps[s] = -1.
struct MuSeq {
  std::vector<int> values;

  size_t size() const { return values.size(); }
  friend bool operator==(const MuSeq&, const MuSeq&) = default;
};

// +1 on J_+ (i <= d < j), -1 on J_- (j <= d < i), 0 on J_0.
int EpsilonOf(IndexPair point, int d);

std::vector<ProductOrbit> PairOrbits(const Permutation& perm);

EpsilonSeq EpsilonSequence(const ProductOrbit& orbit, const Signature& sig);

MuSeq MuSequence(const EpsilonSeq& eps);

// The orbit of transposed points (j, i), canonically rotated.
ProductOrbit Transpose(const ProductOrbit& orbit);

}  // namespace btlab
