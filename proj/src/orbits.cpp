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

#include "btlab/orbits.hpp"

#include <algorithm>
#include <numeric>

namespace btlab {

EpsilonSeq EpsilonSeq::Negated() const {
  EpsilonSeq out{values};
  for (int& v : out.values) v = -v;
  return out;
}

int EpsilonSeq::Sum() const { return std::accumulate(values.begin(), values.end(), 0); }

int EpsilonOf(IndexPair point, int d) {
  if (point.i <= d && d < point.j) return 1;
  if (point.j <= d && d < point.i) return -1;
  return 0;
}

std::vector<ProductOrbit> PairOrbits(const Permutation& perm) {
  const int h = perm.degree();
  auto slot = [h](IndexPair p) { return static_cast<size_t>((p.i - 1) * h + (p.j - 1)); };
  std::vector<bool> visited(static_cast<size_t>(h) * static_cast<size_t>(h), false);
  std::vector<ProductOrbit> orbits;
  // Scanning J x J in lexicographic order reaches each orbit first at its
  // least point, which makes the rotation and the orbit order canonical.
  for (int i = 1; i <= h; ++i) {
    for (int j = 1; j <= h; ++j) {
      IndexPair start{i, j};
      if (visited[slot(start)]) continue;
      ProductOrbit orbit;
      for (IndexPair p = start; !visited[slot(p)]; p = IndexPair{perm(p.i), perm(p.j)}) {
        visited[slot(p)] = true;
        orbit.points.push_back(p);
      }
      orbits.push_back(std::move(orbit));
    }
  }
  return orbits;
}

EpsilonSeq EpsilonSequence(const ProductOrbit& orbit, const Signature& sig) {
  EpsilonSeq eps;
  eps.values.reserve(orbit.size());
  for (IndexPair p : orbit.points) eps.values.push_back(EpsilonOf(p, sig.d));
  return eps;
}

MuSeq MuSequence(const EpsilonSeq& eps) {
  MuSeq mu;
  mu.values.reserve(eps.size());
  for (int e : eps.values) mu.values.push_back(e == -1 ? 1 : 0);
  return mu;
}

ProductOrbit Transpose(const ProductOrbit& orbit) {
  ProductOrbit out;
  out.points.reserve(orbit.size());
  for (IndexPair p : orbit.points) out.points.push_back(IndexPair{p.j, p.i});
  auto least = std::min_element(out.points.begin(), out.points.end());
  std::rotate(out.points.begin(), least, out.points.end());
  return out;
}

}  // namespace btlab
