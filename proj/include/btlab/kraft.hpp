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

#include <string>
#include <string_view>
#include <vector>

#include "btlab/permutation.hpp"

namespace btlab {

// Circular word over {F, V}, stored as its lexicographically least rotation
// (F < V).
class CircularWord {
 public:
  // Canonicalizes `letters`. Throws EmptyWord or InvalidLetter.
  explicit CircularWord(std::string_view letters);

  const std::string& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  int CountF() const;
  int CountV() const;

  friend auto operator<=>(const CircularWord&, const CircularWord&) = default;

 private:
  std::string letters_;
};

// Least rotation of a nonempty {F,V} string.
CircularWord CanonicalRotation(std::string_view letters);

bool IsAperiodic(const CircularWord& word);

// Swap F <-> V and re-canonicalize (Cartier dual).
CircularWord DualWord(const CircularWord& word);

// A BT_1 isomorphism class: multiset of aperiodic circular words, longest
// first, equal lengths lexicographically.
struct BTClass {
  std::vector<CircularWord> words;

  int CountF() const;
  int CountV() const;
  // Words joined by '+', e.g. "FFV+V".
  std::string ToString() const;
  friend bool operator==(const BTClass&, const BTClass&) = default;
  // More words first; equal counts compare word lists under WordOrder.
  friend bool operator<(const BTClass& a, const BTClass& b);
};

// Longer words first, then lexicographically.
bool WordOrder(const CircularWord& a, const CircularWord& b);

BTClass MakeClass(std::vector<CircularWord> words);

// Reads one word per cycle of `perm`: V at index i <= d, F at i > d. Periodic
// words are split into copies of their primitive root.
BTClass KraftType(const Permutation& perm, const Signature& sig);

// Dual class, letterwise swapped; a type for signature (d, c).
BTClass DualClass(const BTClass& cls);

// Aperiodic necklaces with exactly f F's and v V's, ascending.
std::vector<CircularWord> AperiodicNecklaces(int f, int v);

// Every BT_1 class of signature (c, d) in canonical order.
std::vector<BTClass> EnumerateBT1(const Signature& sig);

// Number of classes; throws CountMismatch unless it equals binomial(c+d, c).
long long CountBT1(const Signature& sig);

long long Binomial(int n, int k);

}  // namespace btlab
