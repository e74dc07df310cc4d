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
#include <string>
#include <string_view>
#include <vector>

namespace btlab {

// A bijection of {1, ..., h}. Indices are 1-based throughout the library.
class Permutation {
 public:
  // Validates that `images` is a bijection of {1, ..., images.size()}.
  explicit Permutation(std::vector<int> images);

  static Permutation Identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  // One-line form "a1,a2,...,ah".
  std::string ToOneLine() const;
  // Cycle form "(1 2 3)(4 5)"; fixed points are omitted, identity is "()".
  std::string ToCycleString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Codimension c and dimension d; h = c + d.
struct Signature {
  int c = 0;
  int d = 0;

  int h() const { return c + d; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Accepts "4,5,1,2,3" (one-line) or "(1 2 3 4)(5 6)" (cycle form). For cycle
// form the degree is the largest point mentioned unless `degree` is given.
Permutation ParsePermutation(std::string_view text, std::optional<int> degree = std::nullopt);

// Disjoint cycles covering {1..h}; each starts at its least element and the
// cycles are ordered by that element.
std::vector<std::vector<int>> CycleDecomposition(const Permutation& perm);

// The h-cycle (1 2 ... h).
Permutation LongCycle(int degree);

// Throws SignatureMismatch unless perm.degree() == sig.h() and c, d >= 0.
void CheckSignature(const Permutation& perm, const Signature& sig);

}  // namespace btlab
