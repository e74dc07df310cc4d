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
#include <vector>

#include "btlab/permutation.hpp"

namespace btlab {

// splitmix64: state += 0x9e3779b97f4a7c15; z = state;
// z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9; z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
// return z ^ (z >> 31). Bit-exact on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next();
  // Uniform in [0, bound) by rejection of the biased low range; bound >= 1.
  uint64_t Below(uint64_t bound);

 private:
  uint64_t state_;
};

// Fisher-Yates from the top: for i = h-1 .. 1 swap images[i] with images[Below(i+1)].
Permutation RandomPermutation(SplitMix64& rng, int degree);

struct SweepCase {
  Permutation perm;
  Signature sig;
};

// h uniform in 2..max_h, then d uniform in 0..h, then pi; in that draw order.
std::vector<SweepCase> RandomSweep(uint64_t seed, int samples, int max_h);

}  // namespace btlab
