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

#include "btlab/sweep.hpp"

#include <utility>

#include "btlab/errors.hpp"

namespace btlab {

uint64_t SplitMix64::Next() {
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::Below(uint64_t bound) {
  const uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = Next();
    if (r >= threshold) return r % bound;
  }
}

Permutation RandomPermutation(SplitMix64& rng, int degree) {
  std::vector<int> images(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<size_t>(i)] = i + 1;
  for (int i = degree - 1; i >= 1; --i) {
    auto j = static_cast<size_t>(rng.Below(static_cast<uint64_t>(i) + 1));
    std::swap(images[static_cast<size_t>(i)], images[j]);
  }
  return Permutation(std::move(images));
}

std::vector<SweepCase> RandomSweep(uint64_t seed, int samples, int max_h) {
  if (max_h < 2) throw Error(ErrorKind::kOutOfRange, "max h must be >= 2");
  if (samples < 0) throw Error(ErrorKind::kOutOfRange, "samples must be >= 0");
  SplitMix64 rng(seed);
  std::vector<SweepCase> cases;
  cases.reserve(static_cast<size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const int h = 2 + static_cast<int>(rng.Below(static_cast<uint64_t>(max_h - 1)));
    const int d = static_cast<int>(rng.Below(static_cast<uint64_t>(h) + 1));
    Permutation perm = RandomPermutation(rng, h);
    cases.push_back(SweepCase{std::move(perm), Signature{h - d, d}});
  }
  return cases;
}

}  // namespace btlab
