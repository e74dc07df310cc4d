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

#include "btlab/invariants.hpp"

#include <algorithm>

#include "btlab/errors.hpp"

namespace btlab {

int OrbitProfile::SegmentsOfLevel(int level) const {
  return static_cast<int>(std::count_if(segments.begin(), segments.end(),
                                        [level](const Segment& seg) { return seg.level == level; }));
}

std::vector<Segment> SegmentScan(const EpsilonSeq& eps) {
  const size_t l = eps.size();
  std::vector<Segment> segments;
  for (size_t s = 0; s < l; ++s) {
    if (eps[s] != -1) continue;
    int sum = 0;
    int min_sum = 0;
    for (size_t step = 0; step < l; ++step) {
      sum += eps[(s + step) % l];
      if (sum == 0) {
        segments.push_back(Segment{static_cast<int>(s) + 1, static_cast<int>(step) + 1, -min_sum});
        break;
      }
      min_sum = std::min(min_sum, sum);
    }
  }
  return segments;
}

int SegmentCount(const EpsilonSeq& eps, int level) {
  auto segments = SegmentScan(eps);
  return static_cast<int>(std::count_if(segments.begin(), segments.end(),
                                        [level](const Segment& seg) { return seg.level == level; }));
}

std::optional<int> CircularLevel(const EpsilonSeq& eps) {
  if (eps.Sum() != 0) return std::nullopt;
  int prefix = 0, lo = 0, hi = 0;
  for (int e : eps.values) {
    prefix += e;
    lo = std::min(lo, prefix);
    hi = std::max(hi, prefix);
  }
  return hi - lo;
}

OrbitProfile MakeProfile(ProductOrbit orbit, const Signature& sig) {
  OrbitProfile profile;
  profile.eps = EpsilonSequence(orbit, sig);
  profile.orbit = std::move(orbit);
  profile.segments = SegmentScan(profile.eps);
  profile.circular_level = CircularLevel(profile.eps);
  return profile;
}

std::vector<OrbitProfile> OrbitProfiles(const Permutation& perm, const Signature& sig) {
  CheckSignature(perm, sig);
  std::vector<OrbitProfile> profiles;
  for (auto& orbit : PairOrbits(perm)) profiles.push_back(MakeProfile(std::move(orbit), sig));
  return profiles;
}

int Gamma(std::span<const OrbitProfile> profiles, int m) {
  int total = 0;
  for (const auto& profile : profiles) {
    for (const auto& seg : profile.segments) {
      if (seg.level <= m) ++total;
    }
  }
  return total;
}

int ComponentExponent(std::span<const OrbitProfile> profiles, int m) {
  int total = 0;
  for (const auto& profile : profiles) {
    if (profile.circular_level && *profile.circular_level <= m - 1) {
      total += (m - *profile.circular_level) * static_cast<int>(profile.orbit.size());
    }
  }
  return total;
}

int IsomorphismNumber(std::span<const OrbitProfile> profiles) {
  bool any_nonzero = false;
  int deepest = 0;
  for (const auto& profile : profiles) {
    for (int e : profile.eps.values) any_nonzero = any_nonzero || e != 0;
    for (const auto& seg : profile.segments) deepest = std::max(deepest, seg.level);
  }
  if (!any_nonzero) return 0;
  return std::max(1, deepest);
}

std::vector<std::string> CheckGammaProperties(std::span<const int> gamma, int cd) {
  std::vector<std::string> violations;
  const int levels = static_cast<int>(gamma.size());
  auto at = [&](int m) { return gamma[static_cast<size_t>(m - 1)]; };
  for (int m = 1; m <= levels; ++m) {
    if (at(m) > cd) violations.push_back("gamma(" + std::to_string(m) + ") exceeds cd");
    if (m >= 2 && at(m) < at(m - 1)) violations.push_back("gamma decreases at m=" + std::to_string(m));
    if (m >= 3 && at(m) - at(m - 1) > at(m - 1) - at(m - 2)) {
      violations.push_back("first difference increases at m=" + std::to_string(m));
    }
    for (int n = 1; n < m; ++n) {
      if (static_cast<long long>(at(m)) * n > static_cast<long long>(m) * at(n)) {
        violations.push_back("gamma(" + std::to_string(m) + ")*" + std::to_string(n) + " > " +
                             std::to_string(m) + "*gamma(" + std::to_string(n) + ")");
      }
    }
  }
  return violations;
}

InvariantReport ComputeInvariants(const Permutation& perm, const Signature& sig, int max_level) {
  if (max_level < 1) throw Error(ErrorKind::kOutOfRange, "max level must be >= 1");
  InvariantReport report;
  report.perm = perm;
  report.sig = sig;
  report.profiles = OrbitProfiles(perm, sig);
  for (int m = 1; m <= max_level; ++m) {
    report.gamma.push_back(Gamma(report.profiles, m));
    report.c_exponent.push_back(ComponentExponent(report.profiles, m));
  }
  report.isomorphism_number = IsomorphismNumber(report.profiles);
  report.specializing_height =
      report.isomorphism_number == 0 ? 0 : Gamma(report.profiles, report.isomorphism_number);
  return report;
}

}  // namespace btlab
