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
#include <vector>

#include "btlab/orbits.hpp"
#include "btlab/permutation.hpp"

namespace btlab {

// Edge "to = from^(p^weight)" between Witt-component variables.
struct GraphEdge {
  int from = 0;
  int to = 0;
  int weight = 0;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Constraint graph of the level-m endomorphism congruences along one orbit.
// Variable y_{s,r} (orbit position s in 1..l, Witt row r in 0..m-1) has id
// (s-1)*m + r; id l*m is the shared ZERO vertex.
class GammaGraph {
 public:
  GammaGraph(int orbit_length, int level);

  int orbit_length() const { return orbit_length_; }
  int level() const { return level_; }
  int variable_count() const { return orbit_length_ * level_; }
  int zero_vertex() const { return variable_count(); }
  int VertexId(int position, int row) const { return (position - 1) * level_ + row; }

  const std::vector<GraphEdge>& edges() const { return edges_; }
  // Variables forced equal to zero, ascending.
  std::vector<int> zero_constraints() const;
  bool is_zero_forced(int vertex) const { return zero_forced_[static_cast<size_t>(vertex)]; }

  void AddEdge(int from, int to, int weight);
  void ForceZero(int vertex);

 private:
  int orbit_length_;
  int level_;
  std::vector<GraphEdge> edges_;
  std::vector<bool> zero_forced_;
};

struct CycleComponent {
  int length = 0;
  int weight = 0;

  friend bool operator==(const CycleComponent&, const CycleComponent&) = default;
};

struct ComponentSummary {
  int free_paths = 0;
  int zeroed_paths = 0;
  int zeroed_cycles = 0;
  int zeroed_vertices = 0;
  std::vector<CycleComponent> cycles;  // free cycles, in order of their least vertex

  int CycleWeight() const;
};

// Expands p^(mu_s+eps_s) sigma(x_s) == p^(mu_{s+1}) x_{s+1} mod p^m component
// by component, for every cyclic step s -> s+1 of the orbit.
GammaGraph BuildGammaGraph(const EpsilonSeq& eps, int m);

// Throws MalformedGraph if any vertex has in- or out-degree above one.
ComponentSummary ClassifyComponents(const GammaGraph& graph);

struct OracleResult {
  int dimension = 0;
  int exponent = 0;
  std::vector<ComponentSummary> per_orbit;  // aligned with PairOrbits order
};

OracleResult OracleInvariants(const Permutation& perm, const Signature& sig, int m);

struct VerificationMismatch {
  std::string perm;
  Signature sig;
  int level = 0;
  std::string quantity;  // "gamma", "c_exponent" or "cycle_weight"
  int formula_value = 0;
  int oracle_value = 0;

  std::string Describe() const;
};

struct CrossCheckVerdict {
  bool pass = true;
  std::optional<VerificationMismatch> first_mismatch;
  std::vector<OracleResult> per_level;  // per_level[m - 1]
};

// Compares the closed forms against the graph oracle for m = 1..max_level and
// checks that every cycle weighs exactly its orbit length.
CrossCheckVerdict CrossCheck(const Permutation& perm, const Signature& sig, int max_level);

}  // namespace btlab
