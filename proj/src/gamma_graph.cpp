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

#include "btlab/gamma_graph.hpp"

#include <sstream>

#include "btlab/errors.hpp"
#include "btlab/invariants.hpp"

namespace btlab {
namespace {

// One Witt component of a side of the congruence: either the literal 0 or
// y^(p^frobenius) for a variable y.
struct ComponentTerm {
  int vertex = -1;  // -1 means literal zero
  int frobenius = 0;
};

// sigma(x) = (x_0^p, ..., x_{m-1}^p); p*sigma(x) = (0, x_0^p^2, ..., x_{m-2}^p^2).
std::vector<ComponentTerm> LeftSide(const GammaGraph& g, int position, int eps) {
  const int m = g.level();
  std::vector<ComponentTerm> side(static_cast<size_t>(m));
  for (int r = 0; r < m; ++r) {
    if (eps == 1) {
      side[static_cast<size_t>(r)] = r == 0 ? ComponentTerm{} : ComponentTerm{g.VertexId(position, r - 1), 2};
    } else {
      side[static_cast<size_t>(r)] = ComponentTerm{g.VertexId(position, r), 1};
    }
  }
  return side;
}

// x = (x_0, ..., x_{m-1}); p*x = (0, x_0^p, ..., x_{m-2}^p).
std::vector<ComponentTerm> RightSide(const GammaGraph& g, int position, int eps) {
  const int m = g.level();
  std::vector<ComponentTerm> side(static_cast<size_t>(m));
  for (int r = 0; r < m; ++r) {
    if (eps == -1) {
      side[static_cast<size_t>(r)] = r == 0 ? ComponentTerm{} : ComponentTerm{g.VertexId(position, r - 1), 1};
    } else {
      side[static_cast<size_t>(r)] = ComponentTerm{g.VertexId(position, r), 0};
    }
  }
  return side;
}

}  // namespace

GammaGraph::GammaGraph(int orbit_length, int level)
    : orbit_length_(orbit_length),
      level_(level),
      zero_forced_(static_cast<size_t>(orbit_length * level) + 1, false) {
  if (orbit_length < 1 || level < 1) {
    throw Error(ErrorKind::kOutOfRange, "graph needs orbit length and level >= 1");
  }
  zero_forced_.back() = true;  // the ZERO vertex itself
}

std::vector<int> GammaGraph::zero_constraints() const {
  std::vector<int> out;
  for (int v = 0; v < variable_count(); ++v) {
    if (zero_forced_[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

void GammaGraph::AddEdge(int from, int to, int weight) { edges_.push_back(GraphEdge{from, to, weight}); }

void GammaGraph::ForceZero(int vertex) { zero_forced_[static_cast<size_t>(vertex)] = true; }

int ComponentSummary::CycleWeight() const {
  int total = 0;
  for (const auto& cycle : cycles) total += cycle.weight;
  return total;
}

GammaGraph BuildGammaGraph(const EpsilonSeq& eps, int m) {
  const int l = static_cast<int>(eps.size());
  GammaGraph graph(l, m);
  for (int s = 1; s <= l; ++s) {
    const int next = s % l + 1;
    auto lhs = LeftSide(graph, s, eps[static_cast<size_t>(s - 1)]);
    auto rhs = RightSide(graph, next, eps[static_cast<size_t>(next - 1)]);
    for (int r = 0; r < m; ++r) {
      const ComponentTerm& a = lhs[static_cast<size_t>(r)];
      const ComponentTerm& b = rhs[static_cast<size_t>(r)];
      if (a.vertex < 0 && b.vertex < 0) continue;
      if (a.vertex < 0) {
        graph.ForceZero(b.vertex);
      } else if (b.vertex < 0) {
        graph.ForceZero(a.vertex);
      } else if (a.frobenius >= b.frobenius) {
        // A^(p^a) = B^(p^b) over a perfect field gives B = A^(p^(a-b)).
        graph.AddEdge(a.vertex, b.vertex, a.frobenius - b.frobenius);
      } else {
        graph.AddEdge(b.vertex, a.vertex, b.frobenius - a.frobenius);
      }
    }
  }
  return graph;
}

ComponentSummary ClassifyComponents(const GammaGraph& graph) {
  const int n = graph.variable_count();
  std::vector<int> out(static_cast<size_t>(n), -1), in(static_cast<size_t>(n), -1);
  std::vector<int> out_weight(static_cast<size_t>(n), 0);
  for (size_t e = 0; e < graph.edges().size(); ++e) {
    const GraphEdge& edge = graph.edges()[e];
    if (edge.weight < 0 || edge.weight > 2) {
      throw Error(ErrorKind::kMalformedGraph, "edge weight " + std::to_string(edge.weight));
    }
    if (edge.from < 0 || edge.from >= n || edge.to < 0 || edge.to >= n) {
      throw Error(ErrorKind::kMalformedGraph, "edge touches a non-variable vertex");
    }
    if (out[static_cast<size_t>(edge.from)] != -1 || in[static_cast<size_t>(edge.to)] != -1) {
      throw Error(ErrorKind::kMalformedGraph, "vertex " + std::to_string(edge.from) + " or " +
                                                  std::to_string(edge.to) + " has degree above one");
    }
    out[static_cast<size_t>(edge.from)] = edge.to;
    out_weight[static_cast<size_t>(edge.from)] = edge.weight;
    in[static_cast<size_t>(edge.to)] = edge.from;
  }

  ComponentSummary summary;
  std::vector<bool> visited(static_cast<size_t>(n), false);
  // Paths: start at every vertex without a predecessor.
  for (int v = 0; v < n; ++v) {
    if (in[static_cast<size_t>(v)] != -1) continue;
    bool zeroed = false;
    int size = 0;
    for (int u = v; u != -1; u = out[static_cast<size_t>(u)]) {
      visited[static_cast<size_t>(u)] = true;
      zeroed = zeroed || graph.is_zero_forced(u);
      ++size;
    }
    if (zeroed) {
      ++summary.zeroed_paths;
      summary.zeroed_vertices += size;
    } else {
      ++summary.free_paths;
    }
  }
  // Everything left lies on a cycle.
  for (int v = 0; v < n; ++v) {
    if (visited[static_cast<size_t>(v)]) continue;
    CycleComponent cycle;
    bool zeroed = false;
    int u = v;
    do {
      visited[static_cast<size_t>(u)] = true;
      zeroed = zeroed || graph.is_zero_forced(u);
      cycle.length += 1;
      cycle.weight += out_weight[static_cast<size_t>(u)];
      u = out[static_cast<size_t>(u)];
    } while (u != v);
    if (zeroed) {
      ++summary.zeroed_cycles;
      summary.zeroed_vertices += cycle.length;
    } else {
      summary.cycles.push_back(cycle);
    }
  }
  return summary;
}

OracleResult OracleInvariants(const Permutation& perm, const Signature& sig, int m) {
  CheckSignature(perm, sig);
  OracleResult result;
  for (const auto& orbit : PairOrbits(perm)) {
    ComponentSummary summary = ClassifyComponents(BuildGammaGraph(EpsilonSequence(orbit, sig), m));
    result.dimension += summary.free_paths;
    result.exponent += summary.CycleWeight();
    result.per_orbit.push_back(std::move(summary));
  }
  return result;
}

std::string VerificationMismatch::Describe() const {
  std::ostringstream out;
  out << "perm=" << perm << " c=" << sig.c << " d=" << sig.d << " m=" << level << ' ' << quantity
      << ": formula=" << formula_value << " oracle=" << oracle_value;
  return out.str();
}

CrossCheckVerdict CrossCheck(const Permutation& perm, const Signature& sig, int max_level) {
  if (max_level < 1) throw Error(ErrorKind::kOutOfRange, "max level must be >= 1");
  auto profiles = OrbitProfiles(perm, sig);
  CrossCheckVerdict verdict;
  auto fail = [&](int m, const char* quantity, int formula, int oracle) {
    if (verdict.pass) {
      verdict.pass = false;
      verdict.first_mismatch = VerificationMismatch{perm.ToOneLine(), sig, m, quantity, formula, oracle};
    }
  };
  for (int m = 1; m <= max_level; ++m) {
    OracleResult oracle = OracleInvariants(perm, sig, m);
    const int gamma = Gamma(profiles, m);
    const int exponent = ComponentExponent(profiles, m);
    if (oracle.dimension != gamma) fail(m, "gamma", gamma, oracle.dimension);
    if (oracle.exponent != exponent) fail(m, "c_exponent", exponent, oracle.exponent);
    for (size_t k = 0; k < oracle.per_orbit.size(); ++k) {
      const int l = static_cast<int>(profiles[k].orbit.size());
      for (const auto& cycle : oracle.per_orbit[k].cycles) {
        if (cycle.weight != l) fail(m, "cycle_weight", l, cycle.weight);
      }
    }
    verdict.per_level.push_back(std::move(oracle));
  }
  return verdict;
}

}  // namespace btlab
