#ifndef EDGERING_NORMALITY_HPP
#define EDGERING_NORMALITY_HPP

#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

/// Chordless cycle of odd length, listed from its smallest vertex with the
/// smaller neighbor second.
struct OddCycle {
  std::vector<Vertex> vertices;

  VertexSet vertex_set() const;
  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const OddCycle&, const OddCycle&) = default;
};

/// All chordless odd cycles, each once up to rotation and reflection, in
/// lexicographic order.
std::vector<OddCycle> enumerate_minimal_odd_cycles(const Graph& g);

/// Every pair of vertex-disjoint chordless odd cycles is joined by an edge.
/// Throws std::invalid_argument for a disconnected graph.
bool satisfies_odd_cycle_condition(const Graph& g);

/// Normality of the edge ring: bipartite graphs are normal, otherwise the odd
/// cycle condition decides. Throws std::invalid_argument when disconnected.
bool is_normal(const Graph& g);

}  // namespace edgering

#endif  // EDGERING_NORMALITY_HPP
