#ifndef EDGERING_MATCHING_HPP
#define EDGERING_MATCHING_HPP

#include <span>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

/// Pairwise vertex-disjoint edges.
struct Matching {
  std::vector<Edge> edges;
  std::size_t size() const { return edges.size(); }
};

/// Edges whose endpoints cover every vertex.
struct EdgeCover {
  std::vector<Edge> edges;
  std::size_t size() const { return edges.size(); }
};

bool is_matching(const Graph& g, std::span<const Edge> edges);
bool is_edge_cover(const Graph& g, std::span<const Edge> edges);

/// Maximum cardinality matching of a general graph (Edmonds' blossom
/// algorithm). Edges are returned sorted.
Matching maximum_matching(const Graph& g);

int matching_number(const Graph& g);

/// Minimum edge cover: a maximum matching plus one edge per unmatched vertex,
/// so |cover| = d - mat(g). Throws std::invalid_argument if g has an isolated
/// vertex.
EdgeCover min_edge_cover(const Graph& g);

}  // namespace edgering

#endif  // EDGERING_MATCHING_HPP
