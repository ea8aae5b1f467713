#ifndef EDGERING_ENUMERATE_HPP
#define EDGERING_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

/// Largest vertex count supported by canonical_code.
inline constexpr int kMaxCanonicalVertices = 11;

/// Isomorphism-invariant code: the smallest upper-triangle adjacency bitmask
/// over all relabelings that respect the color-refinement partition (vertices
/// sorted by refined degree color, every order inside a color class tried).
std::uint64_t canonical_code(const Graph& g);

/// Graph whose upper-triangle adjacency bitmask is `code`.
Graph graph_from_code(int d, std::uint64_t code);

/// One representative per isomorphism class of graphs on exactly n vertices
/// (connected or not), in increasing canonical-code order.
std::vector<Graph> graphs_up_to_isomorphism(int n);

/// Connected representatives on exactly n vertices.
std::vector<Graph> connected_graphs_up_to_isomorphism(int n);

/// Every connected labeled graph on vertex set 1..n (n <= 8).
void for_each_connected_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

}  // namespace edgering

#endif  // EDGERING_ENUMERATE_HPP
