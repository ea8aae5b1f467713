#ifndef EDGERING_POLYTOPE_HPP
#define EDGERING_POLYTOPE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/hull.hpp"

namespace edgering {

enum class FacetSource {
  kHull,         // computed from the vertex set
  kCoordinate,   // x_i >= 0 for a regular or ordinary vertex i
  kFundamental,  // non-bipartite graph, independent set T
  kAcceptable,   // bipartite graph, independent set T
};

struct FacetProvenance {
  FacetSource source = FacetSource::kHull;
  Vertex vertex = 0;   // kCoordinate
  VertexSet t;         // kFundamental / kAcceptable
  VertexSet t_prime;   // neighborhood of t

  std::string to_string() const;
};

/// normal . x >= offset, valid on P_G and tight on a facet. The normal is
/// reduced to a canonical representative modulo the affine hull equations:
/// its minimum over every block of the hull (all of [d], or each side of the
/// bipartition) is zero, and its entries are coprime. Two inequalities cut
/// out the same facet exactly when their (normal, offset) pairs agree.
struct FacetInequality {
  IntVector normal;
  std::int64_t offset = 0;
  FacetProvenance provenance;

  std::int64_t evaluate(std::span<const std::int64_t> x) const;
  bool same_halfspace(const FacetInequality& o) const {
    return normal == o.normal && offset == o.offset;
  }
};

/// coeffs . x = rhs * q on the q-th dilation.
struct AffineEquation {
  IntVector coeffs;
  std::int64_t rhs = 0;
};

enum class Location { kInterior, kBoundary, kOutside };

std::string to_string(Location loc);

/// The edge polytope conv{e_i + e_j : {i,j} in E(G)} of a connected graph.
class EdgePolytope {
 public:
  /// Throws std::invalid_argument when g is disconnected or has no edges.
  explicit EdgePolytope(const Graph& g);

  const Graph& graph() const { return graph_; }
  int ambient_dim() const { return graph_.num_vertices(); }
  int dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::optional<Bipartition>& bipartition() const { return bipartition_; }
  bool bipartite() const { return bipartition_.has_value(); }

  /// Sum x = 2, plus sum_{i in L} x_i = 1 when bipartite.
  const std::vector<AffineEquation>& hull_equations() const { return equations_; }
  const std::vector<FacetInequality>& facets() const { return facets_; }

  /// Rewrites normal . x >= offset (valid on the affine hull) into the
  /// canonical representative described on FacetInequality.
  void canonicalize(IntVector& normal, std::int64_t& offset) const;

  /// Position of an integer point relative to q * P_G. Interior means
  /// relative interior: every facet inequality strict.
  Location contains(int q, std::span<const std::int64_t> point) const;

 private:
  Graph graph_;
  int dim_ = 0;
  std::vector<IntVector> vertices_;
  std::optional<Bipartition> bipartition_;
  std::vector<AffineEquation> equations_;
  std::vector<FacetInequality> facets_;
};

EdgePolytope edge_polytope(const Graph& g);

/// Facets computed geometrically from the vertices; sorted by normal.
const std::vector<FacetInequality>& facets(const EdgePolytope& p);

/// Facets predicted combinatorially from regular/ordinary vertices and
/// fundamental/acceptable independent sets; canonical and sorted like
/// facets(). Throws std::invalid_argument when g is disconnected.
std::vector<FacetInequality> predicted_facets(const Graph& g);

/// Same halfspace sets, ignoring provenance.
bool same_facet_set(std::span<const FacetInequality> a, std::span<const FacetInequality> b);

}  // namespace edgering

#endif  // EDGERING_POLYTOPE_HPP
