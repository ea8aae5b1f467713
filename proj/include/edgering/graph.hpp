#ifndef EDGERING_GRAPH_HPP
#define EDGERING_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace edgering {

/// Vertices are 1-based everywhere in the public interface.
using Vertex = int;

/// Largest vertex count a Graph can hold (vertex sets are 64-bit masks).
inline constexpr int kMaxVertices = 64;

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  bool contains(Vertex w) const { return u == w || v == w; }
};

/// A set of vertices of one graph, stored as a bitmask (bit i-1 <-> vertex i).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet all(int d) {
    return VertexSet(d >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1);
  }

  std::uint64_t bits() const { return bits_; }
  bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1U; }
  void insert(Vertex v) { bits_ |= std::uint64_t{1} << (v - 1); }
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  Vertex first() const { return std::countr_zero(bits_) + 1; }

  std::vector<Vertex> to_vector() const;

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Raised by parse_graph; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Finite simple graph on the vertex set 1..d. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Edges are normalized to u < v, sorted
  /// and deduplicated. Throws std::invalid_argument on loops or endpoints
  /// outside 1..d.
  Graph(int d, std::span<const Edge> edges);
  Graph(int d, std::initializer_list<Edge> edges)
      : Graph(d, std::span<const Edge>(edges.begin(), edges.size())) {}

  int num_vertices() const { return d_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet vertices() const { return VertexSet::all(d_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v - 1]); }
  int degree(Vertex v) const { return std::popcount(adj_[v - 1]); }
  bool adjacent(Vertex a, Vertex b) const { return (adj_[a - 1] >> (b - 1)) & 1U; }

  /// Union of neighborhoods of the members of s (may intersect s).
  VertexSet neighbors(VertexSet s) const;
  /// True when no edge has both endpoints in s.
  bool is_independent(VertexSet s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.d_ == b.d_ && a.edges_ == b.edges_;
  }

 private:
  int d_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// Parses the edge-list format: a header line "d m" followed by m lines
/// "i j". Blank lines and lines starting with '#' are skipped. Duplicate edge
/// lines collapse to one edge.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph.
std::string render_graph(const Graph& g);

/// Two-coloring of g if one exists. Each component is colored by BFS from its
/// smallest vertex, which is placed on the left side.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Connected components of the induced subgraph on `within`, ordered by
/// smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// True when the induced subgraph on `within` has no odd cycle.
bool is_bipartite_on(const Graph& g, VertexSet within);

struct InducedSubgraph {
  Graph graph;
  /// original[k] is the vertex of the parent graph relabeled to k + 1.
  std::vector<Vertex> original;
};

/// Subgraph induced on w, relabeled 1..|w| in increasing vertex order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);

/// Relabels vertex v as perm[v - 1].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// ---------------------------------------------------------------------------
// Graph families

struct FamilySpec;

namespace family {
struct Complete { int n; };
struct CompleteBipartite { int a; int b; };
struct Cycle { int n; };
/// Path on n vertices (n - 1 edges).
struct Path { int n; };
/// Star with center 1 and leaves 2..d.
struct Star { int d; };
/// Glues a path with `length` new edges and `length` new vertices onto `vertex`.
struct AttachPath {
  std::shared_ptr<const FamilySpec> base;
  Vertex vertex;
  int length;
};
/// Two triangles joined by a path with `length` edges.
struct TwoTrianglesPath { int length; };
}  // namespace family

struct FamilySpec {
  std::variant<family::Complete, family::CompleteBipartite, family::Cycle, family::Path,
               family::Star, family::AttachPath, family::TwoTrianglesPath>
      variant;
};

FamilySpec attach_path(FamilySpec base, Vertex vertex, int length);

/// Builds the named graph. Throws std::invalid_argument for invalid parameters.
Graph make_family(const FamilySpec& spec);

/// Parses "complete:4", "complete_bipartite:3,3", "cycle:5", "path:4",
/// "star:5", "two_triangles_path:2", optionally followed by any number of
/// "+path:<vertex>:<length>" suffixes.
FamilySpec parse_family(std::string_view text);

/// Inverse of parse_family.
std::string describe(const FamilySpec& spec);

}  // namespace edgering

#endif  // EDGERING_GRAPH_HPP
