#include "edgering/polytope.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace edgering {

std::string FacetProvenance::to_string() const {
  auto set_str = [](VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s.to_vector()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  };
  switch (source) {
    case FacetSource::kHull:
      return "hull";
    case FacetSource::kCoordinate:
      return "coordinate(" + std::to_string(vertex) + ")";
    case FacetSource::kFundamental:
      return "fundamental(" + set_str(t) + "," + set_str(t_prime) + ")";
    case FacetSource::kAcceptable:
      return "acceptable(" + set_str(t) + "," + set_str(t_prime) + ")";
  }
  return "unknown";
}

std::int64_t FacetInequality::evaluate(std::span<const std::int64_t> x) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
  return s;
}

std::string to_string(Location loc) {
  switch (loc) {
    case Location::kInterior:
      return "interior";
    case Location::kBoundary:
      return "boundary";
    case Location::kOutside:
      return "outside";
  }
  return "unknown";
}

namespace {

struct Block {
  VertexSet members;
  std::int64_t rhs;
};

std::vector<Block> hull_blocks(int d, const std::optional<Bipartition>& parts) {
  if (parts) return {{parts->left, 1}, {parts->right, 1}};
  return {{VertexSet::all(d), 2}};
}

void canonicalize_on(const std::vector<Block>& blocks, IntVector& normal, std::int64_t& offset) {
  for (const Block& b : blocks) {
    if (b.members.empty()) continue;
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    for (Vertex v : b.members.to_vector()) lo = std::min(lo, normal[v - 1]);
    for (Vertex v : b.members.to_vector()) normal[v - 1] -= lo;
    offset -= lo * b.rhs;
  }
  const std::int64_t g = gcd_of(normal);
  if (g == 0) throw std::logic_error("facet normal vanishes on the affine hull");
  if (offset % g != 0) throw std::logic_error("facet offset is not a multiple of the normal gcd");
  for (auto& x : normal) x /= g;
  offset /= g;
}

bool facet_less(const FacetInequality& a, const FacetInequality& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  if (a.offset != b.offset) return a.offset < b.offset;
  return a.provenance.source < b.provenance.source;
}

void sort_and_dedupe(std::vector<FacetInequality>& f) {
  std::sort(f.begin(), f.end(), facet_less);
  f.erase(std::unique(f.begin(), f.end(),
                      [](const FacetInequality& a, const FacetInequality& b) {
                        return a.same_halfspace(b);
                      }),
          f.end());
}

void require_connected_with_edges(const Graph& g) {
  if (g.num_edges() == 0) throw std::invalid_argument("edge polytope of a graph with no edges");
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
}

}  // namespace

EdgePolytope::EdgePolytope(const Graph& g) : graph_(g), bipartition_(is_bipartite(g)) {
  require_connected_with_edges(g);
  const int d = g.num_vertices();
  vertices_.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    IntVector v(static_cast<std::size_t>(d), 0);
    v[e.u - 1] = 1;
    v[e.v - 1] = 1;
    vertices_.push_back(std::move(v));
  }
  equations_.push_back({IntVector(static_cast<std::size_t>(d), 1), 2});
  if (bipartition_) {
    IntVector side(static_cast<std::size_t>(d), 0);
    for (Vertex v : bipartition_->left.to_vector()) side[v - 1] = 1;
    equations_.push_back({std::move(side), 1});
  }

  const AffineChart chart = affine_chart(vertices_);
  dim_ = chart.dim();
  const int expected = bipartition_ ? d - 2 : d - 1;
  if (dim_ != expected) {
    throw std::logic_error("edge polytope dimension " + std::to_string(dim_) + ", expected " +
                           std::to_string(expected));
  }
  if (dim_ < 1) return;

  std::vector<IntVector> projected;
  projected.reserve(vertices_.size());
  for (const IntVector& v : vertices_) {
    IntVector p;
    p.reserve(chart.coordinates.size());
    for (int c : chart.coordinates) p.push_back(v[c]);
    projected.push_back(std::move(p));
  }
  for (HalfSpace& h : full_dimensional_hull(projected)) {
    FacetInequality f;
    f.normal.assign(static_cast<std::size_t>(d), 0);
    for (std::size_t k = 0; k < chart.coordinates.size(); ++k) {
      f.normal[chart.coordinates[k]] = h.normal[k];
    }
    f.offset = h.offset;
    canonicalize(f.normal, f.offset);
    facets_.push_back(std::move(f));
  }
  sort_and_dedupe(facets_);
}

void EdgePolytope::canonicalize(IntVector& normal, std::int64_t& offset) const {
  canonicalize_on(hull_blocks(ambient_dim(), bipartition_), normal, offset);
}

Location EdgePolytope::contains(int q, std::span<const std::int64_t> point) const {
  if (static_cast<int>(point.size()) != ambient_dim()) {
    throw std::invalid_argument("point has dimension " + std::to_string(point.size()) +
                                ", expected " + std::to_string(ambient_dim()));
  }
  if (q < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  for (const AffineEquation& eq : equations_) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < point.size(); ++i) s += eq.coeffs[i] * point[i];
    if (s != eq.rhs * q) return Location::kOutside;
  }
  bool boundary = false;
  for (const FacetInequality& f : facets_) {
    const std::int64_t slack = f.evaluate(point) - f.offset * q;
    if (slack < 0) return Location::kOutside;
    if (slack == 0) boundary = true;
  }
  return boundary ? Location::kBoundary : Location::kInterior;
}

EdgePolytope edge_polytope(const Graph& g) { return EdgePolytope(g); }

const std::vector<FacetInequality>& facets(const EdgePolytope& p) { return p.facets(); }

namespace {

// Vertex set of the bipartite graph T-N(T) is connected (T independent).
bool induced_bipartite_connected(const Graph& g, VertexSet t) {
  VertexSet reached{t.first()};
  for (;;) {
    VertexSet grown = g.neighbors(g.neighbors(reached)) & t;
    if (grown == reached) break;
    reached = grown | reached;
  }
  return reached == t;
}

}  // namespace

std::vector<FacetInequality> predicted_facets(const Graph& g) {
  require_connected_with_edges(g);
  const int d = g.num_vertices();
  if (d > 24) throw std::invalid_argument("predicted_facets enumerates 2^d subsets; d <= 24");
  const std::optional<Bipartition> parts = is_bipartite(g);
  const int dim = parts ? d - 2 : d - 1;
  std::vector<FacetInequality> out;
  if (dim < 1) return out;
  const std::vector<Block> blocks = hull_blocks(d, parts);
  const VertexSet all = g.vertices();

  auto emit = [&](IntVector normal, FacetProvenance prov) {
    FacetInequality f{std::move(normal), 0, prov};
    canonicalize_on(blocks, f.normal, f.offset);
    out.push_back(std::move(f));
  };

  for (Vertex i = 1; i <= d; ++i) {
    const VertexSet rest = all - VertexSet{i};
    const auto comps = connected_components(g, rest);
    bool qualifies = false;
    if (parts) {
      qualifies = comps.size() == 1;  // ordinary
    } else {
      qualifies = std::none_of(comps.begin(), comps.end(),
                               [&](VertexSet c) { return is_bipartite_on(g, c); });  // regular
    }
    if (!qualifies) continue;
    IntVector normal(static_cast<std::size_t>(d), 0);
    normal[i - 1] = 1;
    emit(std::move(normal), {FacetSource::kCoordinate, i, {}, {}});
  }

  const std::uint64_t limit = std::uint64_t{1} << d;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const VertexSet t(bits);
    if (!g.is_independent(t)) continue;
    const VertexSet nbrs = g.neighbors(t);
    if (nbrs.empty() || !induced_bipartite_connected(g, t)) continue;
    const VertexSet rest = all - t - nbrs;
    const auto comps = connected_components(g, rest);
    bool qualifies = false;
    if (parts) {
      qualifies = comps.size() == 1;  // acceptable
    } else {
      qualifies = std::none_of(comps.begin(), comps.end(),
                               [&](VertexSet c) { return is_bipartite_on(g, c); });  // fundamental
    }
    if (!qualifies) continue;
    IntVector normal(static_cast<std::size_t>(d), 0);
    for (Vertex v : nbrs.to_vector()) normal[v - 1] = 1;
    for (Vertex v : t.to_vector()) normal[v - 1] = -1;
    emit(std::move(normal),
         {parts ? FacetSource::kAcceptable : FacetSource::kFundamental, 0, t, nbrs});
  }
  sort_and_dedupe(out);
  return out;
}

bool same_facet_set(std::span<const FacetInequality> a, std::span<const FacetInequality> b) {
  auto key = [](std::span<const FacetInequality> f) {
    std::vector<std::pair<IntVector, std::int64_t>> k;
    for (const auto& x : f) k.emplace_back(x.normal, x.offset);
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    return k;
  };
  return key(a) == key(b);
}

}  // namespace edgering
