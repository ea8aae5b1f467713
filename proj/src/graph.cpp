#include "edgering/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace edgering {

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

Graph::Graph(int d, std::span<const Edge> edges) : d_(d), adj_(static_cast<std::size_t>(d), 0) {
  if (d < 0 || d > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(d) + " outside 0.." +
                                std::to_string(kMaxVertices));
  }
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > d) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint outside 1.." + std::to_string(d));
    }
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
    adj_[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
  }
}

VertexSet Graph::neighbors(VertexSet s) const {
  std::uint64_t out = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) out |= adj_[std::countr_zero(b)];
  return VertexSet(out);
}

bool Graph::is_independent(VertexSet s) const {
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    if (adj_[std::countr_zero(b)] & s.bits()) return false;
  }
  return true;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  int d = 0;
  int m = 0;
  int seen = 0;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) throw ParseError(line_no, "expected two integers");
    int a = parse_int(toks[0], line_no);
    int b = parse_int(toks[1], line_no);
    if (!have_header) {
      if (a < 0 || a > kMaxVertices) throw ParseError(line_no, "vertex count out of range");
      if (b < 0) throw ParseError(line_no, "negative edge count");
      d = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a < 1 || a > d || b < 1 || b > d) {
      throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(d));
    }
    if (a == b) throw ParseError(line_no, "loop edge at vertex " + std::to_string(a));
    ++seen;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  if (!have_header) throw ParseError(line_no, "missing header line 'd m'");
  if (seen != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(seen));
  }
  return Graph(d, edges);
}

std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int d = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(d) + 1, -1);
  std::vector<Vertex> queue;
  Bipartition parts;
  for (Vertex s = 1; s <= d; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v).to_vector()) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 1; v <= d; ++v) (color[v] == 0 ? parts.left : parts.right).insert(v);
  return parts;
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet remaining = within;
  while (!remaining.empty()) {
    VertexSet comp{remaining.first()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = (g.neighbors(frontier) & remaining) - comp;
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    remaining = remaining - comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite_on(const Graph& g, VertexSet within) {
  VertexSet side_a;
  VertexSet side_b;
  for (VertexSet comp : connected_components(g, within)) {
    VertexSet cur{comp.first()};
    VertexSet a = cur;
    VertexSet b;
    bool on_a = true;
    while (!cur.empty()) {
      VertexSet next = (g.neighbors(cur) & comp) - (a | b);
      if (on_a) {
        b = b | next;
      } else {
        a = a | next;
      }
      on_a = !on_a;
      cur = next;
    }
    side_a = side_a | a;
    side_b = side_b | b;
  }
  return g.is_independent(side_a) && g.is_independent(side_b);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
  if (w.empty()) throw std::invalid_argument("induced subgraph on an empty vertex set");
  if (!(w - g.vertices()).empty()) {
    throw std::invalid_argument("induced subgraph: vertex set is not contained in 1..d");
  }
  InducedSubgraph out;
  out.original = w.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (std::size_t k = 0; k < out.original.size(); ++k) {
    index[out.original[k]] = static_cast<int>(k) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (w.contains(e.u) && w.contains(e.v)) edges.push_back({index[e.u], index[e.v]});
  }
  out.graph = Graph(w.size(), edges);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1]});
  return Graph(g.num_vertices(), edges);
}

// ---------------------------------------------------------------------------

FamilySpec attach_path(FamilySpec base, Vertex vertex, int length) {
  return FamilySpec{family::AttachPath{std::make_shared<const FamilySpec>(std::move(base)),
                                       vertex, length}};
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid family parameters: " + what);
}

struct FamilyBuilder {
  Graph operator()(const family::Complete& f) const {
    require(f.n >= 1, "complete needs n >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= f.n; ++i)
      for (int j = i + 1; j <= f.n; ++j) e.push_back({i, j});
    return Graph(f.n, e);
  }
  Graph operator()(const family::CompleteBipartite& f) const {
    require(f.a >= 1 && f.b >= 1, "complete_bipartite needs a, b >= 1");
    std::vector<Edge> e;
    for (int i = 1; i <= f.a; ++i)
      for (int j = 1; j <= f.b; ++j) e.push_back({i, f.a + j});
    return Graph(f.a + f.b, e);
  }
  Graph operator()(const family::Cycle& f) const {
    require(f.n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 1; i <= f.n; ++i) e.push_back({i, i % f.n + 1});
    return Graph(f.n, e);
  }
  Graph operator()(const family::Path& f) const {
    require(f.n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 1; i < f.n; ++i) e.push_back({i, i + 1});
    return Graph(f.n, e);
  }
  Graph operator()(const family::Star& f) const {
    require(f.d >= 2, "star needs d >= 2");
    std::vector<Edge> e;
    for (int i = 2; i <= f.d; ++i) e.push_back({1, i});
    return Graph(f.d, e);
  }
  Graph operator()(const family::AttachPath& f) const {
    require(f.base != nullptr, "attach_path needs a base graph");
    require(f.length >= 0, "attach_path needs length >= 0");
    Graph base = make_family(*f.base);
    const int d = base.num_vertices();
    require(f.vertex >= 1 && f.vertex <= d, "attach_path vertex outside the base graph");
    require(d + f.length <= kMaxVertices, "attach_path exceeds the vertex limit");
    std::vector<Edge> e = base.edges();
    Vertex prev = f.vertex;
    for (int k = 1; k <= f.length; ++k) {
      e.push_back({prev, d + k});
      prev = d + k;
    }
    return Graph(d + f.length, e);
  }
  Graph operator()(const family::TwoTrianglesPath& f) const {
    require(f.length >= 1, "two_triangles_path needs length >= 1");
    // Triangle {1,2,3}, path 3 - 4 - ... - (3+l), triangle {3+l, 4+l, 5+l}.
    const int l = f.length;
    std::vector<Edge> e{{1, 2}, {1, 3}, {2, 3}};
    for (int k = 3; k < 3 + l; ++k) e.push_back({k, k + 1});
    e.push_back({3 + l, 4 + l});
    e.push_back({3 + l, 5 + l});
    e.push_back({4 + l, 5 + l});
    return Graph(5 + l, e);
  }
};

std::vector<int> parse_args(std::string_view s, std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    std::string_view tok = s.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("malformed family spec '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace

Graph make_family(const FamilySpec& spec) { return std::visit(FamilyBuilder{}, spec.variant); }

FamilySpec parse_family(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    parts.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  auto bad = [&] {
    return std::invalid_argument("malformed family spec '" + std::string(text) + "'");
  };

  std::string_view head = parts.front();
  std::size_t colon = head.find(':');
  if (colon == std::string_view::npos) throw bad();
  std::string_view name = head.substr(0, colon);
  std::vector<int> args = parse_args(head.substr(colon + 1), text);
  auto arity = [&](std::size_t n) {
    if (args.size() != n) throw bad();
  };

  FamilySpec spec;
  if (name == "complete") {
    arity(1);
    spec.variant = family::Complete{args[0]};
  } else if (name == "complete_bipartite") {
    arity(2);
    spec.variant = family::CompleteBipartite{args[0], args[1]};
  } else if (name == "cycle") {
    arity(1);
    spec.variant = family::Cycle{args[0]};
  } else if (name == "path") {
    arity(1);
    spec.variant = family::Path{args[0]};
  } else if (name == "star") {
    arity(1);
    spec.variant = family::Star{args[0]};
  } else if (name == "two_triangles_path") {
    arity(1);
    spec.variant = family::TwoTrianglesPath{args[0]};
  } else {
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  }

  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::string_view p = parts[k];
    if (!p.starts_with("path:")) throw bad();
    p.remove_prefix(5);
    std::size_t c = p.find(':');
    if (c == std::string_view::npos) throw bad();
    std::vector<int> v = parse_args(p.substr(0, c), text);
    std::vector<int> l = parse_args(p.substr(c + 1), text);
    if (v.size() != 1 || l.size() != 1) throw bad();
    spec = attach_path(std::move(spec), v[0], l[0]);
  }
  return spec;
}

namespace {

struct Describer {
  std::string operator()(const family::Complete& f) const {
    return "complete:" + std::to_string(f.n);
  }
  std::string operator()(const family::CompleteBipartite& f) const {
    return "complete_bipartite:" + std::to_string(f.a) + "," + std::to_string(f.b);
  }
  std::string operator()(const family::Cycle& f) const { return "cycle:" + std::to_string(f.n); }
  std::string operator()(const family::Path& f) const { return "path:" + std::to_string(f.n); }
  std::string operator()(const family::Star& f) const { return "star:" + std::to_string(f.d); }
  std::string operator()(const family::AttachPath& f) const {
    return describe(*f.base) + "+path:" + std::to_string(f.vertex) + ":" +
           std::to_string(f.length);
  }
  std::string operator()(const family::TwoTrianglesPath& f) const {
    return "two_triangles_path:" + std::to_string(f.length);
  }
};

}  // namespace

std::string describe(const FamilySpec& spec) { return std::visit(Describer{}, spec.variant); }

}  // namespace edgering
