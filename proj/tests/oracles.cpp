#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using edgering::Edge;
using Rational = boost::multiprecision::cpp_rational;

namespace {

void best_matching(const std::vector<Edge>& edges, std::size_t from, std::uint64_t used, int size,
                   int& best) {
  best = std::max(best, size);
  if (size + static_cast<int>(edges.size() - from) <= best) return;
  for (std::size_t k = from; k < edges.size(); ++k) {
    const std::uint64_t bits = (1ULL << edges[k].u) | (1ULL << edges[k].v);
    if (used & bits) continue;
    best_matching(edges, k + 1, used | bits, size + 1, best);
  }
}

void best_cover(const Graph& g, std::uint64_t covered, int size, int& best) {
  if (size >= best) return;
  const int d = g.num_vertices();
  int v = 0;
  for (int i = 1; i <= d; ++i) {
    if (!(covered >> i & 1)) {
      v = i;
      break;
    }
  }
  if (v == 0) {
    best = size;
    return;
  }
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) continue;
    best_cover(g, covered | (1ULL << e.u) | (1ULL << e.v), size + 1, best);
  }
}

bool edge_between(const Graph& g, std::uint64_t a, std::uint64_t b) {
  for (const Edge& e : g.edges()) {
    if ((a >> e.u & 1) && (b >> e.v & 1)) return true;
    if ((a >> e.v & 1) && (b >> e.u & 1)) return true;
  }
  return false;
}

}  // namespace

int max_matching(const Graph& g) {
  const auto& span = g.edges();
  std::vector<Edge> edges(span.begin(), span.end());
  int best = 0;
  best_matching(edges, 0, 0, 0, best);
  return best;
}

int min_edge_cover(const Graph& g) {
  int best = static_cast<int>(g.num_edges()) + 1;
  best_cover(g, 0, 0, best);
  return best;
}

bool bipartite(const Graph& g, std::uint64_t within) {
  std::vector<int> verts;
  for (int v = 1; v <= g.num_vertices(); ++v) {
    if (within >> v & 1) verts.push_back(v);
  }
  const std::uint64_t colorings = 1ULL << verts.size();
  for (std::uint64_t c = 0; c < colorings; ++c) {
    std::uint64_t side = 0;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      if (c >> k & 1) side |= 1ULL << verts[k];
    }
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!(within >> e.u & 1) || !(within >> e.v & 1)) continue;
      if (((side >> e.u) & 1) == ((side >> e.v) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool has_odd_cycle(const Graph& g) {
  const int d = g.num_vertices();
  bool found = false;
  std::function<void(int, int, std::uint64_t, int)> walk = [&](int start, int v, std::uint64_t seen,
                                                                int len) {
    if (found) return;
    for (int w = 1; w <= d; ++w) {
      if (!g.adjacent(v, w)) continue;
      if (w == start && len >= 3 && len % 2 == 1) {
        found = true;
        return;
      }
      if (seen >> w & 1) continue;
      walk(start, w, seen | (1ULL << w), len + 1);
    }
  };
  for (int s = 1; s <= d && !found; ++s) walk(s, s, 1ULL << s, 1);
  return found;
}

bool odd_cycle_condition(const Graph& g) {
  const int d = g.num_vertices();
  std::vector<int> assign(d, 0);  // 0 none, 1 in A, 2 in B
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  std::map<std::uint64_t, bool> non_bip;
  auto nb = [&](std::uint64_t s) {
    auto it = non_bip.find(s);
    if (it != non_bip.end()) return it->second;
    return non_bip[s] = !bipartite(g, s);
  };
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = code;
    for (int i = 1; i <= d; ++i) {
      if (c % 3 == 1) a |= 1ULL << i;
      if (c % 3 == 2) b |= 1ULL << i;
      c /= 3;
    }
    if (std::popcount(a) < 3 || std::popcount(b) < 3) continue;
    if (edge_between(g, a, b)) continue;
    if (nb(a) && nb(b)) return false;
  }
  return true;
}

bool in_dilation(const Graph& g, int q, const Point& x) {
  const int d = g.num_vertices();
  const int n = static_cast<int>(g.num_edges());
  std::int64_t total = 0;
  for (auto v : x) {
    if (v < 0) return false;
    total += v;
  }
  if (total != 2 * q) return false;
  // Rows: one per vertex. Columns: n edge weights, d artificials, rhs.
  const int cols = n + d + 1;
  std::vector<std::vector<Rational>> t(d, std::vector<Rational>(cols));
  std::vector<int> basis(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < n; ++k) {
      const Edge& e = g.edges()[k];
      if (e.u == i + 1 || e.v == i + 1) t[i][k] = 1;
    }
    t[i][n + i] = 1;
    t[i][cols - 1] = x[i];
    basis[i] = n + i;
  }
  for (;;) {
    // Reduced costs of the phase-one objective (sum of artificials).
    int enter = -1;
    for (int j = 0; j < n + d && enter < 0; ++j) {
      Rational rc = j >= n ? 1 : 0;
      for (int i = 0; i < d; ++i) {
        if (basis[i] >= n) rc -= t[i][j];
      }
      if (rc < 0) enter = j;
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < d; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded cannot happen for this objective
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (int i = 0; i < d; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  Rational infeasibility = 0;
  for (int i = 0; i < d; ++i) {
    if (basis[i] >= n) infeasibility += t[i][cols - 1];
  }
  return infeasibility == 0;
}

std::set<Point> edge_sums(const Graph& g, int q) {
  std::set<Point> out;
  const int d = g.num_vertices();
  const int n = static_cast<int>(g.num_edges());
  Point cur(d, 0);
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      out.insert(cur);
      return;
    }
    for (int k = from; k < n; ++k) {
      const Edge& e = g.edges()[k];
      ++cur[e.u - 1];
      ++cur[e.v - 1];
      rec(k, left - 1);
      --cur[e.u - 1];
      --cur[e.v - 1];
    }
  };
  rec(0, q);
  return out;
}

std::vector<Point> box_candidates(int d, int q) {
  std::vector<Point> out;
  Point cur(d, 0);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
    if (i == d) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= std::min<std::int64_t>(q, left); ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, 2 * q);
  return out;
}

std::set<Point> lattice_points(const Graph& g, int q) {
  std::set<Point> out;
  for (const Point& x : box_candidates(g.num_vertices(), q)) {
    if (in_dilation(g, q, x)) out.insert(x);
  }
  return out;
}

std::vector<std::int64_t> h_star(const std::vector<std::uint64_t>& counts, int dim) {
  std::vector<std::int64_t> poly(counts.begin(), counts.end());
  for (int k = 0; k <= dim; ++k) {
    for (std::size_t i = poly.size(); i-- > 1;) poly[i] -= poly[i - 1];
  }
  poly.resize(std::min<std::size_t>(poly.size(), dim + 1));
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

int rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (auto& r : rows) m.emplace_back(r.begin(), r.end());
  const std::size_t cols = m.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

using Monomial = std::vector<int>;

std::vector<Monomial> monomials(int n, int q) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == q) {
      out.push_back(cur);
      return;
    }
    for (int k = from; k < n; ++k) {
      cur.push_back(k);
      rec(k);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Point image(const Graph& g, const Monomial& m) {
  Point x(g.num_vertices(), 0);
  for (int k : m) {
    ++x[g.edges()[k].u - 1];
    ++x[g.edges()[k].v - 1];
  }
  return x;
}

// A basis of I_q: within each group of monomials sharing an image, the
// differences to the first member.
std::vector<std::pair<Monomial, Monomial>> ideal_basis(const Graph& g, int q) {
  std::map<Point, std::vector<Monomial>> groups;
  for (const Monomial& m : monomials(static_cast<int>(g.num_edges()), q)) {
    groups[image(g, m)].push_back(m);
  }
  std::vector<std::pair<Monomial, Monomial>> out;
  for (const auto& [x, ms] : groups) {
    for (std::size_t k = 1; k < ms.size(); ++k) out.emplace_back(ms[k], ms[0]);
  }
  return out;
}

}  // namespace

int toric_generators_in_degree(const Graph& g, int q) {
  const int n = static_cast<int>(g.num_edges());
  const std::vector<Monomial> mons = monomials(n, q);
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = static_cast<int>(i);
  const int dim_iq = static_cast<int>(ideal_basis(g, q).size());

  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& [a, b] : ideal_basis(g, q - 1)) {
    for (int e = 0; e < n; ++e) {
      Monomial ae = a;
      Monomial be = b;
      ae.push_back(e);
      be.push_back(e);
      std::sort(ae.begin(), ae.end());
      std::sort(be.begin(), be.end());
      std::vector<std::int64_t> row(mons.size(), 0);
      row[index.at(ae)] += 1;
      row[index.at(be)] -= 1;
      rows.push_back(std::move(row));
    }
  }
  return dim_iq - rank(std::move(rows));
}

namespace {

bool connected_mask(int n, const std::vector<std::pair<int, int>>& edges) {
  std::uint64_t reached = 1ULL << 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [u, v] : edges) {
      const bool iu = reached >> u & 1;
      const bool iv = reached >> v & 1;
      if (iu != iv) {
        reached |= (1ULL << u) | (1ULL << v);
        grew = true;
      }
    }
  }
  return std::popcount(reached) == n;
}

}  // namespace

std::vector<Graph> connected_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Graph> out;
  const std::uint64_t limit = 1ULL << pairs.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    std::vector<std::pair<int, int>> chosen;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (bits >> k & 1) chosen.push_back(pairs[k]);
    }
    if (!connected_mask(n, chosen)) continue;
    std::vector<Edge> edges;
    for (auto [u, v] : chosen) edges.push_back({u, v});
    out.emplace_back(n, edges);
  }
  return out;
}

Graph random_graph(int d, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph(d, edges);
}

}  // namespace oracle
