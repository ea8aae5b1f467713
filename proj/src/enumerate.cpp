#include "edgering/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace edgering {

namespace {

// Bit of the pair {a, b} (0-based, a < b); pair (0,1) is the most
// significant so that codes compare like the adjacency rows read in order.
int pair_bit(int d, int a, int b) {
  const int idx = a * (2 * d - a - 1) / 2 + (b - a - 1);
  const int total = d * (d - 1) / 2;
  return total - 1 - idx;
}

std::vector<int> refine_colors(const Graph& g) {
  const int d = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(d));
  for (int v = 0; v < d; ++v) color[v] = g.degree(v + 1);
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(d));
    for (int v = 0; v < d; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.neighbors(v + 1).to_vector()) sig[v].second.push_back(color[w - 1]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < d; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                  distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), d_(g.num_vertices()), label_(d_, -1) {
    const std::vector<int> color = refine_colors(g);
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < d_; ++v) by_color[color[v]].push_back(v);
    int next = 0;
    for (auto& [c, members] : by_color) {
      cells_.push_back({members, next});
      next += static_cast<int>(members.size());
    }
  }

  std::uint64_t run() {
    place(0);
    return best_;
  }

 private:
  struct Cell {
    std::vector<int> members;
    int first_label;
  };

  void place(std::size_t cell) {
    if (cell == cells_.size()) {
      std::uint64_t code = 0;
      for (const Edge& e : g_.edges()) {
        int a = label_[e.u - 1];
        int b = label_[e.v - 1];
        if (a > b) std::swap(a, b);
        code |= std::uint64_t{1} << pair_bit(d_, a, b);
      }
      best_ = std::min(best_, code);
      return;
    }
    std::vector<int> order = cells_[cell].members;
    do {
      for (std::size_t k = 0; k < order.size(); ++k) {
        label_[order[k]] = cells_[cell].first_label + static_cast<int>(k);
      }
      place(cell + 1);
    } while (std::next_permutation(order.begin(), order.end()));
  }

  const Graph& g_;
  int d_;
  std::vector<int> label_;
  std::vector<Cell> cells_;
  std::uint64_t best_ = ~std::uint64_t{0};
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.num_vertices() > kMaxCanonicalVertices) {
    throw std::invalid_argument("canonical_code supports at most " +
                                std::to_string(kMaxCanonicalVertices) + " vertices");
  }
  if (g.num_vertices() <= 1) return 0;
  return CanonicalSearch(g).run();
}

Graph graph_from_code(int d, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      if ((code >> pair_bit(d, a, b)) & 1U) edges.push_back({a + 1, b + 1});
    }
  }
  return Graph(d, edges);
}

std::vector<Graph> graphs_up_to_isomorphism(int n) {
  if (n < 1 || n > kMaxCanonicalVertices) {
    throw std::invalid_argument("graphs_up_to_isomorphism: n outside 1.." +
                                std::to_string(kMaxCanonicalVertices));
  }
  std::vector<std::uint64_t> codes{0};
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t code : codes) {
      const Graph base = graph_from_code(k - 1, code);
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        std::vector<Edge> edges = base.edges();
        for (int v = 1; v < k; ++v) {
          if ((nb >> (v - 1)) & 1U) edges.push_back({v, k});
        }
        seen.insert(canonical_code(Graph(k, edges)));
      }
    }
    codes.assign(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t c : codes) out.push_back(graph_from_code(n, c));
  return out;
}

std::vector<Graph> connected_graphs_up_to_isomorphism(int n) {
  std::vector<Graph> all = graphs_up_to_isomorphism(n);
  std::erase_if(all, [](const Graph& g) { return !is_connected(g); });
  return all;
}

void for_each_connected_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 8) throw std::invalid_argument("labeled enumeration supports 1 <= n <= 8");
  std::vector<Edge> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back(pairs[k]);
    }
    if (static_cast<int>(edges.size()) < n - 1) continue;
    Graph g(n, edges);
    if (is_connected(g)) fn(g);
  }
}

}  // namespace edgering
