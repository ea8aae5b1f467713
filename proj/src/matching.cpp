#include "edgering/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgering {

bool is_matching(const Graph& g, std::span<const Edge> edges) {
  VertexSet used;
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > g.num_vertices() || !g.adjacent(e.u, e.v)) return false;
    if (used.contains(e.u) || used.contains(e.v)) return false;
    used.insert(e.u);
    used.insert(e.v);
  }
  return true;
}

bool is_edge_cover(const Graph& g, std::span<const Edge> edges) {
  VertexSet covered;
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > g.num_vertices() || !g.adjacent(e.u, e.v)) return false;
    covered.insert(e.u);
    covered.insert(e.v);
  }
  return covered == g.vertices();
}

namespace {

// Edmonds' blossom algorithm, 0-based. Each phase grows an alternating BFS
// forest from one exposed root, contracting odd cycles through `base`.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : n_(g.num_vertices()),
        adj_(static_cast<std::size_t>(n_)),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, false),
        in_blossom_(n_, false) {
    for (const Edge& e : g.edges()) {
      adj_[e.u - 1].push_back(e.v - 1);
      adj_[e.v - 1].push_back(e.u - 1);
    }
  }

  std::vector<int> run() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_path(root);
      while (v != -1) {
        int pv = parent_[v];
        int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  std::vector<int> mate = Blossom(g).run();
  Matching m;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] > v) m.edges.push_back({v + 1, mate[v] + 1});
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

EdgeCover min_edge_cover(const Graph& g) {
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (g.degree(v) == 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is isolated; no edge cover exists");
    }
  }
  Matching m = maximum_matching(g);
  EdgeCover cover{m.edges};
  VertexSet matched;
  for (const Edge& e : m.edges) {
    matched.insert(e.u);
    matched.insert(e.v);
  }
  for (Vertex v : (g.vertices() - matched).to_vector()) {
    // Unmatched vertices are pairwise non-adjacent (else the matching grows),
    // so each needs its own edge.
    Vertex w = g.neighbors(v).first();
    cover.edges.push_back({std::min(v, w), std::max(v, w)});
  }
  std::sort(cover.edges.begin(), cover.edges.end());
  return cover;
}

}  // namespace edgering
