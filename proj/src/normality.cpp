#include "edgering/normality.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgering {

VertexSet OddCycle::vertex_set() const {
  VertexSet s;
  for (Vertex v : vertices) s.insert(v);
  return s;
}

namespace {

// Grows induced paths start = p0, p1, ..., pk with every vertex larger than
// start. A vertex adjacent to start closes a chordless cycle; the path stops
// there since any extension would carry the chord back to start.
class ChordlessCycleSearch {
 public:
  ChordlessCycleSearch(const Graph& g, std::vector<OddCycle>& out) : g_(g), out_(out) {}

  void run() {
    for (Vertex s = 1; s <= g_.num_vertices(); ++s) {
      path_.assign(1, s);
      extend(s, VertexSet(), VertexSet{s});
    }
  }

 private:
  // `inner` holds p1..p(k-1); a new vertex must avoid their neighborhoods.
  void extend(Vertex start, VertexSet inner, VertexSet on_path) {
    const Vertex tail = path_.back();
    const VertexSet blocked = g_.neighbors(inner) | on_path;
    for (Vertex w : (g_.neighbors(tail) - blocked).to_vector()) {
      if (w < start) continue;
      const bool closes = path_.size() >= 2 && g_.adjacent(w, start);
      if (closes) {
        if (path_.size() % 2 == 0 && path_[1] < w) {
          OddCycle c{path_};
          c.vertices.push_back(w);
          out_.push_back(std::move(c));
        }
        continue;
      }
      path_.push_back(w);
      VertexSet next_inner = inner;
      if (path_.size() > 2) next_inner.insert(tail);
      VertexSet next_on = on_path;
      next_on.insert(w);
      extend(start, next_inner, next_on);
      path_.pop_back();
    }
  }

  const Graph& g_;
  std::vector<OddCycle>& out_;
  std::vector<Vertex> path_;
};

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
}

}  // namespace

std::vector<OddCycle> enumerate_minimal_odd_cycles(const Graph& g) {
  std::vector<OddCycle> out;
  ChordlessCycleSearch(g, out).run();
  std::sort(out.begin(), out.end(),
            [](const OddCycle& a, const OddCycle& b) { return a.vertices < b.vertices; });
  return out;
}

bool satisfies_odd_cycle_condition(const Graph& g) {
  require_connected(g);
  std::vector<OddCycle> cycles = enumerate_minimal_odd_cycles(g);
  std::vector<VertexSet> sets;
  sets.reserve(cycles.size());
  for (const OddCycle& c : cycles) sets.push_back(c.vertex_set());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const VertexSet reach = g.neighbors(sets[i]);
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!(sets[i] & sets[j]).empty()) continue;
      if ((reach & sets[j]).empty()) return false;
    }
  }
  return true;
}

bool is_normal(const Graph& g) {
  require_connected(g);
  if (is_bipartite(g)) return true;
  return satisfies_odd_cycle_condition(g);
}

}  // namespace edgering
