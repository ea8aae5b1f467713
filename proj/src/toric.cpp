#include "edgering/toric.hpp"

#include <algorithm>
#include <numeric>

#include "edgering/ehrhart.hpp"

namespace edgering {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

// Visits every nondecreasing index sequence of length q over 0..n-1.
template <typename F>
void for_each_multiset(int n, int q, F&& f) {
  EdgeMonomial m(static_cast<std::size_t>(q), 0);
  if (q == 0) {
    f(m);
    return;
  }
  for (;;) {
    f(m);
    int i = q - 1;
    while (i >= 0 && m[i] == n - 1) --i;
    if (i < 0) return;
    ++m[i];
    for (int j = i + 1; j < q; ++j) m[j] = m[i];
  }
}

std::vector<Fiber> all_fibers(const Graph& g, int q, const ToricBudget& budget) {
  if (q < 1) throw std::invalid_argument("fibers need q >= 1");
  const int n = static_cast<int>(g.num_edges());
  const int d = g.num_vertices();
  const std::int64_t total = binomial(n + q - 1, q);
  if (static_cast<std::uint64_t>(total) > budget.max_monomials) {
    throw BudgetExceeded("degree " + std::to_string(q) + " has " + std::to_string(total) +
                         " monomials, budget is " + std::to_string(budget.max_monomials));
  }

  // Multidegree keys in radix q+1, first vertex most significant.
  std::vector<std::uint64_t> place(static_cast<std::size_t>(d));
  unsigned __int128 p = 1;
  for (int i = d - 1; i >= 0; --i) {
    place[i] = static_cast<std::uint64_t>(p);
    p *= static_cast<unsigned>(q + 1);
    if (p > (static_cast<unsigned __int128>(1) << 63)) {
      throw std::overflow_error("fiber multidegree keys exceed 64 bits");
    }
  }
  std::vector<std::uint64_t> weight;
  for (const Edge& e : g.edges()) weight.push_back(place[e.u - 1] + place[e.v - 1]);

  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(total) * q);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
  keyed.reserve(static_cast<std::size_t>(total));
  std::uint32_t idx = 0;
  for_each_multiset(n, q, [&](const EdgeMonomial& m) {
    std::uint64_t key = 0;
    for (int e : m) key += weight[e];
    flat.insert(flat.end(), m.begin(), m.end());
    keyed.emplace_back(key, idx++);
  });
  std::sort(keyed.begin(), keyed.end());

  std::vector<Fiber> out;
  for (std::size_t a = 0; a < keyed.size();) {
    std::size_t b = a;
    while (b < keyed.size() && keyed[b].first == keyed[a].first) ++b;
    Fiber f;
    f.multidegree.assign(static_cast<std::size_t>(d), 0);
    const int* first = &flat[static_cast<std::size_t>(keyed[a].second) * q];
    for (int k = 0; k < q; ++k) {
      const Edge& e = g.edges()[first[k]];
      ++f.multidegree[e.u - 1];
      ++f.multidegree[e.v - 1];
    }
    for (std::size_t k = a; k < b; ++k) {
      const int* m = &flat[static_cast<std::size_t>(keyed[k].second) * q];
      f.monomials.emplace_back(m, m + q);
    }
    out.push_back(std::move(f));
    a = b;
  }
  return out;
}

}  // namespace

std::vector<Fiber> fibers(const Graph& g, int q, const ToricBudget& budget) {
  std::vector<Fiber> all = all_fibers(g, q, budget);
  std::erase_if(all, [](const Fiber& f) { return f.monomials.size() < 2; });
  return all;
}

int fiber_components(const Fiber& f) {
  DisjointSets sets(f.monomials.size());
  std::vector<std::size_t> owner;
  std::vector<bool> has_owner;
  for (std::size_t i = 0; i < f.monomials.size(); ++i) {
    for (int var : f.monomials[i]) {
      if (static_cast<std::size_t>(var) >= owner.size()) {
        owner.resize(static_cast<std::size_t>(var) + 1);
        has_owner.resize(static_cast<std::size_t>(var) + 1, false);
      }
      if (has_owner[var]) {
        sets.unite(owner[var], i);
      } else {
        owner[var] = i;
        has_owner[var] = true;
      }
    }
  }
  int comps = 0;
  for (std::size_t i = 0; i < f.monomials.size(); ++i) {
    if (sets.find(i) == i) ++comps;
  }
  return comps;
}

GeneratorProfile minimal_generator_degrees(const Graph& g, int q_max, const ToricBudget& budget) {
  if (q_max < 2) throw std::invalid_argument("minimal_generator_degrees needs q_max >= 2");
  GeneratorProfile prof;
  prof.complete_up_to = q_max;
  for (int q = 2; q <= q_max; ++q) {
    for (const Fiber& f : fibers(g, q, budget)) {
      const int extra = fiber_components(f) - 1;
      prof.degrees.insert(prof.degrees.end(), static_cast<std::size_t>(extra), q);
    }
  }
  return prof;
}

std::optional<int> principal_regularity(const Graph& g, int q_max, const ToricBudget& budget) {
  const GeneratorProfile prof = minimal_generator_degrees(g, q_max, budget);
  if (prof.degrees.size() != 1) return std::nullopt;
  return prof.degrees.front() - 1;
}

}  // namespace edgering
