#include "edgering/ehrhart.hpp"

#include <algorithm>
#include <limits>
#include <array>

#include "edgering/matching.hpp"
#include "edgering/normality.hpp"

namespace edgering {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
  }
  return static_cast<std::int64_t>(r);
}

namespace {

// Depth-first walk over x in Z^d with 0 <= x_i <= q, the affine hull
// equations scaled by q, and every facet inequality scaled by q. Each partial
// assignment is pruned when some facet cannot be met by the remaining mass.
class LatticeWalker {
 public:
  using Visit = std::function<bool(std::span<const std::int64_t>, bool)>;

  LatticeWalker(const EdgePolytope& p, int q, bool interior_only)
      : d_(p.ambient_dim()), q_(q), nf_(p.facets().size()) {
    block_.assign(static_cast<std::size_t>(d_), 0);
    if (p.bipartite()) {
      for (Vertex v : p.bipartition()->right.to_vector()) block_[v - 1] = 1;
      mass_ = {q, q};
    } else {
      mass_ = {2 * static_cast<std::int64_t>(q), 0};
    }
    coeff_.resize(nf_ * d_);
    threshold_.resize(nf_);
    strict_.resize(nf_);
    for (std::size_t k = 0; k < nf_; ++k) {
      const FacetInequality& f = p.facets()[k];
      for (int i = 0; i < d_; ++i) coeff_[k * d_ + i] = f.normal[i];
      strict_[k] = f.offset * q;
      threshold_[k] = strict_[k] + (interior_only ? 1 : 0);
    }
    // best_[(k * (d + 1) + i) * 2 + b]: largest positive coefficient of facet k
    // among coordinates >= i in block b.
    best_.assign(nf_ * (d_ + 1) * 2, 0);
    for (std::size_t k = 0; k < nf_; ++k) {
      for (int i = d_ - 1; i >= 0; --i) {
        for (int b = 0; b < 2; ++b) {
          best_[(k * (d_ + 1) + i) * 2 + b] = best_[(k * (d_ + 1) + i + 1) * 2 + b];
        }
        auto& slot = best_[(k * (d_ + 1) + i) * 2 + block_[i]];
        slot = std::max(slot, std::max<std::int64_t>(coeff_[k * d_ + i], 0));
      }
    }
    slots_after_.assign((d_ + 1) * 2, 0);
    for (int i = d_ - 1; i >= 0; --i) {
      for (int b = 0; b < 2; ++b) slots_after_[i * 2 + b] = slots_after_[(i + 1) * 2 + b];
      ++slots_after_[i * 2 + block_[i]];
    }
    partial_.assign(nf_ * (d_ + 1), 0);
    x_.assign(static_cast<std::size_t>(d_), 0);
  }

  bool run(const Visit& visit) {
    visit_ = &visit;
    return step(0, mass_[0], mass_[1]);
  }

 private:
  bool step(int i, std::int64_t rem0, std::int64_t rem1) {
    if (i == d_) {
      bool interior = true;
      const std::int64_t* part = &partial_[nf_ * d_];
      for (std::size_t k = 0; k < nf_; ++k) {
        if (part[k] <= strict_[k]) interior = false;
      }
      return (*visit_)(x_, interior);
    }
    const int b = block_[i];
    const std::int64_t rem = b == 0 ? rem0 : rem1;
    const std::int64_t later = slots_after_[(i + 1) * 2 + b];
    const std::int64_t lo = std::max<std::int64_t>(0, rem - q_ * later);
    const std::int64_t hi = std::min<std::int64_t>(q_, rem);
    const std::int64_t* cur = &partial_[nf_ * i];
    std::int64_t* nxt = &partial_[nf_ * (i + 1)];
    for (std::int64_t v = lo; v <= hi; ++v) {
      const std::int64_t r0 = b == 0 ? rem0 - v : rem0;
      const std::int64_t r1 = b == 1 ? rem1 - v : rem1;
      bool feasible = true;
      for (std::size_t k = 0; k < nf_; ++k) {
        nxt[k] = cur[k] + coeff_[k * d_ + i] * v;
        const std::int64_t* bk = &best_[(k * (d_ + 1) + i + 1) * 2];
        if (nxt[k] + r0 * bk[0] + r1 * bk[1] < threshold_[k]) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      x_[i] = v;
      if (!step(i + 1, r0, r1)) return false;
    }
    x_[i] = 0;
    return true;
  }

  int d_;
  std::int64_t q_;
  std::size_t nf_;
  std::vector<int> block_;
  std::array<std::int64_t, 2> mass_{};
  std::vector<std::int64_t> coeff_;
  std::vector<std::int64_t> threshold_;
  std::vector<std::int64_t> strict_;
  std::vector<std::int64_t> best_;
  std::vector<std::int64_t> slots_after_;
  std::vector<std::int64_t> partial_;
  IntVector x_;
  const Visit* visit_ = nullptr;
};

// Mixed-radix packing of points with coordinates in 0..radix-1; the first
// coordinate is most significant, so key order is lexicographic order.
class KeyCodec {
 public:
  KeyCodec(int d, int max_coord) : place_(static_cast<std::size_t>(d)) {
    const unsigned __int128 radix = static_cast<unsigned __int128>(max_coord) + 1;
    unsigned __int128 p = 1;
    for (int i = d - 1; i >= 0; --i) {
      place_[i] = static_cast<std::uint64_t>(p);
      p *= radix;
      if (p > (static_cast<unsigned __int128>(1) << 63)) {
        throw std::overflow_error("lattice point keys exceed 64 bits (d=" + std::to_string(d) +
                                  ", max coordinate " + std::to_string(max_coord) + ")");
      }
    }
    span_ = static_cast<std::uint64_t>(p);
  }

  std::uint64_t encode(std::span<const std::int64_t> x) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < place_.size(); ++i) {
      k += static_cast<std::uint64_t>(x[i]) * place_[i];
    }
    return k;
  }
  LatticePoint decode(std::uint64_t key) const {
    LatticePoint x(place_.size());
    for (std::size_t i = 0; i < place_.size(); ++i) {
      x[i] = static_cast<std::int64_t>(key / place_[i]);
      key %= place_[i];
    }
    return x;
  }
  std::uint64_t edge_weight(const Edge& e) const { return place_[e.u - 1] + place_[e.v - 1]; }
  /// Number of distinct keys.
  std::uint64_t span() const { return span_; }

 private:
  std::vector<std::uint64_t> place_;
  std::uint64_t span_ = 0;
};

std::vector<std::uint64_t> lattice_keys(const EdgePolytope& p, int q, const KeyCodec& codec) {
  std::vector<std::uint64_t> keys;
  for_each_lattice_point(p, q, false, [&](std::span<const std::int64_t> x, bool) {
    keys.push_back(codec.encode(x));
    return true;
  });
  return keys;  // already lexicographic
}

// Runs the sumset recursion to q_max, handing each round's sorted key set to
// on_round(q, keys).
void sumset_rounds(const Graph& g, int q_max, const KeyCodec& codec,
                   const std::function<void(int, const std::vector<std::uint64_t>&)>& on_round) {
  std::vector<std::uint64_t> weights;
  for (const Edge& e : g.edges()) weights.push_back(codec.edge_weight(e));
  std::vector<std::uint64_t> cur{0};
  on_round(0, cur);
  constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 28;
  std::vector<bool> seen;
  if (codec.span() <= kDenseLimit) seen.assign(codec.span(), false);
  for (int k = 1; k <= q_max; ++k) {
    std::vector<std::uint64_t> next;
    if (!seen.empty()) {
      for (std::uint64_t s : cur) {
        for (std::uint64_t w : weights) {
          const std::uint64_t key = s + w;
          if (!seen[key]) {
            seen[key] = true;
            next.push_back(key);
          }
        }
      }
      for (std::uint64_t key : next) seen[key] = false;
      std::sort(next.begin(), next.end());
    } else {
      next.reserve(cur.size() * weights.size());
      for (std::uint64_t s : cur)
        for (std::uint64_t w : weights) next.push_back(s + w);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    cur = std::move(next);
    on_round(k, cur);
  }
}

std::vector<LatticePoint> decode_all(const std::vector<std::uint64_t>& keys, const KeyCodec& c) {
  std::vector<LatticePoint> out;
  out.reserve(keys.size());
  for (std::uint64_t k : keys) out.push_back(c.decode(k));
  return out;
}

void require_normal(const Graph& g, const char* what) {
  if (!is_normal(g)) {
    throw NotApplicable(std::string(what) + " is defined here only for normal edge rings");
  }
}

}  // namespace

bool for_each_lattice_point(const EdgePolytope& p, int q, bool interior_only,
                            const std::function<bool(std::span<const std::int64_t>, bool)>& visit) {
  if (q < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  LatticeWalker walker(p, q, interior_only);
  return walker.run(visit);
}

LatticeCount count_lattice_points(const EdgePolytope& p, int q) {
  LatticeCount c;
  for_each_lattice_point(p, q, false, [&](std::span<const std::int64_t>, bool interior) {
    ++c.total;
    if (interior) ++c.interior;
    return true;
  });
  return c;
}

std::vector<LatticePoint> lattice_points(const EdgePolytope& p, int q) {
  std::vector<LatticePoint> out;
  for_each_lattice_point(p, q, false, [&](std::span<const std::int64_t> x, bool) {
    out.emplace_back(x.begin(), x.end());
    return true;
  });
  return out;
}

std::vector<LatticePoint> lattice_points(const Graph& g, int q) {
  if (q == 0) return {LatticePoint(static_cast<std::size_t>(g.num_vertices()), 0)};
  return lattice_points(EdgePolytope(g), q);
}

std::vector<LatticePoint> idp_points(const Graph& g, int q) {
  if (q < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  const KeyCodec codec(g.num_vertices(), std::max(q, 1));
  std::vector<std::uint64_t> last;
  sumset_rounds(g, q, codec, [&](int k, const std::vector<std::uint64_t>& keys) {
    if (k == q) last = keys;
  });
  return decode_all(last, codec);
}

std::uint64_t hilbert_function(const Graph& g, int q) {
  if (q < 0) throw std::invalid_argument("degree must be nonnegative");
  const KeyCodec codec(g.num_vertices(), std::max(q, 1));
  std::uint64_t count = 0;
  sumset_rounds(g, q, codec, [&](int k, const std::vector<std::uint64_t>& keys) {
    if (k == q) count = keys.size();
  });
  return count;
}

bool check_idp(const Graph& g, int q_max) {
  if (q_max < 1) throw std::invalid_argument("check_idp needs q_max >= 1");
  const EdgePolytope p(g);
  const KeyCodec codec(g.num_vertices(), q_max);
  bool equal = true;
  sumset_rounds(g, q_max, codec, [&](int k, const std::vector<std::uint64_t>& keys) {
    if (k == 0 || !equal) return;
    if (keys != lattice_keys(p, k, codec)) equal = false;
  });
  return equal;
}

std::vector<std::int64_t> h_star_from_counts(std::span<const std::uint64_t> counts, int dim) {
  if (static_cast<int>(counts.size()) < dim + 1) {
    throw std::invalid_argument("h* needs counts for q = 0..dim");
  }
  std::vector<std::int64_t> h(static_cast<std::size_t>(dim) + 1, 0);
  for (int i = 0; i <= dim; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j <= i; ++j) {
      const std::int64_t term = binomial(dim + 1, j) * static_cast<std::int64_t>(counts[i - j]);
      s += (j % 2 == 0) ? term : -term;
    }
    h[i] = s;
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::int64_t ehrhart_from_h_star(std::span<const std::int64_t> h, int dim, int q) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    s += h[i] * binomial(q - static_cast<int>(i) + dim, dim);
  }
  return s;
}

std::int64_t interior_from_h_star(std::span<const std::int64_t> h, int dim, int q) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) s += h[i] * binomial(q + static_cast<int>(i) - 1, dim);
  return s;
}

EhrhartProfile ehrhart_profile(const EdgePolytope& p, std::optional<int> q_window) {
  const int dim = p.dim();
  const int window = q_window.value_or(dim + 2);
  if (window < dim + 1) throw std::invalid_argument("counting window must reach dim + 1");
  EhrhartProfile prof;
  prof.krull_dim = dim + 1;
  for (int q = 0; q <= window; ++q) {
    const LatticeCount c = count_lattice_points(p, q);
    prof.counts.push_back(c.total);
    prof.interior_counts.push_back(c.interior);
    if (q >= 1 && c.interior > 0 && !prof.min_interior_q) prof.min_interior_q = q;
  }
  prof.h_star = h_star_from_counts(prof.counts, dim);
  for (int q = dim + 1; q <= window; ++q) {
    if (ehrhart_from_h_star(prof.h_star, dim, q) != static_cast<std::int64_t>(prof.counts[q])) {
      throw InternalError("lattice count at q=" + std::to_string(q) +
                          " disagrees with the h*-vector prediction");
    }
  }
  return prof;
}

int min_interior_q(const Graph& g) {
  require_normal(g, "min_interior_q");
  const int mu = g.num_vertices() - matching_number(g);
  return min_interior_q(EdgePolytope(g), mu);
}

int min_interior_q(const EdgePolytope& p, int start_q) {
  for (int q = std::max(1, start_q); q <= p.dim() + 1; ++q) {
    const bool exhausted = for_each_lattice_point(
        p, q, true, [](std::span<const std::int64_t>, bool interior) { return !interior; });
    if (!exhausted) return q;
  }
  throw InternalError("no interior lattice point in any dilation up to dim + 1");
}

std::vector<std::int64_t> h_star(const Graph& g) {
  require_normal(g, "h_star");
  const EhrhartProfile prof = ehrhart_profile(EdgePolytope(g));
  for (std::size_t i = 0; i < prof.h_star.size(); ++i) {
    if (prof.h_star[i] < 0) {
      throw InternalError("negative h*_" + std::to_string(i) + " for a normal edge ring");
    }
  }
  return prof.h_star;
}

int regularity_normal(const Graph& g) {
  require_normal(g, "regularity_normal");
  const EdgePolytope p(g);
  const EhrhartProfile prof = ehrhart_profile(p);
  for (std::size_t i = 0; i < prof.h_star.size(); ++i) {
    if (prof.h_star[i] < 0) {
      throw InternalError("negative h*_" + std::to_string(i) + " for a normal edge ring");
    }
  }
  const int q0 = min_interior_q(g);
  if (prof.s() != prof.krull_dim - q0) {
    throw InternalError("deg h* = " + std::to_string(prof.s()) + " but (dim P + 1) - min q = " +
                        std::to_string(prof.krull_dim - q0));
  }
  return prof.s();
}

}  // namespace edgering
