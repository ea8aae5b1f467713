#ifndef EDGERING_EHRHART_HPP
#define EDGERING_EHRHART_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

using LatticePoint = IntVector;

/// A gated operation was called on a graph it does not apply to (for
/// example the Ehrhart regularity formula on a non-normal edge ring).
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold for normal edge rings failed; indicates a bug
/// or non-normal input that slipped through.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Calls visit(point, interior) for every lattice point of q * P in
/// lexicographic order. With interior_only, points on the boundary are
/// pruned from the search and never visited. Returning false from visit
/// stops the walk; the function returns false in that case.
bool for_each_lattice_point(const EdgePolytope& p, int q, bool interior_only,
                            const std::function<bool(std::span<const std::int64_t>, bool)>& visit);

struct LatticeCount {
  std::uint64_t total = 0;
  std::uint64_t interior = 0;
};

LatticeCount count_lattice_points(const EdgePolytope& p, int q);

/// Integer points of q * P_G, sorted lexicographically.
std::vector<LatticePoint> lattice_points(const EdgePolytope& p, int q);
std::vector<LatticePoint> lattice_points(const Graph& g, int q);

/// Distinct sums of q edge vectors, sorted lexicographically (iterated
/// sumset S_{k+1} = S_k + {e_i + e_j}).
std::vector<LatticePoint> idp_points(const Graph& g, int q);

/// Number of degree-q monomials of K[G] (each generator x_i x_j in degree 1).
std::uint64_t hilbert_function(const Graph& g, int q);

/// idp_points(g, q) == lattice_points(g, q) for every 1 <= q <= q_max.
bool check_idp(const Graph& g, int q_max);

struct EhrhartProfile {
  int krull_dim = 0;                       // dim P + 1
  std::vector<std::uint64_t> counts;       // q = 0..Q
  std::vector<std::uint64_t> interior_counts;
  std::optional<int> min_interior_q;       // least q >= 1 with an interior point, if q <= Q
  std::vector<std::int64_t> h_star;        // trailing zeros trimmed
  int s() const { return static_cast<int>(h_star.size()) - 1; }
};

/// Counts and interior counts for q = 0..q_window (default dim + 2), the
/// h*-vector obtained from counts 0..dim, and the smallest dilation with an
/// interior point, found by scanning from q = 1. Throws InternalError if the
/// count at q_window disagrees with the one the h*-vector predicts.
EhrhartProfile ehrhart_profile(const EdgePolytope& p, std::optional<int> q_window = std::nullopt);

/// Least q >= 1 whose dilation has an interior lattice point. The search
/// starts at the edge cover number and runs to dim + 1. Requires a normal
/// edge ring (NotApplicable otherwise); InternalError if nothing is found.
int min_interior_q(const Graph& g);

/// Search behind min_interior_q(g) for a prebuilt polytope, starting at
/// start_q; no normality gate.
int min_interior_q(const EdgePolytope& p, int start_q);

/// h*-vector of P_G, which is the Hilbert series numerator of K[G] when K[G]
/// is normal. NotApplicable for non-normal input; InternalError on a
/// negative entry.
std::vector<std::int64_t> h_star(const Graph& g);

/// reg K[G] = deg h* for normal K[G], cross-checked against
/// (dim P + 1) - min_interior_q. NotApplicable for non-normal input.
int regularity_normal(const Graph& g);

/// h_i = sum_j (-1)^j C(dim+1, j) L(i-j), i = 0..dim, from counts L(0..dim).
std::vector<std::int64_t> h_star_from_counts(std::span<const std::uint64_t> counts, int dim);

/// L(q) = sum_i h_i C(q - i + dim, dim).
std::int64_t ehrhart_from_h_star(std::span<const std::int64_t> h, int dim, int q);

/// Interior count by reciprocity: sum_i h_i C(q + i - 1, dim).
std::int64_t interior_from_h_star(std::span<const std::int64_t> h, int dim, int q);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace edgering

#endif  // EDGERING_EHRHART_HPP
