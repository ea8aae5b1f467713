#ifndef EDGERING_TORIC_HPP
#define EDGERING_TORIC_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/hull.hpp"

namespace edgering {

/// A degree-q monomial of the polynomial ring over the edge variables, as a
/// nondecreasing list of 0-based indices into Graph::edges().
using EdgeMonomial = std::vector<int>;

/// All degree-q monomials mapping to one multidegree of K[G].
struct Fiber {
  IntVector multidegree;
  std::vector<EdgeMonomial> monomials;
};

struct ToricBudget {
  /// Upper bound on the number of degree-q monomials examined at any degree.
  std::uint64_t max_monomials = 20'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fibers of degree q with at least two monomials, ordered by multidegree.
std::vector<Fiber> fibers(const Graph& g, int q, const ToricBudget& budget = {});

/// Degrees of the minimal binomial generators of the toric ideal of K[G]
/// found in degrees 2..complete_up_to, in nondecreasing order.
struct GeneratorProfile {
  std::vector<int> degrees;
  int complete_up_to = 0;
};

/// Number of connected components of the graph on a fiber's monomials in
/// which two monomials are adjacent when they share an edge variable.
int fiber_components(const Fiber& f);

/// A fiber with c such components contributes c - 1 minimal generators in
/// its multidegree.
GeneratorProfile minimal_generator_degrees(const Graph& g, int q_max,
                                           const ToricBudget& budget = {});

/// D - 1 when the toric ideal has exactly one minimal generator of degree D
/// up to q_max (a hypersurface ring); absent otherwise. The answer is only
/// certified up to q_max.
std::optional<int> principal_regularity(const Graph& g, int q_max,
                                        const ToricBudget& budget = {});

}  // namespace edgering

#endif  // EDGERING_TORIC_HPP
