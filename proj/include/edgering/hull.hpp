#ifndef EDGERING_HULL_HPP
#define EDGERING_HULL_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace edgering {

using IntVector = std::vector<std::int64_t>;

/// normal . x >= offset
struct HalfSpace {
  IntVector normal;
  std::int64_t offset = 0;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

/// Raised when an exact integer computation would leave 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Coordinates on which the affine hull of a point set projects injectively.
struct AffineChart {
  /// Pivot coordinates (0-based), one per dimension of the affine hull.
  std::vector<int> coordinates;
  int dim() const { return static_cast<int>(coordinates.size()); }
};

/// Pivot columns of the row-reduced matrix of differences p_k - p_0, computed
/// in exact rational arithmetic. Requires a nonempty point set.
AffineChart affine_chart(std::span<const IntVector> points);

/// Facet inequalities of the convex hull of a full-dimensional point set in
/// Z^n, by the double description method on the homogenized cone. Each
/// inequality is primitive; the result is sorted.
std::vector<HalfSpace> full_dimensional_hull(std::span<const IntVector> points);

std::int64_t gcd_of(std::span<const std::int64_t> v);

}  // namespace edgering

#endif  // EDGERING_HULL_HPP
