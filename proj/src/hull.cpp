#include "edgering/hull.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace edgering {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(RationalMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("hull: integer coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

void make_primitive(IntVector& v) {
  const std::int64_t g = gcd_of(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

struct Ray {
  IntVector y;
  boost::dynamic_bitset<> zeros;  // processed constraint rows tight at y
};

std::int64_t dot(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > std::numeric_limits<std::int64_t>::max() ||
      s < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("hull: inner product exceeds 64 bits");
  }
  return static_cast<std::int64_t>(s);
}

}  // namespace

AffineChart affine_chart(std::span<const IntVector> points) {
  if (points.empty()) throw std::invalid_argument("affine_chart: empty point set");
  const std::size_t n = points.front().size();
  RationalMatrix diff;
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = points[k][i] - points[0][i];
    diff.push_back(std::move(row));
  }
  return AffineChart{row_reduce(diff)};
}

std::vector<HalfSpace> full_dimensional_hull(std::span<const IntVector> points) {
  if (points.empty()) return {};
  const std::size_t n = points.front().size();
  const std::size_t cols = n + 1;
  const std::size_t m = points.size();

  // Constraint rows (1, p_k); the cone {y : A y >= 0} has one extreme ray
  // (y0, a) per facet a . x >= -y0.
  std::vector<IntVector> rows(m, IntVector(cols));
  for (std::size_t k = 0; k < m; ++k) {
    rows[k][0] = 1;
    for (std::size_t i = 0; i < n; ++i) rows[k][i + 1] = points[k][i];
  }

  // Greedy basis of independent rows.
  std::vector<std::size_t> basis;
  {
    RationalMatrix echelon;
    for (std::size_t k = 0; k < m && basis.size() < cols; ++k) {
      std::vector<Rational> cand(rows[k].begin(), rows[k].end());
      RationalMatrix trial = echelon;
      trial.push_back(cand);
      if (row_reduce(trial).size() == basis.size() + 1) {
        echelon.push_back(std::move(cand));
        basis.push_back(k);
      }
    }
  }
  if (basis.size() != cols) {
    throw std::invalid_argument("full_dimensional_hull: point set is not full-dimensional");
  }

  // Initial rays: columns of the inverse of the basis matrix.
  RationalMatrix aug(cols, std::vector<Rational>(2 * cols));
  for (std::size_t r = 0; r < cols; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = rows[basis[r]][c];
    aug[r][cols + r] = 1;
  }
  row_reduce(aug);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < cols; ++j) {
    BigInt lcm = 1;
    for (std::size_t i = 0; i < cols; ++i) {
      lcm = boost::multiprecision::lcm(lcm, denominator(aug[i][cols + j]));
    }
    Ray ray{IntVector(cols), boost::dynamic_bitset<>(m)};
    for (std::size_t i = 0; i < cols; ++i) {
      Rational scaled = aug[i][cols + j] * lcm;
      ray.y[i] = to_int64(numerator(scaled));
    }
    make_primitive(ray.y);
    for (std::size_t r = 0; r < cols; ++r) {
      if (r != j) ray.zeros.set(basis[r]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(m, false);
  for (std::size_t k : basis) in_basis[k] = true;
  const std::size_t needed_common = cols >= 2 ? cols - 2 : 0;

  for (std::size_t k = 0; k < m; ++k) {
    if (in_basis[k]) continue;
    std::vector<std::int64_t> val(rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(rows[k], rays[r].y);
      if (val[r] > 0) pos.push_back(r);
      if (val[r] < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (val[r] == 0) rays[r].zeros.set(k);
      }
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] >= 0) {
        Ray kept = rays[r];
        if (val[r] == 0) kept.zeros.set(k);
        next.push_back(std::move(kept));
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
        if (common.count() < needed_common) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{IntVector(cols), common};
        for (std::size_t i = 0; i < cols; ++i) {
          __int128 v = static_cast<__int128>(val[p]) * rays[q].y[i] -
                       static_cast<__int128>(val[q]) * rays[p].y[i];
          if (v > std::numeric_limits<std::int64_t>::max() ||
              v < std::numeric_limits<std::int64_t>::min()) {
            throw OverflowError("hull: ray combination exceeds 64 bits");
          }
          fresh.y[i] = static_cast<std::int64_t>(v);
        }
        make_primitive(fresh.y);
        fresh.zeros.set(k);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<HalfSpace> out;
  out.reserve(rays.size());
  for (const Ray& ray : rays) {
    HalfSpace h;
    h.normal.assign(ray.y.begin() + 1, ray.y.end());
    h.offset = -ray.y[0];
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace edgering
