#include "flsde/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "flsde/errors.hpp"

namespace flsde {

namespace {

constexpr std::size_t kMaxEnumerationDim = 16;

void validate(const Parallelepiped& p) {
  const std::size_t n = p.dim();
  if (n == 0 || p.generators.size() != n || p.intervals.size() != n) {
    throw InvalidInputError("parallelepiped: center, generators and intervals disagree");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.generators[i].size() != n) {
      throw InvalidInputError("parallelepiped: generator " + std::to_string(i) +
                              " has wrong dimension");
    }
    if (p.intervals[i].lo > p.intervals[i].hi) {
      throw InvalidInputError("parallelepiped: empty interval at index " + std::to_string(i));
    }
  }
}

Matrix generator_matrix(const Parallelepiped& p) {
  const std::size_t n = p.dim();
  Matrix g(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) g(i, j) = p.generators[j][i];
  return g;
}

Vec corner(const Parallelepiped& p, std::uint32_t mask) {
  Vec v = p.center;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double c = (mask >> i & 1u) ? p.intervals[i].hi : p.intervals[i].lo;
    for (std::size_t r = 0; r < v.size(); ++r) v[r] += c * p.generators[i][r];
  }
  return v;
}

}  // namespace

std::vector<Vec> vertices(const Parallelepiped& p) {
  validate(p);
  const std::size_t n = p.dim();
  if (n > kMaxEnumerationDim) {
    throw UnsupportedDimensionError("vertices: enumeration capped at dimension " +
                                    std::to_string(kMaxEnumerationDim));
  }
  const std::uint32_t count = 1u << n;
  std::vector<Vec> out;
  out.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    out.push_back(corner(p, k ^ (k >> 1)));
  }
  return out;
}

double signed_area(const std::vector<Vec>& polygon) {
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Vec& a = polygon[i];
    const Vec& b = polygon[(i + 1) % polygon.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * twice;
}

std::vector<Vec> polygon2d(const Parallelepiped& p) {
  validate(p);
  if (p.dim() != 2) throw InvalidInputError("polygon2d: requires dimension 2");
  std::vector<Vec> poly = vertices(p);  // Gray order starts at the (lo, lo) corner
  if (signed_area(poly) < 0.0) {
    std::reverse(poly.begin() + 1, poly.end());
  }
  return poly;
}

double diameter(const Parallelepiped& p) {
  validate(p);
  const std::size_t n = p.dim();
  if (n > kMaxEnumerationDim) {
    throw UnsupportedDimensionError("diameter: enumeration capped at dimension " +
                                    std::to_string(kMaxEnumerationDim));
  }
  // The farthest vertex pair differs by a full interval width in every
  // coordinate, so scanning the 2^(n-1) sign patterns of the widths is
  // equivalent to the all-pairs search.
  const std::uint32_t patterns = n == 1 ? 1u : 1u << (n - 1);
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    Vec d(p.center.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = p.intervals[i].width();
      const double s = (i + 1 < n && (mask >> i & 1u)) ? -w : w;
      for (std::size_t r = 0; r < d.size(); ++r) d[r] += s * p.generators[i][r];
    }
    best = std::max(best, euclidean_norm(d));
  }
  return best;
}

bool contains(const Parallelepiped& p, const Vec& x, double tol) {
  validate(p);
  if (x.size() != p.dim()) throw InvalidInputError("contains: point has wrong dimension");
  const Vec c = lu_solve(generator_matrix(p), x - p.center);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (c[i] < p.intervals[i].lo - tol || c[i] > p.intervals[i].hi + tol) return false;
  }
  return true;
}

}  // namespace flsde
