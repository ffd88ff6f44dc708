#pragma once

#include <cstddef>
#include <vector>

#include "flsde/interval.hpp"
#include "flsde/linalg.hpp"

namespace flsde {

/// Parallelepiped {center + sum c_i * generators[i] : c_i in intervals[i]}:
/// the image of a coefficient box under a linear map plus translation.
struct Parallelepiped {
  Vec center;
  std::vector<Vec> generators;
  std::vector<Interval> intervals;

  std::size_t dim() const { return center.size(); }
};

/// All 2^n corner points, in Gray-code order over the coefficient choices
/// (bit i set selects intervals[i].hi). Deterministic; n is capped at 16.
std::vector<Vec> vertices(const Parallelepiped& p);

/// For n = 2: the four corners in counterclockwise order, starting from
/// the (lo, lo) coefficient corner.
std::vector<Vec> polygon2d(const Parallelepiped& p);

/// Maximum pairwise Euclidean distance between vertices.
double diameter(const Parallelepiped& p);

/// Whether x lies inside p within tol, measured in coefficient space.
bool contains(const Parallelepiped& p, const Vec& x, double tol);

/// Signed area of a 2D polygon (positive when counterclockwise).
double signed_area(const std::vector<Vec>& polygon);

}  // namespace flsde
