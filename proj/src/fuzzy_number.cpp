#include "flsde/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "flsde/errors.hpp"

namespace flsde {

namespace {

// Index of the grid segment containing r: grid[k] <= r <= grid[k+1].
std::size_t segment_index(const std::vector<double>& grid, double r) {
  auto it = std::upper_bound(grid.begin(), grid.end(), r);
  std::size_t k = static_cast<std::size_t>(it - grid.begin());
  if (k > 0) --k;
  if (k + 1 >= grid.size()) k = grid.size() - 2;
  return k;
}

double lerp_on(const std::vector<double>& grid, const std::vector<double>& values, double r) {
  const std::size_t k = segment_index(grid, r);
  if (r == grid[k]) return values[k];
  if (r == grid[k + 1]) return values[k + 1];
  const double span = grid[k + 1] - grid[k];
  return values[k] + (values[k + 1] - values[k]) * ((r - grid[k]) / span);
}

std::vector<double> union_grid(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_level_range(double alpha, const char* what) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidInputError(std::string(what) + ": level " + std::to_string(alpha) +
                            " is outside [0, 1]");
  }
}

}  // namespace

double FuzzyNumber::lower_at(double r) const {
  check_level_range(r, "lower_at");
  return lerp_on(grid_, lower_, r);
}

double FuzzyNumber::upper_at(double r) const {
  check_level_range(r, "upper_at");
  return lerp_on(grid_, upper_, r);
}

FuzzyNumber make_parametric(std::vector<double> levels, std::vector<double> lower_values,
                            std::vector<double> upper_values) {
  const std::size_t m = levels.size();
  if (m < 2 || lower_values.size() != m || upper_values.size() != m) {
    throw InvalidInputError("make_parametric: need matching level/lower/upper arrays of size >= 2");
  }
  if (levels.front() != 0.0) throw InvalidInputError("make_parametric: grid must start at 0");
  if (levels.back() != 1.0) throw InvalidInputError("make_parametric: grid must end at 1");
  for (std::size_t k = 0; k < m; ++k) {
    if (!std::isfinite(levels[k]) || !std::isfinite(lower_values[k]) ||
        !std::isfinite(upper_values[k])) {
      throw InvalidInputError("make_parametric: non-finite sample at index " + std::to_string(k));
    }
    if (lower_values[k] > upper_values[k]) {
      throw InvalidInputError("make_parametric: lower exceeds upper at index " +
                              std::to_string(k));
    }
    if (k == 0) continue;
    if (levels[k] <= levels[k - 1]) {
      throw InvalidInputError("make_parametric: grid not strictly increasing at index " +
                              std::to_string(k));
    }
    if (lower_values[k] < lower_values[k - 1]) {
      throw InvalidInputError("make_parametric: lower branch decreases at index " +
                              std::to_string(k));
    }
    if (upper_values[k] > upper_values[k - 1]) {
      throw InvalidInputError("make_parametric: upper branch increases at index " +
                              std::to_string(k));
    }
  }
  FuzzyNumber u;
  u.grid_ = std::move(levels);
  u.lower_ = std::move(lower_values);
  u.upper_ = std::move(upper_values);
  return u;
}

FuzzyNumber make_triangular(double a, double c, double b) {
  if (!(a <= c && c <= b)) {
    throw InvalidInputError("make_triangular: requires a <= c <= b, got (" + std::to_string(a) +
                            ", " + std::to_string(c) + ", " + std::to_string(b) + ")");
  }
  return make_parametric({0.0, 1.0}, {a, c}, {b, c});
}

FuzzyNumber make_triangular(const Triangular& tri) { return make_triangular(tri.a, tri.c, tri.b); }

FuzzyNumber make_crisp(double value) { return make_triangular(value, value, value); }

FuzzyNumber sample_parametric(const std::function<double(double)>& lower_fn,
                              const std::function<double(double)>& upper_fn, std::size_t levels) {
  if (levels < 2) throw InvalidInputError("sample_parametric: need at least 2 levels");
  std::vector<double> grid(levels), lo(levels), hi(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    const double r = static_cast<double>(k) / static_cast<double>(levels - 1);
    grid[k] = r;
    lo[k] = lower_fn(r);
    hi[k] = upper_fn(r);
  }
  grid.front() = 0.0;
  grid.back() = 1.0;
  return make_parametric(std::move(grid), std::move(lo), std::move(hi));
}

Interval alpha_cut(const FuzzyNumber& u, double alpha) {
  check_level_range(alpha, "alpha_cut");
  return {lerp_on(u.grid(), u.lower(), alpha), lerp_on(u.grid(), u.upper(), alpha)};
}

double membership(const FuzzyNumber& u, double x) {
  const auto& grid = u.grid();
  const auto& lo = u.lower();
  const auto& hi = u.upper();
  if (x < lo.front() || x > hi.front()) return 0.0;
  if (x >= lo.back() && x <= hi.back()) return 1.0;

  if (x < lo.back()) {
    // Left branch, nondecreasing. The grade is the highest level whose cut
    // still contains x, so flat runs resolve to their right end.
    auto it = std::upper_bound(lo.begin(), lo.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - lo.begin()) - 1;
    return grid[k] + (grid[k + 1] - grid[k]) * ((x - lo[k]) / (lo[k + 1] - lo[k]));
  }

  // Right branch, nonincreasing.
  auto it = std::upper_bound(hi.begin(), hi.end(), x, std::greater<double>());
  const std::size_t k = static_cast<std::size_t>(it - hi.begin()) - 1;
  return grid[k] + (grid[k + 1] - grid[k]) * ((hi[k] - x) / (hi[k] - hi[k + 1]));
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
  const std::vector<double> grid = union_grid(u.grid(), v.grid());
  std::vector<double> lo(grid.size()), hi(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    lo[k] = lerp_on(u.grid(), u.lower(), grid[k]) + lerp_on(v.grid(), v.lower(), grid[k]);
    hi[k] = lerp_on(u.grid(), u.upper(), grid[k]) + lerp_on(v.grid(), v.upper(), grid[k]);
  }
  return make_parametric(grid, std::move(lo), std::move(hi));
}

FuzzyNumber scale(double k, const FuzzyNumber& u) {
  const std::size_t m = u.grid().size();
  std::vector<double> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (k >= 0.0) {
      lo[i] = k * u.lower()[i];
      hi[i] = k * u.upper()[i];
    } else {
      lo[i] = k * u.upper()[i];
      hi[i] = k * u.lower()[i];
    }
  }
  return make_parametric(u.grid(), std::move(lo), std::move(hi));
}

FuzzyNumber sub(const FuzzyNumber& u, const FuzzyNumber& v) { return add(u, scale(-1.0, v)); }

FuzzyNumber shift(const FuzzyNumber& u, double s) {
  const std::size_t m = u.grid().size();
  std::vector<double> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = u.lower()[i] + s;
    hi[i] = u.upper()[i] + s;
  }
  return make_parametric(u.grid(), std::move(lo), std::move(hi));
}

}  // namespace flsde
