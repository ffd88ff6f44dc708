#include <algorithm>
#include <cmath>
#include <limits>

#include <doctest.h>

#include "fixtures.hpp"
#include "flsde/errors.hpp"
#include "flsde/geometry.hpp"
#include "flsde/solver.hpp"

using namespace flsde;

namespace {

Parallelepiped unit_square() {
  return {{0.0, 0.0}, {{1.0, 0.0}, {0.0, 1.0}}, {{0.0, 1.0}, {0.0, 1.0}}};
}

bool same_point_set(std::vector<Vec> a, std::vector<Vec> b, double tol) {
  if (a.size() != b.size()) return false;
  auto lex = [](const Vec& p, const Vec& q) {
    return std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end());
  };
  std::sort(a.begin(), a.end(), lex);
  std::sort(b.begin(), b.end(), lex);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (infinity_norm(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("vertices of the initial offset prisms") {
  const Parallelepiped p1{{0.0, 0.0},
                          {{1.0, 0.0}, {0.0, 1.0}},
                          {{-0.5, 1.0}, {-2.0, 3.0}}};
  CHECK(same_point_set(vertices(p1), {{-0.5, 3.0}, {1.0, 3.0}, {1.0, -2.0}, {-0.5, -2.0}}, 0.0));

  const Parallelepiped p3{{0.0, 0.0},
                          {{1.0, 0.0}, {0.0, 1.0}},
                          {{-30.0, 30.0}, {-30.0, 30.0}}};
  CHECK(same_point_set(vertices(p3),
                       {{-30.0, 30.0}, {30.0, 30.0}, {30.0, -30.0}, {-30.0, -30.0}}, 0.0));
}

TEST_CASE("vertices come in deterministic Gray-code order") {
  const auto v = vertices(unit_square());
  CHECK(v[0] == Vec{0.0, 0.0});
  CHECK(v[1] == Vec{1.0, 0.0});
  CHECK(v[2] == Vec{1.0, 1.0});
  CHECK(v[3] == Vec{0.0, 1.0});
}

TEST_CASE("degenerate intervals collapse all vertices to one point") {
  const Parallelepiped p{{2.0, -1.0},
                         {{1.0, 0.0}, {0.0, 1.0}},
                         {{0.5, 0.5}, {-0.25, -0.25}}};
  for (const Vec& v : vertices(p)) CHECK(v == Vec{2.5, -1.25});
  CHECK(diameter(p) == 0.0);
}

TEST_CASE("vertex enumeration is capped at dimension 16") {
  const std::size_t n = 17;
  Parallelepiped p;
  p.center.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Vec g(n, 0.0);
    g[i] = 1.0;
    p.generators.push_back(g);
    p.intervals.push_back({0.0, 1.0});
  }
  CHECK_THROWS_AS(vertices(p), UnsupportedDimensionError);
  CHECK_THROWS_AS(diameter(p), UnsupportedDimensionError);
}

TEST_CASE("polygon2d orders counterclockwise from the (lo, lo) corner") {
  const auto poly = polygon2d(unit_square());
  CHECK(poly[0] == Vec{0.0, 0.0});
  CHECK(poly[1] == Vec{1.0, 0.0});
  CHECK(poly[2] == Vec{1.0, 1.0});
  CHECK(poly[3] == Vec{0.0, 1.0});
  CHECK(signed_area(poly) == doctest::Approx(1.0));
}

TEST_CASE("polygon2d keeps positive orientation under mirrored generators") {
  Parallelepiped p = unit_square();
  std::swap(p.generators[0], p.generators[1]);  // orientation flip in xy
  const auto poly = polygon2d(p);
  CHECK(poly[0] == Vec{0.0, 0.0});
  CHECK(signed_area(poly) > 0.0);
  CHECK(same_point_set(poly, polygon2d(unit_square()), 0.0));

  Parallelepiped q;
  q.center = {0.0};
  q.generators = {{1.0}};
  q.intervals = {{0.0, 1.0}};
  CHECK_THROWS_AS(polygon2d(q), InvalidInputError);
}

TEST_CASE("diameter of the unit square is sqrt(2)") {
  CHECK(diameter(unit_square()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("diameter equals the all-pairs vertex scan") {
  const Parallelepiped p{{1.0, -2.0, 0.5},
                         {{1.0, 0.2, -0.3}, {0.0, 1.5, 0.4}, {0.7, -0.1, 1.1}},
                         {{-1.0, 0.5}, {-0.2, 2.0}, {0.0, 0.75}}};
  const auto v = vertices(p);
  double brute = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      brute = std::max(brute, euclidean_norm(v[i] - v[j]));
  CHECK(diameter(p) == doctest::Approx(brute).epsilon(1e-14));
}

TEST_CASE("containment checks in coefficient space") {
  const Parallelepiped p{{1.0, 1.0},
                         {{2.0, 1.0}, {0.5, 3.0}},
                         {{-1.0, 2.0}, {0.0, 1.0}}};
  CHECK(contains(p, p.center, 1e-12));  // zero coefficients are inside
  for (const Vec& v : vertices(p)) CHECK(contains(p, v, 1e-9));

  // doubling the hi corner's coefficients leaves the region
  Vec outside = p.center;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t r = 0; r < 2; ++r) outside[r] += 2.0 * p.intervals[i].hi * p.generators[i][r];
  CHECK_FALSE(contains(p, outside, 1e-9));

  const Parallelepiped degenerate{{0.0, 0.0},
                                  {{1.0, 1.0}, {2.0, 2.0}},
                                  {{0.0, 1.0}, {0.0, 1.0}}};
  CHECK_THROWS_AS(contains(degenerate, {0.0, 0.0}, 1e-9), SingularMatrixError);
}

TEST_CASE("triangular cuts shrink the region by similarity") {
  const FuzzySolution sol = solve(fixtures::example1_problem(), 0.5);
  const Parallelepiped support = sol.alpha_cut_region(0.25, 0.0);
  for (double alpha : {0.25, 0.5, 0.75}) {
    const Parallelepiped cut = sol.alpha_cut_region(0.25, alpha);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(cut.intervals[i].lo ==
            doctest::Approx((1.0 - alpha) * support.intervals[i].lo).epsilon(1e-12));
      CHECK(cut.intervals[i].hi ==
            doctest::Approx((1.0 - alpha) * support.intervals[i].hi).epsilon(1e-12));
    }
    const auto big = vertices(support);
    const auto small = vertices(cut);
    for (std::size_t k = 0; k < big.size(); ++k) {
      const Vec expected = cut.center + (1.0 - alpha) * (big[k] - support.center);
      CHECK(infinity_norm(small[k] - expected) <= 1e-12 * (1.0 + infinity_norm(expected)));
    }
  }
}

TEST_CASE("regions are the linear image of the initial region") {
  const FuzzySolution sol = solve(fixtures::example1_problem(), 0.5);
  const double t = 0.25, alpha = 0.5;
  const Parallelepiped now = sol.alpha_cut_region(t, alpha);
  const Parallelepiped start = sol.alpha_cut_region(0.0, alpha);
  const Matrix g = sol.fundamental_matrix(t);

  const auto moved = vertices(now);
  const auto initial = vertices(start);
  for (std::size_t k = 0; k < moved.size(); ++k) {
    const Vec image = now.center + g * (initial[k] - start.center);
    CHECK(infinity_norm(moved[k] - image) <= 1e-9);
  }
}

TEST_CASE("decaying system's support region shrinks monotonically") {
  const FuzzySolution sol = solve(fixtures::example3_problem(), 2.0);
  double previous = std::numeric_limits<double>::infinity();
  for (double t : {0.0, 0.2, 0.4, 1.0, 2.0}) {
    const double d = diameter(sol.alpha_cut_region(t, 0.0));
    CHECK(d < previous);
    previous = d;
  }
}

TEST_SUITE_END();
