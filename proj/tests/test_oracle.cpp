#include <doctest.h>

#include "fixtures.hpp"
#include "flsde/errors.hpp"
#include "flsde/oracle.hpp"

using namespace flsde;
using fixtures::example1_problem;
using fixtures::example3_problem;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("membership oracle passes on the two triangular systems") {
  const OracleReport r1 = run_membership_oracle(example1_problem(), {0.25, 0.5}, 200, 42);
  CHECK(r1.passed());
  CHECK(r1.samples == 200);
  CHECK(r1.max_membership_discrepancy <= 1e-5);

  const OracleReport r3 = run_membership_oracle(example3_problem(), {0.2, 0.4}, 200, 42);
  CHECK(r3.passed());
}

TEST_CASE("membership oracle on a crisp problem uses a single sample") {
  Problem p = example1_problem();
  p.initial = {make_crisp(15.0), make_crisp(6.0)};
  const OracleReport r = run_membership_oracle(p, {0.25}, 500, 9);
  CHECK(r.samples == 1);
  CHECK(r.passed());
  CHECK(r.max_membership_discrepancy == 0.0);  // grade 1 on both sides
}

TEST_CASE("membership oracle reports are reproducible from the seed") {
  const OracleReport a = run_membership_oracle(example1_problem(), {0.25}, 64, 1234);
  const OracleReport b = run_membership_oracle(example1_problem(), {0.25}, 64, 1234);
  CHECK(a.max_membership_discrepancy == b.max_membership_discrepancy);
  const OracleReport c = run_membership_oracle(example1_problem(), {0.25}, 64, 4321);
  CHECK(c.max_membership_discrepancy != a.max_membership_discrepancy);
}

TEST_CASE("containment oracle: grid inside, face probes outside") {
  const OracleReport r = run_containment_oracle(example1_problem(), 0.5, 0.25, 9);
  CHECK(r.passed());
  CHECK(r.samples == 81);
  CHECK(r.max_containment_violation <= 1e-6);
}

TEST_CASE("containment oracle at t0 is a pure interval check") {
  const OracleReport r = run_containment_oracle(example3_problem(), 0.5, 0.0, 5);
  CHECK(r.passed());
  CHECK(r.max_containment_violation <= 1e-12);
}

TEST_CASE("support corners land on the region vertices") {
  const Problem p = example1_problem();
  const FuzzySolution sol = solve(p, 0.5);
  const double t = 0.25;
  const Parallelepiped region = sol.alpha_cut_region(t, 0.0);
  const auto region_vertices = vertices(region);

  const Interval sx = alpha_cut(p.initial[0], 0.0);
  const Interval sy = alpha_cut(p.initial[1], 0.0);
  for (double cx : {sx.lo, sx.hi}) {
    for (double cy : {sy.lo, sy.hi}) {
      const Vec image = propagate(p.a, p.forcing, 0.0, {cx, cy}, t, 1e-4);
      double nearest = 1e300;
      for (const Vec& v : region_vertices) {
        nearest = std::min(nearest, euclidean_norm(image - v));
      }
      CHECK(nearest <= 1e-6);
    }
  }
}

TEST_CASE("oracle argument validation") {
  CHECK_THROWS_AS(run_membership_oracle(example1_problem(), {}, 10, 1), InvalidInputError);
  CHECK_THROWS_AS(run_membership_oracle(example1_problem(), {0.25}, 0, 1), InvalidInputError);
  CHECK_THROWS_AS(run_containment_oracle(example1_problem(), 1.5, 0.25, 9), InvalidInputError);
  CHECK_THROWS_AS(run_containment_oracle(example1_problem(), 0.5, 0.25, 1), InvalidInputError);
}

TEST_SUITE_END();
