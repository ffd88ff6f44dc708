#include <cmath>

#include <doctest.h>

#include "fixtures.hpp"
#include "flsde/crisp_ode.hpp"
#include "flsde/errors.hpp"

using namespace flsde;
using fixtures::example1_problem;
using fixtures::example1_reference;
using fixtures::example3_problem;
using fixtures::example3_reference;

namespace {

double max_error_vs(const CrispTrajectory& traj, Vec (*reference)(double)) {
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.times().size(); ++k) {
    const Vec expected = reference(traj.times()[k]);
    worst = std::max(worst, infinity_norm(traj.states()[k] - expected));
  }
  return worst;
}

}  // namespace

TEST_SUITE_BEGIN("crisp_ode");

TEST_CASE("polynomial forcing evaluates by Horner") {
  const Forcing f = Forcing::polynomial({{-25.0, -15.0, 5.0}, {-40.0, -10.0, 10.0}});
  const Vec at2 = f.eval(2.0);
  CHECK(at2[0] == doctest::Approx(5.0 * 4.0 - 15.0 * 2.0 - 25.0).epsilon(1e-15));
  CHECK(at2[1] == doctest::Approx(10.0 * 4.0 - 10.0 * 2.0 - 40.0).epsilon(1e-15));
}

TEST_CASE("forcing rejects out-of-contract coefficient lists") {
  CHECK_THROWS_AS(Forcing::polynomial({}), InvalidInputError);
  CHECK_THROWS_AS(Forcing::polynomial({std::vector<double>(18, 1.0)}), InvalidInputError);
}

TEST_CASE("custom function forcing is honored") {
  const Forcing f = Forcing::function(1, [](double t) { return Vec{std::sin(t)}; });
  CHECK(f.eval(0.3)[0] == doctest::Approx(std::sin(0.3)).epsilon(1e-15));
  CHECK_FALSE(f.is_polynomial());
}

TEST_CASE("trajectory starts exactly at the initial state") {
  const auto p = example1_problem();
  const CrispTrajectory traj = integrate(p.a, p.forcing, 0.0, {15.0, 6.0}, 0.5, 1e-3);
  CHECK(traj.states().front() == Vec{15.0, 6.0});
  CHECK(traj.at(0.0) == Vec{15.0, 6.0});
}

TEST_CASE("reference solution is matched to 1e-6 with the default step") {
  const auto p = example1_problem();
  const CrispTrajectory traj = integrate(p.a, p.forcing, 0.0, {15.0, 6.0}, 0.5, 1e-3);
  CHECK(max_error_vs(traj, &example1_reference) <= 1e-6);

  const Vec at_half = traj.at(0.5);
  const Vec expected = example1_reference(0.5);
  CHECK(at_half[0] == doctest::Approx(expected[0]).epsilon(1e-9));
  CHECK(at_half[1] == doctest::Approx(expected[1]).epsilon(1e-9));
}

TEST_CASE("decaying system approaches its equilibrium") {
  const auto p = example3_problem();
  const CrispTrajectory traj = integrate(p.a, p.forcing, 0.0, {100.0, 100.0}, 10.0, 1e-3);
  CHECK(max_error_vs(traj, &example3_reference) <= 1e-6);
  const Vec tail = traj.at(10.0);
  CHECK(tail[0] == doctest::Approx(4.0 / 3.0).epsilon(5e-3));
  CHECK(tail[1] == doctest::Approx(1.5).epsilon(5e-3));
}

TEST_CASE("finite-difference residual certifies the trajectory") {
  const auto p1 = example1_problem();
  const CrispTrajectory t1 = integrate(p1.a, p1.forcing, 0.0, {15.0, 6.0}, 0.5, 1e-3);
  CHECK(infinity_norm(residual(t1, p1.a, p1.forcing, 0.25)) <= 1e-5);

  const auto p3 = example3_problem();
  const CrispTrajectory t3 = integrate(p3.a, p3.forcing, 0.0, {100.0, 100.0}, 0.5, 1e-3);
  CHECK(infinity_norm(residual(t3, p3.a, p3.forcing, 0.2)) <= 1e-5);

  // started at the equilibrium the state never moves
  const CrispTrajectory still =
      integrate(p3.a, p3.forcing, 0.0, {4.0 / 3.0, 1.5}, 1.0, 1e-3);
  CHECK(infinity_norm(residual(still, p3.a, p3.forcing, 0.5)) <= 1e-9);
  CHECK(infinity_norm(still.at(1.0) - Vec{4.0 / 3.0, 1.5}) <= 1e-12);

  CHECK_THROWS_AS(residual(t1, p1.a, p1.forcing, 0.4999), InvalidInputError);
}

TEST_CASE("halving the step divides the error by about sixteen") {
  const auto p = example1_problem();
  const CrispTrajectory coarse = integrate(p.a, p.forcing, 0.0, {15.0, 6.0}, 0.5, 0.02);
  const CrispTrajectory fine = integrate(p.a, p.forcing, 0.0, {15.0, 6.0}, 0.5, 0.01);
  const double ratio =
      max_error_vs(coarse, &example1_reference) / max_error_vs(fine, &example1_reference);
  CHECK(ratio >= 12.0);
  CHECK(ratio <= 20.0);
}

TEST_CASE("integration is additive over initial value and forcing splits") {
  const Matrix a{{3.0, -1.0}, {4.0, -2.0}};
  const Forcing f1 = Forcing::polynomial({{-25.0, -15.0, 5.0}, {-40.0, -10.0, 10.0}});
  const Forcing f2 = Forcing::polynomial({{1.0, 2.0}, {-3.0, 0.5}});
  const Forcing sum = Forcing::polynomial({{-24.0, -13.0, 5.0}, {-43.0, -9.5, 10.0}});
  const Vec b1{15.0, 6.0}, b2{-1.0, 2.0};

  const CrispTrajectory whole = integrate(a, sum, 0.0, b1 + b2, 0.5, 1e-3);
  const CrispTrajectory part1 = integrate(a, f1, 0.0, b1, 0.5, 1e-3);
  const CrispTrajectory part2 = integrate(a, f2, 0.0, b2, 0.5, 1e-3);
  for (std::size_t k = 0; k < whole.times().size(); ++k) {
    const Vec combined = part1.states()[k] + part2.states()[k];
    CHECK(infinity_norm(whole.states()[k] - combined) <= 1e-9);
  }
}

TEST_CASE("dense output returns stored nodes unchanged") {
  const auto p = example1_problem();
  const CrispTrajectory traj = integrate(p.a, p.forcing, 0.0, {15.0, 6.0}, 0.5, 1e-3);
  for (std::size_t k : {std::size_t{0}, std::size_t{17}, traj.times().size() - 1}) {
    CHECK(traj.at(traj.times()[k]) == traj.states()[k]);
  }
}

TEST_CASE("dense output interpolates at fourth order between nodes") {
  const auto p = example1_problem();
  const CrispTrajectory traj = integrate(p.a, p.forcing, 0.0, {15.0, 6.0}, 0.5, 1e-3);
  for (double t : {0.1234567, 0.0005, 0.4987654}) {
    CHECK(infinity_norm(traj.at(t) - example1_reference(t)) <= 1e-9);
  }
}

TEST_CASE("a final short step lands exactly on t_end") {
  const auto p = example1_problem();
  const CrispTrajectory traj = integrate(p.a, p.forcing, 0.0, {15.0, 6.0}, 0.4567, 1e-2);
  CHECK(traj.t_end() == 0.4567);
  CHECK(infinity_norm(traj.at(0.4567) - example1_reference(0.4567)) <= 1e-7);
}

TEST_CASE("unstable step sizes surface as divergence with a time stamp") {
  const Matrix a{{-1e4}};
  try {
    integrate(a, Forcing::zero(1), 0.0, {1.0}, 1.0, 1e-2);
    FAIL("expected divergence");
  } catch (const DivergenceError& e) {
    CHECK(e.time() > 0.0);
    CHECK(e.time() <= 1.0);
  }
}

TEST_CASE("setup validation") {
  const Matrix a{{1.0}};
  CHECK_THROWS_AS(integrate(a, Forcing::zero(1), 0.0, {1.0}, 1.0, 0.0), InvalidInputError);
  CHECK_THROWS_AS(integrate(a, Forcing::zero(1), 1.0, {1.0}, 0.5, 1e-3), InvalidInputError);
  CHECK_THROWS_AS(integrate(a, Forcing::zero(2), 0.0, {1.0}, 1.0, 1e-3), InvalidInputError);
}

TEST_SUITE_END();
