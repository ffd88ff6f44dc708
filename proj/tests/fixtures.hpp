#pragma once

// Shared problems for the test suites, with closed-form reference
// solutions derived from the eigenstructure of the two model systems.

#include <cmath>

#include "flsde/solver.hpp"

namespace fixtures {

using flsde::Forcing;
using flsde::Matrix;
using flsde::Problem;
using flsde::Vec;

// System 1: A = [[3, -1], [4, -2]], F = (5t^2 - 15t - 25, 10t^2 - 10t - 40).
// Eigenvalues -1 and 2 with eigenvectors (1, 4) and (1, 1).
inline Problem example1_problem() {
  Problem p{Matrix{{3.0, -1.0}, {4.0, -2.0}},
            Forcing::polynomial({{-25.0, -15.0, 5.0}, {-40.0, -10.0, 10.0}}),
            0.0,
            {flsde::make_triangular(14.5, 15.0, 16.0), flsde::make_triangular(4.0, 6.0, 9.0)},
            {}};
  return p;
}

// Crisp solution of system 1 started from (15, 6).
inline Vec example1_reference(double t) {
  const double e_neg = std::exp(-t);
  const double e_pos = std::exp(2.0 * t);
  return {5.0 * (t + 2.0) + e_neg / 3.0 + 14.0 / 3.0 * e_pos,
          5.0 * t * t + 4.0 / 3.0 * e_neg + 14.0 / 3.0 * e_pos};
}

// Homogeneous flow of system 1: image at time t of the initial point (a, b).
inline Vec example1_homogeneous(double a, double b, double t) {
  const double c1 = (-a + b) / 3.0;
  const double c2 = (4.0 * a - b) / 3.0;
  const double e_neg = std::exp(-t);
  const double e_pos = std::exp(2.0 * t);
  return {c1 * e_neg + c2 * e_pos, 4.0 * c1 * e_neg + c2 * e_pos};
}

// Same system as 1 with parametric initial branches and the crisp initial
// point pinned to (15, 6) inside the cores [14.7, 15.4] x [5.75, 6.5].
inline Problem example2_problem() {
  Problem p = example1_problem();
  p.initial = {flsde::sample_parametric([](double r) { return 14.5 + 0.2 * r; },
                                        [](double r) { return 16.0 - 0.6 * r * r; }),
               flsde::sample_parametric([](double r) { return 4.0 + 1.75 * r * r; },
                                        [](double r) { return 9.0 - 2.5 * std::sqrt(r); })};
  p.crisp_initial = Vec{15.0, 6.0};
  return p;
}

// System 3: A = [[-3, 2], [3, -4]], F = (1, 2), equilibrium (4/3, 3/2).
// Eigenvalues -1 and -6 with eigenvectors (1, 1) and (2, -3).
inline Problem example3_problem() {
  Problem p{Matrix{{-3.0, 2.0}, {3.0, -4.0}},
            Forcing::polynomial({{1.0}, {2.0}}),
            0.0,
            {flsde::make_triangular(70.0, 100.0, 130.0),
             flsde::make_triangular(70.0, 100.0, 130.0)},
            {}};
  return p;
}

// Crisp solution of system 3 started from (100, 100).
inline Vec example3_reference(double t) {
  const double e1 = std::exp(-t);
  const double e6 = std::exp(-6.0 * t);
  return {4.0 / 3.0 + 98.6 * e1 + e6 / 15.0, 1.5 + 98.6 * e1 - 0.1 * e6};
}

inline Vec example3_homogeneous(double a, double b, double t) {
  const double c1 = (3.0 * a + 2.0 * b) / 5.0;
  const double c2 = (a - b) / 5.0;
  const double e1 = std::exp(-t);
  const double e6 = std::exp(-6.0 * t);
  return {c1 * e1 + 2.0 * c2 * e6, c1 * e1 - 3.0 * c2 * e6};
}

}  // namespace fixtures
