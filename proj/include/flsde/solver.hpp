#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "flsde/crisp_ode.hpp"
#include "flsde/fuzzy_number.hpp"
#include "flsde/geometry.hpp"
#include "flsde/linalg.hpp"

namespace flsde {

/// Linear system x' = A x + F(t) with a fuzzy initial vector: each state
/// component starts from a fuzzy number rather than a point.
struct Problem {
  Matrix a;
  Forcing forcing = Forcing::zero(1);
  double t0 = 0.0;
  std::vector<FuzzyNumber> initial;

  /// Optional choice of the possibility-1 initial point; must lie inside
  /// the core of every component. Defaults to the per-component core
  /// midpoint when absent.
  std::optional<Vec> crisp_initial;

  std::size_t dim() const { return a.dim(); }
  void validate() const;
};

/// Split of the fuzzy initial vector into a crisp possibility-1 point and
/// per-component offset fuzzy numbers whose cores sit at zero.
struct Decomposition {
  Vec b_cr;
  std::vector<FuzzyNumber> offsets;
};

Decomposition decompose(const Problem& problem);

/// Solution of the fuzzy initial value problem: a fuzzy bunch of crisp
/// trajectories. The member started from initial point p has value
/// x_cr(t) + G(t) (p - b_cr) at time t, where G(t) = e^{A (t - t0)}, and
/// keeps the possibility of p for all time. At any fixed t the alpha-cuts
/// of the bunch are nested parallelepipeds spanned by the columns of G(t).
class FuzzySolution {
 public:
  double t0() const;
  double t_end() const;

  const Vec& crisp_initial() const { return decomposition_.b_cr; }
  const std::vector<FuzzyNumber>& offsets() const { return decomposition_.offsets; }
  const std::vector<FuzzyNumber>& initial() const;
  const CrispTrajectory& crisp_trajectory() const { return trajectory_; }

  Vec crisp_at(double t) const { return trajectory_.at(t); }

  /// Fundamental matrix G(t) = e^{A (t - t0)}; results are memoized per
  /// query time, and the cache is safe to fill from multiple threads.
  Matrix fundamental_matrix(double t) const;
  std::vector<Vec> fundamental_columns_at(double t) const;

  /// The alpha-cut region at time t: center x_cr(t), generators the
  /// columns of G(t), coefficient intervals the alpha-cuts of the offsets.
  Parallelepiped alpha_cut_region(double t, double alpha) const;

  /// Possibility of the point at time t: the membership of its preimage
  /// under G(t) in the initial fuzzy vector (minimum over components).
  double membership(const Vec& point, double t) const;

  /// Possibility of the member trajectory started at initial_point.
  double membership_of_trajectory(const Vec& initial_point) const;

  friend FuzzySolution solve(const Problem& problem, double t_end, double h);

 private:
  FuzzySolution(Problem problem, Decomposition decomposition, CrispTrajectory trajectory);

  struct Cache;

  Problem problem_;
  Decomposition decomposition_;
  CrispTrajectory trajectory_;
  std::shared_ptr<Cache> cache_;
};

/// Integrates the crisp trajectory and prepares lazy evaluation of G(t).
/// No alpha-cut is materialized until queried.
FuzzySolution solve(const Problem& problem, double t_end, double h = 1e-3);

}  // namespace flsde
