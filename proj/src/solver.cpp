#include "flsde/solver.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "flsde/errors.hpp"

namespace flsde {

namespace {

constexpr double kCrispComponentRelTol = 1e-9;

void check_time_range(double t, double t0, double t_end, const char* what) {
  if (!(t >= t0 && t <= t_end)) {
    throw InvalidInputError(std::string(what) + ": time " + std::to_string(t) +
                            " is outside [" + std::to_string(t0) + ", " + std::to_string(t_end) +
                            "]");
  }
}

}  // namespace

void Problem::validate() const {
  const std::size_t n = dim();
  if (n == 0) throw InvalidInputError("problem: dimension must be at least 1");
  if (forcing.dim() != n) throw InvalidInputError("problem: forcing dimension disagrees with A");
  if (initial.size() != n) {
    throw InvalidInputError("problem: expected " + std::to_string(n) +
                            " initial fuzzy numbers, got " + std::to_string(initial.size()));
  }
  if (!a.all_finite() || !std::isfinite(t0)) throw InvalidInputError("problem: non-finite data");
  if (crisp_initial) {
    if (crisp_initial->size() != n) {
      throw InvalidInputError("problem: crisp initial override has wrong dimension");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Interval core = initial[i].core();
      if (!core.contains((*crisp_initial)[i])) {
        throw InvalidInputError("problem: crisp initial component " + std::to_string(i) +
                                " = " + std::to_string((*crisp_initial)[i]) +
                                " lies outside the core [" + std::to_string(core.lo) + ", " +
                                std::to_string(core.hi) + "]");
      }
    }
  }
}

Decomposition decompose(const Problem& problem) {
  problem.validate();
  const std::size_t n = problem.dim();
  Decomposition d;
  d.b_cr.resize(n);
  d.offsets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.b_cr[i] = problem.crisp_initial ? (*problem.crisp_initial)[i]
                                      : problem.initial[i].core().midpoint();
    d.offsets.push_back(shift(problem.initial[i], -d.b_cr[i]));
  }
  return d;
}

struct FuzzySolution::Cache {
  struct Entry {
    Matrix g;
    LuFactors lu;
  };

  std::mutex mutex;
  std::map<double, Entry> by_time;
};

FuzzySolution::FuzzySolution(Problem problem, Decomposition decomposition,
                             CrispTrajectory trajectory)
    : problem_(std::move(problem)),
      decomposition_(std::move(decomposition)),
      trajectory_(std::move(trajectory)),
      cache_(std::make_shared<Cache>()) {}

double FuzzySolution::t0() const { return trajectory_.t0(); }
double FuzzySolution::t_end() const { return trajectory_.t_end(); }

const std::vector<FuzzyNumber>& FuzzySolution::initial() const { return problem_.initial; }

Matrix FuzzySolution::fundamental_matrix(double t) const {
  check_time_range(t, t0(), t_end(), "fundamental_matrix");
  std::scoped_lock lock(cache_->mutex);
  auto it = cache_->by_time.find(t);
  if (it == cache_->by_time.end()) {
    Matrix g = mat_exp(problem_.a, t - problem_.t0);
    LuFactors lu(g);
    it = cache_->by_time.emplace(t, Cache::Entry{std::move(g), std::move(lu)}).first;
  }
  return it->second.g;
}

std::vector<Vec> FuzzySolution::fundamental_columns_at(double t) const {
  const Matrix g = fundamental_matrix(t);
  std::vector<Vec> cols;
  cols.reserve(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) cols.push_back(g.column(j));
  return cols;
}

Parallelepiped FuzzySolution::alpha_cut_region(double t, double alpha) const {
  check_time_range(t, t0(), t_end(), "alpha_cut_region");
  Parallelepiped region;
  region.center = trajectory_.at(t);
  region.generators = fundamental_columns_at(t);
  region.intervals.reserve(problem_.dim());
  for (const FuzzyNumber& offset : decomposition_.offsets) {
    region.intervals.push_back(alpha_cut(offset, alpha));
  }
  return region;
}

double FuzzySolution::membership(const Vec& point, double t) const {
  check_time_range(t, t0(), t_end(), "membership");
  if (point.size() != problem_.dim()) {
    throw InvalidInputError("membership: point has wrong dimension");
  }

  Vec coeff;
  {
    std::scoped_lock lock(cache_->mutex);
    auto it = cache_->by_time.find(t);
    if (it == cache_->by_time.end()) {
      Matrix g = mat_exp(problem_.a, t - problem_.t0);
      LuFactors lu(g);
      it = cache_->by_time.emplace(t, Cache::Entry{std::move(g), std::move(lu)}).first;
    }
    coeff = it->second.lu.solve(point - trajectory_.at(t));
  }

  double grade = 1.0;
  for (std::size_t i = 0; i < problem_.dim(); ++i) {
    const double b_cr_i = decomposition_.b_cr[i];
    double component;
    if (problem_.initial[i].support().width() == 0.0) {
      // Crisp component: the preimage must coincide with the point, up to
      // the numerical tolerance of the linear solve.
      component = std::abs(coeff[i]) <= kCrispComponentRelTol * (1.0 + std::abs(b_cr_i)) ? 1.0
                                                                                         : 0.0;
    } else {
      component = flsde::membership(problem_.initial[i], b_cr_i + coeff[i]);
    }
    grade = std::min(grade, component);
  }
  return grade;
}

double FuzzySolution::membership_of_trajectory(const Vec& initial_point) const {
  if (initial_point.size() != problem_.dim()) {
    throw InvalidInputError("membership_of_trajectory: point has wrong dimension");
  }
  double grade = 1.0;
  for (std::size_t i = 0; i < problem_.dim(); ++i) {
    grade = std::min(grade, flsde::membership(problem_.initial[i], initial_point[i]));
  }
  return grade;
}

FuzzySolution solve(const Problem& problem, double t_end, double h) {
  Decomposition d = decompose(problem);
  CrispTrajectory traj =
      integrate(problem.a, problem.forcing, problem.t0, d.b_cr, t_end, h);
  return FuzzySolution(problem, std::move(d), std::move(traj));
}

}  // namespace flsde
