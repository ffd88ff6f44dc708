#include "flsde/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flsde/errors.hpp"

namespace flsde {

namespace {

// splitmix64: cheap stateless generator, one independent substream per
// sample index so the report does not depend on evaluation order.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  state = mix64(state);
  return static_cast<double>(state >> 11) * 0x1.0p-53;
}

double solver_step(const Problem& problem, double t_end) {
  // keep the solver path at its default resolution unless the horizon is tiny
  return std::min(1e-3, (t_end - problem.t0) / 16.0);
}

}  // namespace

bool OracleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const OracleCheck& c) { return c.passed; });
}

OracleReport run_membership_oracle(const Problem& problem, const std::vector<double>& t_checks,
                                   std::size_t samples, std::uint64_t seed,
                                   const OracleOptions& options) {
  problem.validate();
  if (samples < 1) throw InvalidInputError("membership oracle: need at least one sample");
  if (t_checks.empty()) throw InvalidInputError("membership oracle: need at least one check time");

  const std::size_t n = problem.dim();
  double t_end = problem.t0;
  for (double t : t_checks) t_end = std::max(t_end, t);
  if (t_end <= problem.t0) {
    throw InvalidInputError("membership oracle: check times must exceed t0");
  }

  const FuzzySolution sol = solve(problem, t_end, solver_step(problem, t_end));

  std::vector<Interval> support(n);
  bool all_crisp = true;
  for (std::size_t i = 0; i < n; ++i) {
    support[i] = problem.initial[i].support();
    all_crisp = all_crisp && support[i].width() == 0.0;
  }
  if (all_crisp) samples = 1;  // the prism is a single point

  OracleReport report;
  report.seed = seed;
  report.samples = samples;
  report.checks.reserve(t_checks.size());

  std::vector<double> worst(t_checks.size(), 0.0);
  for (std::size_t s = 0; s < samples; ++s) {
    std::uint64_t stream = mix64(seed ^ (0x5851f42d4c957f2dull * (s + 1)));
    Vec p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = support[i].lo + uniform01(stream) * support[i].width();
    }
    const double mu0 = sol.membership_of_trajectory(p);
    for (std::size_t c = 0; c < t_checks.size(); ++c) {
      const Vec image = propagate(problem.a, problem.forcing, problem.t0, p, t_checks[c],
                                  options.propagation_step);
      const double mu_t = sol.membership(image, t_checks[c]);
      worst[c] = std::max(worst[c], std::abs(mu_t - mu0));
    }
  }

  for (std::size_t c = 0; c < t_checks.size(); ++c) {
    report.max_membership_discrepancy = std::max(report.max_membership_discrepancy, worst[c]);
    report.checks.push_back({"membership preserved at t = " + std::to_string(t_checks[c]),
                             worst[c] <= options.membership_tol, worst[c]});
  }
  return report;
}

OracleReport run_containment_oracle(const Problem& problem, double alpha, double t,
                                    std::size_t grid_per_axis, const OracleOptions& options) {
  problem.validate();
  if (grid_per_axis < 2) throw InvalidInputError("containment oracle: grid_per_axis must be >= 2");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidInputError("containment oracle: alpha outside [0, 1]");
  }
  if (!(t >= problem.t0)) throw InvalidInputError("containment oracle: t must be >= t0");

  const std::size_t n = problem.dim();
  const double t_end = t > problem.t0 ? t : problem.t0 + 1.0;
  const FuzzySolution sol = solve(problem, t_end, solver_step(problem, t_end));
  const Parallelepiped region = sol.alpha_cut_region(t, alpha);

  std::vector<Interval> box(n);  // alpha-cut of the initial values, in state space
  for (std::size_t i = 0; i < n; ++i) box[i] = alpha_cut(problem.initial[i], alpha);

  auto propagate_initial = [&](const Vec& p) {
    return t == problem.t0
               ? p
               : propagate(problem.a, problem.forcing, problem.t0, p, t,
                           options.propagation_step);
  };

  OracleReport report;
  report.seed = 0;

  // Inside sweep: every grid point of the initial box must land inside.
  double worst_inside = 0.0;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= grid_per_axis;
  const Matrix g = sol.fundamental_matrix(t);
  const LuFactors g_lu(g);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    Vec p(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t idx = rest % grid_per_axis;
      rest /= grid_per_axis;
      p[i] = box[i].lo +
             box[i].width() * static_cast<double>(idx) / static_cast<double>(grid_per_axis - 1);
    }
    const Vec image = propagate_initial(p);
    const Vec c = g_lu.solve(image - region.center);
    for (std::size_t i = 0; i < n; ++i) {
      const double excess =
          std::max(region.intervals[i].lo - c[i], c[i] - region.intervals[i].hi);
      worst_inside = std::max(worst_inside, excess);
    }
  }
  report.samples = total;
  report.max_containment_violation = std::max(0.0, worst_inside);
  report.checks.push_back({"grid points contained in the alpha-cut region",
                           worst_inside <= options.containment_tol, std::max(0.0, worst_inside)});

  // Outside sweep: probes 5% beyond each face midpoint must be excluded.
  const Decomposition d = decompose(problem);
  bool all_excluded = true;
  double worst_outside = 0.0;  // how far a probe fell short of clearing the face by tol
  for (std::size_t i = 0; i < n; ++i) {
    const Interval ci = alpha_cut(d.offsets[i], alpha);
    if (ci.width() == 0.0) continue;  // no exterior along a degenerate direction
    for (int side = 0; side < 2; ++side) {
      Vec coeff(n);
      for (std::size_t j = 0; j < n; ++j) coeff[j] = alpha_cut(d.offsets[j], alpha).midpoint();
      const double face = side == 0 ? ci.lo : ci.hi;
      const double bulge = 0.05 * (face != 0.0 ? std::abs(face) : ci.width());
      coeff[i] = face + (side == 0 ? -bulge : bulge);

      Vec p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = d.b_cr[j] + coeff[j];
      const Vec image = propagate_initial(p);
      const bool inside = contains(region, image, options.containment_tol);
      if (inside) {
        all_excluded = false;
        worst_outside = std::max(worst_outside, bulge);
      }
    }
  }
  report.checks.push_back({"face probes outside the alpha-cut region excluded", all_excluded,
                           worst_outside});
  return report;
}

}  // namespace flsde
