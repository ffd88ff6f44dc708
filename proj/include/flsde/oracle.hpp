#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flsde/solver.hpp"

namespace flsde {

struct OracleCheck {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // largest observed discrepancy / violation for this check
};

/// Result of a brute-force validation run; reproducible from the seed.
struct OracleReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double max_membership_discrepancy = 0.0;
  double max_containment_violation = 0.0;
  std::vector<OracleCheck> checks;

  bool passed() const;
};

/// Options shared by the oracle runs. Propagation uses plain RK4 at a
/// finer step than the solver default, so the two paths being compared
/// (point propagation vs fundamental matrix) stay independent.
struct OracleOptions {
  double propagation_step = 1e-4;
  double membership_tol = 1e-5;
  double containment_tol = 1e-6;
};

/// Draws initial points uniformly from the support prism, propagates each
/// by RK4, and compares the membership of the propagated point at every
/// check time against the possibility of its initial point.
OracleReport run_membership_oracle(const Problem& problem, const std::vector<double>& t_checks,
                                   std::size_t samples, std::uint64_t seed,
                                   const OracleOptions& options = {});

/// Grid-samples the alpha-cut box of initial values, propagates every
/// point and asserts containment in the alpha-cut region at time t; also
/// propagates probes just outside each face and asserts exclusion.
OracleReport run_containment_oracle(const Problem& problem, double alpha, double t,
                                    std::size_t grid_per_axis,
                                    const OracleOptions& options = {});

}  // namespace flsde
