#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "flsde/oracle.hpp"
#include "flsde/scenario.hpp"

namespace flsde::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNumericError = 3,
  kOracleFailure = 4,
};

/// One alpha-cut, ready for emission.
struct CutRecord {
  double t = 0.0;
  double alpha = 0.0;
  Vec center;
  std::vector<Vec> generators;
  std::vector<Interval> intervals;
  std::vector<Vec> polygon;  // closed CCW polygon, dimension 2 only

  std::string to_json() const;
  std::string polygon_csv() const;
};

CutRecord cmd_cut(const Scenario& scenario, double t, double alpha);

/// Gray-code-ordered vertices of the alpha-cut region.
std::vector<Vec> cmd_vertices(const Scenario& scenario, double t, double alpha);

double cmd_membership(const Scenario& scenario, double t, const Vec& point);

/// Trajectory dump: CSV with header t,x1,...,xn at the integrator nodes.
std::string cmd_solve(const Scenario& scenario);

/// Writes the trajectory polyline plus one closed-polygon CSV per
/// (time, alpha) pair into out_dir; returns the file names written.
std::vector<std::string> cmd_plotdata(const Scenario& scenario, std::vector<double> times,
                                      std::vector<double> alphas, const std::string& out_dir);

/// Runs the membership and containment oracles with default parameters.
OracleReport cmd_verify(const Scenario& scenario, std::uint64_t seed);

std::string report_to_json(const OracleReport& report);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flsde::cli
