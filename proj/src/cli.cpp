#include "flsde/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "flsde/errors.hpp"
#include "flsde/geometry.hpp"

namespace flsde::cli {

namespace {

using nlohmann::json;

// Full-precision text form so emitted numbers survive a round trip.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (double x : v) out.push_back(x);
  return out;
}

FuzzySolution solve_scenario(const Scenario& s) {
  return solve(s.to_problem(), s.t_end, s.h);
}

Vec parse_point(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInputError("--point: cannot parse \"" + item + "\" as a number");
    }
  }
  if (out.empty()) throw InvalidInputError("--point: empty coordinate list");
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path);
  if (!f) throw InvalidInputError("cannot write \"" + path + "\"");
  f << contents;
}

std::string trajectory_csv(const CrispTrajectory& traj) {
  std::ostringstream out;
  out << "t";
  for (std::size_t i = 1; i <= traj.dim(); ++i) out << ",x" << i;
  out << "\n";
  for (std::size_t k = 0; k < traj.times().size(); ++k) {
    out << num(traj.times()[k]);
    for (double v : traj.states()[k]) out << "," << num(v);
    out << "\n";
  }
  return out.str();
}

std::string closed_polygon_csv(const Parallelepiped& region) {
  std::ostringstream out;
  std::vector<Vec> pts = region.dim() == 2 ? polygon2d(region) : vertices(region);
  pts.push_back(pts.front());  // closed: first vertex repeated
  for (std::size_t i = 1; i <= region.dim(); ++i) out << (i == 1 ? "x" : ",x") << i;
  out << "\n";
  for (const Vec& p : pts) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i == 0 ? "" : ",") << num(p[i]);
    out << "\n";
  }
  return out.str();
}

int run_parsed(const std::string& command, const Scenario& scenario, double t, double alpha,
               const std::string& point_text, std::uint64_t seed,
               const std::vector<double>& times, const std::vector<double>& alphas,
               const std::string& out_dir, std::ostream& out) {
  if (command == "solve") {
    const std::string csv = cmd_solve(scenario);
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      write_file(out_dir + "/trajectory.csv", csv);
      out << out_dir << "/trajectory.csv\n";
    } else {
      out << csv;
    }
    return kOk;
  }
  if (command == "cut") {
    const CutRecord record = cmd_cut(scenario, t, alpha);
    out << record.to_json() << "\n";
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      write_file(out_dir + "/cut.json", record.to_json() + "\n");
      if (!record.polygon.empty()) write_file(out_dir + "/cut_polygon.csv", record.polygon_csv());
    }
    return kOk;
  }
  if (command == "vertices") {
    json j = json::array();
    for (const Vec& v : cmd_vertices(scenario, t, alpha)) j.push_back(vec_json(v));
    out << j.dump() << "\n";
    return kOk;
  }
  if (command == "membership") {
    out << num(cmd_membership(scenario, t, parse_point(point_text))) << "\n";
    return kOk;
  }
  if (command == "plotdata") {
    const std::string dir = out_dir.empty() ? "." : out_dir;
    for (const std::string& name : cmd_plotdata(scenario, times, alphas, dir)) {
      out << name << "\n";
    }
    return kOk;
  }
  // verify
  const OracleReport report = cmd_verify(scenario, seed);
  out << report_to_json(report) << "\n";
  return report.passed() ? kOk : kOracleFailure;
}

}  // namespace

std::string CutRecord::to_json() const {
  json j;
  j["t"] = t;
  j["alpha"] = alpha;
  j["center"] = vec_json(center);
  j["generators"] = json::array();
  for (const Vec& g : generators) j["generators"].push_back(vec_json(g));
  j["intervals"] = json::array();
  for (const Interval& iv : intervals) j["intervals"].push_back(json::array({iv.lo, iv.hi}));
  if (!polygon.empty()) {
    j["polygon"] = json::array();
    for (const Vec& p : polygon) j["polygon"].push_back(vec_json(p));
  }
  return j.dump();
}

std::string CutRecord::polygon_csv() const {
  std::ostringstream out;
  out << "x1,x2\n";
  for (const Vec& p : polygon) out << num(p[0]) << "," << num(p[1]) << "\n";
  out << num(polygon.front()[0]) << "," << num(polygon.front()[1]) << "\n";
  return out.str();
}

CutRecord cmd_cut(const Scenario& scenario, double t, double alpha) {
  const FuzzySolution sol = solve_scenario(scenario);
  const Parallelepiped region = sol.alpha_cut_region(t, alpha);
  CutRecord record{t,      alpha, region.center, region.generators, region.intervals,
                   {}};
  if (region.dim() == 2) record.polygon = polygon2d(region);
  return record;
}

std::vector<Vec> cmd_vertices(const Scenario& scenario, double t, double alpha) {
  return vertices(solve_scenario(scenario).alpha_cut_region(t, alpha));
}

double cmd_membership(const Scenario& scenario, double t, const Vec& point) {
  return solve_scenario(scenario).membership(point, t);
}

std::string cmd_solve(const Scenario& scenario) {
  return trajectory_csv(solve_scenario(scenario).crisp_trajectory());
}

std::vector<std::string> cmd_plotdata(const Scenario& scenario, std::vector<double> times,
                                      std::vector<double> alphas, const std::string& out_dir) {
  // An explicit plot query in the scenario supplies defaults.
  if (times.empty() && alphas.empty()) {
    for (const Query& q : scenario.queries) {
      if (q.kind == Query::Kind::Plot) {
        times = q.times;
        alphas = q.alphas;
        break;
      }
    }
  }
  if (alphas.empty() && !times.empty()) alphas.push_back(0.0);

  const FuzzySolution sol = solve_scenario(scenario);
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;

  write_file(out_dir + "/trajectory.csv", trajectory_csv(sol.crisp_trajectory()));
  written.push_back("trajectory.csv");

  for (double t : times) {
    for (double alpha : alphas) {
      char name[64];
      std::snprintf(name, sizeof name, "cut_t%g_alpha%g.csv", t, alpha);
      write_file(out_dir + "/" + name, closed_polygon_csv(sol.alpha_cut_region(t, alpha)));
      written.push_back(name);
    }
  }
  return written;
}

OracleReport cmd_verify(const Scenario& scenario, std::uint64_t seed) {
  const Problem problem = scenario.to_problem();
  const double mid = scenario.t0 + 0.5 * (scenario.t_end - scenario.t0);

  OracleReport report = run_membership_oracle(problem, {mid, scenario.t_end}, 1000, seed);
  OracleReport containment = run_containment_oracle(problem, 0.5, mid, 9);
  report.max_containment_violation = containment.max_containment_violation;
  for (OracleCheck& check : containment.checks) report.checks.push_back(std::move(check));
  return report;
}

std::string report_to_json(const OracleReport& report) {
  json j;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  j["max_membership_discrepancy"] = report.max_membership_discrepancy;
  j["max_containment_violation"] = report.max_containment_violation;
  j["passed"] = report.passed();
  j["checks"] = json::array();
  for (const OracleCheck& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"worst", c.worst}});
  }
  return j.dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear ODE systems with fuzzy initial conditions"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string point_text;
  std::string out_dir;
  double t = 0.0;
  double alpha = 0.0;
  std::uint64_t seed = 42;
  std::vector<double> times;
  std::vector<double> alphas;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    return cmd;
  };

  CLI::App* solve_cmd = add_common(app.add_subcommand("solve", "dump the crisp trajectory"));
  solve_cmd->add_option("--out", out_dir, "output directory");

  CLI::App* cut_cmd = add_common(app.add_subcommand("cut", "alpha-cut region at a time"));
  cut_cmd->add_option("--time", t, "query time")->required();
  cut_cmd->add_option("--alpha", alpha, "cut level in [0, 1]")->required();
  cut_cmd->add_option("--out", out_dir, "output directory");

  CLI::App* vert_cmd = add_common(app.add_subcommand("vertices", "region corner points"));
  vert_cmd->add_option("--time", t, "query time")->required();
  vert_cmd->add_option("--alpha", alpha, "cut level in [0, 1]")->required();

  CLI::App* mem_cmd = add_common(app.add_subcommand("membership", "possibility of a point"));
  mem_cmd->add_option("--time", t, "query time")->required();
  mem_cmd->add_option("--point", point_text, "comma-separated coordinates")->required();

  CLI::App* plot_cmd = add_common(app.add_subcommand("plotdata", "emit plot-ready files"));
  plot_cmd->add_option("--time", times, "cut time (repeatable)");
  plot_cmd->add_option("--alpha", alphas, "cut level (repeatable)");
  plot_cmd->add_option("--out", out_dir, "output directory (default .)");

  CLI::App* verify_cmd = add_common(app.add_subcommand("verify", "run the validation oracles"));
  verify_cmd->add_option("--seed", seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const Scenario scenario = load_scenario(scenario_path);
    const std::string command = app.get_subcommands().front()->get_name();
    return run_parsed(command, scenario, t, alpha, point_text, seed, times, alphas, out_dir, out);
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericError;
  }
}

}  // namespace flsde::cli
