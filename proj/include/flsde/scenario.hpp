#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flsde/fuzzy_number.hpp"
#include "flsde/solver.hpp"

namespace flsde {

/// One entry of a scenario's query plan.
struct Query {
  enum class Kind { Cut, Membership, Plot, Vertices };

  Kind kind = Kind::Cut;
  std::optional<double> time;
  std::optional<double> alpha;
  std::vector<double> times;   // plot queries
  std::vector<double> alphas;  // plot queries
  std::vector<double> point;   // membership queries

  friend bool operator==(const Query&, const Query&) = default;
};

/// Spec of one initial fuzzy component as it appears in a scenario file.
struct InitialSpec {
  enum class Type { Triangular, Parametric };

  Type type = Type::Triangular;
  Triangular triangular;          // when type == Triangular
  std::vector<double> levels;     // when type == Parametric
  std::vector<double> lower;
  std::vector<double> upper;

  FuzzyNumber to_fuzzy_number() const;

  friend bool operator==(const InitialSpec&, const InitialSpec&) = default;
};

/// Serializable description of a fuzzy initial value problem plus the
/// query plan executed by the command-line tool.
struct Scenario {
  std::size_t n = 0;
  std::vector<double> a;  // row-major n*n
  std::vector<std::vector<double>> forcing;
  double t0 = 0.0;
  double t_end = 0.0;
  double h = 1e-3;
  std::vector<InitialSpec> initial;
  std::optional<std::vector<double>> b_cr;
  std::vector<Query> queries;

  Problem to_problem() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses and validates a scenario file. Parse failures report the
/// position in the file; invariant violations name the offending field
/// and component index.
Scenario load_scenario(const std::string& path);

Scenario parse_scenario(const std::string& json_text);
std::string serialize_scenario(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::string& path);

}  // namespace flsde
