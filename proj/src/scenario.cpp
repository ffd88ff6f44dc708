#include "flsde/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "flsde/errors.hpp"

namespace flsde {

namespace {

using nlohmann::json;

const char* kind_name(Query::Kind k) {
  switch (k) {
    case Query::Kind::Cut: return "cut";
    case Query::Kind::Membership: return "membership";
    case Query::Kind::Plot: return "plot";
    case Query::Kind::Vertices: return "vertices";
  }
  return "cut";
}

Query::Kind kind_from(const std::string& name) {
  if (name == "cut") return Query::Kind::Cut;
  if (name == "membership") return Query::Kind::Membership;
  if (name == "plot") return Query::Kind::Plot;
  if (name == "vertices") return Query::Kind::Vertices;
  throw InvalidInputError("scenario: unknown query kind \"" + name + "\"");
}

double require_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw InvalidInputError("scenario: missing or non-numeric field \"" + field + "\"");
  }
  return j[field].get<double>();
}

std::vector<double> number_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw InvalidInputError("scenario: field \"" + field + "\" must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw InvalidInputError("scenario: field \"" + field + "\" contains a non-numeric entry");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

InitialSpec parse_initial(const json& j, std::size_t index) {
  const std::string where = "initial[" + std::to_string(index) + "]";
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw InvalidInputError("scenario: " + where + " must be an object with a \"type\"");
  }
  InitialSpec spec;
  const std::string type = j["type"].get<std::string>();
  if (type == "triangular") {
    spec.type = InitialSpec::Type::Triangular;
    spec.triangular.a = require_number(j, "a");
    spec.triangular.c = require_number(j, "c");
    spec.triangular.b = require_number(j, "b");
  } else if (type == "parametric") {
    spec.type = InitialSpec::Type::Parametric;
    if (!j.contains("levels") || !j.contains("lower") || !j.contains("upper")) {
      throw InvalidInputError("scenario: " + where +
                              " needs \"levels\", \"lower\" and \"upper\" arrays");
    }
    spec.levels = number_array(j["levels"], where + ".levels");
    spec.lower = number_array(j["lower"], where + ".lower");
    spec.upper = number_array(j["upper"], where + ".upper");
  } else {
    throw InvalidInputError("scenario: " + where + " has unknown type \"" + type + "\"");
  }
  try {
    spec.to_fuzzy_number();  // runs all fuzzy-number invariants now
  } catch (const InvalidInputError& e) {
    throw InvalidInputError("scenario: " + where + ": " + e.what());
  }
  return spec;
}

Query parse_query(const json& j, std::size_t index) {
  const std::string where = "queries[" + std::to_string(index) + "]";
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InvalidInputError("scenario: " + where + " must be an object with a \"kind\"");
  }
  Query q;
  q.kind = kind_from(j["kind"].get<std::string>());
  if (j.contains("time")) q.time = require_number(j, "time");
  if (j.contains("alpha")) q.alpha = require_number(j, "alpha");
  if (j.contains("times")) q.times = number_array(j["times"], where + ".times");
  if (j.contains("alphas")) q.alphas = number_array(j["alphas"], where + ".alphas");
  if (j.contains("point")) q.point = number_array(j["point"], where + ".point");
  return q;
}

}  // namespace

FuzzyNumber InitialSpec::to_fuzzy_number() const {
  if (type == Type::Triangular) {
    return make_triangular(triangular);
  }
  return make_parametric(levels, lower, upper);
}

Problem Scenario::to_problem() const {
  Problem p{Matrix(n, a), Forcing::polynomial(forcing), t0, {}, {}};
  p.initial.reserve(initial.size());
  for (const InitialSpec& spec : initial) p.initial.push_back(spec.to_fuzzy_number());
  if (b_cr) p.crisp_initial = *b_cr;
  p.validate();
  return p;
}

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("scenario: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInputError("scenario: top level must be an object");

  Scenario s;
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    throw InvalidInputError("scenario: field \"n\" must be a positive integer");
  }
  s.n = j["n"].get<std::size_t>();

  if (!j.contains("A")) throw InvalidInputError("scenario: missing field \"A\"");
  s.a = number_array(j["A"], "A");
  if (s.a.size() != s.n * s.n) {
    throw InvalidInputError("scenario: field \"A\" must hold n*n = " +
                            std::to_string(s.n * s.n) + " entries, got " +
                            std::to_string(s.a.size()));
  }

  if (!j.contains("forcing") || !j["forcing"].is_array() || j["forcing"].size() != s.n) {
    throw InvalidInputError("scenario: field \"forcing\" must be an array of n coefficient lists");
  }
  for (std::size_t i = 0; i < s.n; ++i) {
    s.forcing.push_back(number_array(j["forcing"][i], "forcing[" + std::to_string(i) + "]"));
  }

  s.t0 = require_number(j, "t0");
  s.t_end = require_number(j, "t_end");
  s.h = require_number(j, "h");
  if (!(s.h > 0.0)) throw InvalidInputError("scenario: field \"h\" must be positive");
  if (!(s.t_end > s.t0)) throw InvalidInputError("scenario: \"t_end\" must exceed \"t0\"");

  if (!j.contains("initial") || !j["initial"].is_array() || j["initial"].size() != s.n) {
    throw InvalidInputError("scenario: field \"initial\" must be an array of n fuzzy numbers");
  }
  for (std::size_t i = 0; i < s.n; ++i) s.initial.push_back(parse_initial(j["initial"][i], i));

  if (j.contains("b_cr")) {
    s.b_cr = number_array(j["b_cr"], "b_cr");
    if (s.b_cr->size() != s.n) {
      throw InvalidInputError("scenario: field \"b_cr\" must hold n entries");
    }
  }
  if (j.contains("queries")) {
    if (!j["queries"].is_array()) throw InvalidInputError("scenario: \"queries\" must be an array");
    for (std::size_t i = 0; i < j["queries"].size(); ++i) {
      s.queries.push_back(parse_query(j["queries"][i], i));
    }
  }

  s.to_problem();  // full structural validation, including the b_cr core check
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("scenario: cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario(buffer.str());
  } catch (const InvalidInputError& e) {
    throw InvalidInputError(std::string(e.what()) + " (file: " + path + ")");
  }
}

std::string serialize_scenario(const Scenario& s) {
  json j;
  j["n"] = s.n;
  j["A"] = s.a;
  j["forcing"] = s.forcing;
  j["t0"] = s.t0;
  j["t_end"] = s.t_end;
  j["h"] = s.h;
  j["initial"] = json::array();
  for (const InitialSpec& spec : s.initial) {
    json e;
    if (spec.type == InitialSpec::Type::Triangular) {
      e["type"] = "triangular";
      e["a"] = spec.triangular.a;
      e["c"] = spec.triangular.c;
      e["b"] = spec.triangular.b;
    } else {
      e["type"] = "parametric";
      e["levels"] = spec.levels;
      e["lower"] = spec.lower;
      e["upper"] = spec.upper;
    }
    j["initial"].push_back(std::move(e));
  }
  if (s.b_cr) j["b_cr"] = *s.b_cr;
  if (!s.queries.empty()) {
    j["queries"] = json::array();
    for (const Query& q : s.queries) {
      json e;
      e["kind"] = kind_name(q.kind);
      if (q.time) e["time"] = *q.time;
      if (q.alpha) e["alpha"] = *q.alpha;
      if (!q.times.empty()) e["times"] = q.times;
      if (!q.alphas.empty()) e["alphas"] = q.alphas;
      if (!q.point.empty()) e["point"] = q.point;
      j["queries"].push_back(std::move(e));
    }
  }
  return j.dump(2) + "\n";
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("scenario: cannot write \"" + path + "\"");
  out << serialize_scenario(scenario);
}

}  // namespace flsde
