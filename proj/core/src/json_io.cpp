// Copyright 2026 The qbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbell/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "qbell/errors.hpp"

namespace qbell {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(ErrorCode::kParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    raise(ErrorCode::kParseError, std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double number(const Json& v) {
  if (!v.is_number()) raise(ErrorCode::kParseError, "expected a number");
  return v.get<double>();
}

Rational rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  raise(ErrorCode::kParseError, "expected a rational string");
}

std::vector<std::string> default_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

Json rows_json(const std::vector<Halfspace>& rows, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& h : rows) {
    Json coeffs = Json::object();
    for (std::size_t i = 0; i < h.a.size(); ++i) {
      if (sgn(h.a[i]) != 0) coeffs[names[i]] = to_string(h.a[i]);
    }
    out.push_back({{"coeffs", coeffs}, {"rhs", to_string(h.b)}});
  }
  return out;
}

std::vector<Halfspace> rows_from_json(const Json& list, const std::vector<std::string>& names) {
  if (!list.is_array()) raise(ErrorCode::kParseError, "expected an array of inequalities");
  std::vector<Halfspace> rows;
  for (const auto& item : list) {
    Halfspace h{RationalVector(names.size(), Rational(0)), rational(field(item, "rhs"))};
    const Json& coeffs = field(item, "coeffs");
    if (!coeffs.is_object()) raise(ErrorCode::kParseError, "coeffs must be an object");
    for (const auto& [name, value] : coeffs.items()) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) raise(ErrorCode::kParseError, "undeclared variable '" + name + "'");
      h.a[static_cast<std::size_t>(it - names.begin())] = rational(value);
    }
    rows.push_back(std::move(h));
  }
  return rows;
}

std::vector<std::string> names_from_json(const Json& j) {
  const Json& vars = field(j, "vars");
  if (!vars.is_array()) raise(ErrorCode::kParseError, "vars must be an array");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) raise(ErrorCode::kParseError, "variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  return names;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::kParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& value) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out << value.dump(2) << '\n';
}

Correlation correlation_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const std::size_t m = size_field(j, "m");
  const Json& rows = field(j, "c");
  if (!rows.is_array() || rows.size() != n) raise(ErrorCode::kParseError, "c must have n rows");
  std::vector<double> values;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != m) raise(ErrorCode::kParseError, "each row of c must have m entries");
    for (const auto& v : row) values.push_back(number(v));
  }
  try {
    return Correlation(n, m, std::move(values));
  } catch (const Error& e) {
    raise(ErrorCode::kParseError, e.what());
  }
}

Json to_json(const Correlation& c) {
  Json rows = Json::array();
  for (const auto& row : c.rows()) rows.push_back(row);
  return {{"n", c.n()}, {"m", c.m()}, {"c", rows}};
}

BehaviorTable behavior_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  const std::size_t m = size_field(j, "m");
  BehaviorTable table(n, m);
  const Json& p = field(j, "p");
  if (!p.is_object()) raise(ErrorCode::kParseError, "p must be an object");
  for (const auto& [key, value] : p.items()) {
    int a = 0, b = 0;
    long x = -1, y = -1;
    char tail = 0;
    if (std::sscanf(key.c_str(), "%d,%d,%ld,%ld%c", &a, &b, &x, &y, &tail) != 4 || (a != 1 && a != -1) ||
        (b != 1 && b != -1) || x < 0 || y < 0 || static_cast<std::size_t>(x) >= n ||
        static_cast<std::size_t>(y) >= m) {
      raise(ErrorCode::kParseError, "bad behaviour key '" + key + "'");
    }
    table.set_probability(a, b, static_cast<std::size_t>(x), static_cast<std::size_t>(y), number(value));
  }
  return table;
}

Json to_json(const BehaviorTable& t) {
  Json p = Json::object();
  for (std::size_t x = 0; x < t.n(); ++x) {
    for (std::size_t y = 0; y < t.m(); ++y) {
      for (int a : {1, -1}) {
        for (int b : {1, -1}) {
          p[std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(x) + "," + std::to_string(y)] =
              t.probability(a, b, x, y);
        }
      }
    }
  }
  return {{"n", t.n()}, {"m", t.m()}, {"p", p}};
}

PartialSymMatrix partial_matrix_from_json(const Json& j) {
  const std::size_t dim = size_field(j, "dim");
  if (dim == 0) raise(ErrorCode::kParseError, "dim must be positive");
  PartialSymMatrix p(dim);
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) raise(ErrorCode::kParseError, "entries must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      raise(ErrorCode::kParseError, "entries are [i, j, value] with 0-based indices");
    }
    try {
      p.specify(e[0].get<std::size_t>(), e[1].get<std::size_t>(), number(e[2]));
    } catch (const Error& err) {
      raise(ErrorCode::kParseError, err.what());
    }
  }
  return p;
}

Json to_json(const PartialSymMatrix& p) {
  Json entries = Json::array();
  for (const auto& [i, j, v] : p.entries()) entries.push_back(Json::array({i, j, v}));
  return {{"dim", p.dim()}, {"entries", entries}};
}

Graph graph_from_json(const Json& j) {
  const std::size_t n = size_field(j, "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) raise(ErrorCode::kParseError, "edges must be an array");
  std::vector<Edge> list;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      raise(ErrorCode::kParseError, "edges are [u, v] pairs of vertex indices");
    }
    list.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  try {
    return Graph(n, std::move(list));
  } catch (const Error& err) {
    raise(ErrorCode::kParseError, err.what());
  }
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

LinSystem system_from_json(const Json& j) {
  const auto names = names_from_json(j);
  LinSystem s(names);
  for (const auto& h : rows_from_json(field(j, "ineqs"), names)) s.add({h.a, h.b});
  return s;
}

Json to_json(const LinSystem& s) {
  std::vector<Halfspace> rows;
  for (const auto& q : s.inequalities()) rows.push_back({q.coeffs, q.rhs});
  return {{"vars", s.variables()}, {"ineqs", rows_json(rows, s.variables())}};
}

HPolytope hpolytope_from_json(const Json& j) {
  const auto names = names_from_json(j);
  HPolytope p(names.size());
  for (const auto& h : rows_from_json(field(j, "ineqs"), names)) p.add(h);
  if (j.contains("equations")) {
    for (const auto& h : rows_from_json(j.at("equations"), names)) p.add_equation(h);
  }
  return p;
}

Json to_json(const HPolytope& p, const std::vector<std::string>& variables) {
  const auto names = variables.empty() ? default_names(p.dim) : variables;
  if (names.size() != p.dim) raise(ErrorCode::kInvalidArgument, "variable count does not match dimension");
  Json out = {{"vars", names}, {"ineqs", rows_json(p.ineqs, names)}};
  if (!p.equations.empty()) out["equations"] = rows_json(p.equations, names);
  return out;
}

VPolytope vpolytope_from_json(const Json& j) {
  VPolytope p(size_field(j, "dim"));
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) raise(ErrorCode::kParseError, "vertices must be an array");
  for (const auto& v : vertices) {
    if (!v.is_array() || v.size() != p.dim) raise(ErrorCode::kParseError, "vertex has wrong dimension");
    RationalVector point;
    for (const auto& x : v) point.push_back(rational(x));
    p.vertices.push_back(std::move(point));
  }
  p.canonicalize();
  return p;
}

Json to_json(const VPolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    vertices.push_back(row);
  }
  return {{"dim", p.dim}, {"vertices", vertices}};
}

Json to_json(const SymMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_rows()) rows.push_back(row);
  return rows;
}

Json to_json(const Cor33Witness& w) {
  Json vectors = Json::array();
  for (const auto& v : w.vectors) vectors.push_back(v);
  return {{"alpha", w.alpha}, {"beta", w.beta}, {"gamma", w.gamma},
          {"margin", w.margin}, {"gram", to_json(w.gram)}, {"vectors", vectors}};
}

}  // namespace qbell
