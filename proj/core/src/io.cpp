#include "tork/io.hpp"

#include <sstream>

namespace tork {

namespace {

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

long long require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + " must be an integer");
  return j.get<long long>();
}

std::size_t require_index(const Json& j, const std::string& where) {
  const long long v = require_int(j, where);
  if (v < 0) throw SchemaError(where + " must be non-negative");
  return static_cast<std::size_t>(v);
}

Json rational_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(where + " must be a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Json param_to_json(const ParamValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

}  // namespace

Json complex_to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (FaceMask f : k.facets()) {
    if (f == 0) continue;  // {∅} has no nonempty facets
    facets.push_back(to_vertices(f));
  }
  return Json{{"m", k.num_vertices()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const long long m = require_int(require(j, "m", "complex"), "complex.m");
  if (m < 0 || m > kMaxVertices) {
    throw SchemaError("complex.m must be in 0.." + std::to_string(kMaxVertices));
  }
  const Json& facets = require(j, "facets", "complex");
  if (!facets.is_array()) throw SchemaError("complex.facets must be an array");
  std::vector<VertexList> lists;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const std::string where = "complex.facets[" + std::to_string(f) + "]";
    if (!facets[f].is_array()) throw SchemaError(where + " must be an array of vertices");
    VertexList vl;
    for (const auto& v : facets[f]) {
      const long long x = require_int(v, where);
      if (x < 1 || x > m) {
        throw SchemaError(where + ": vertex " + std::to_string(x) + " outside 1.." +
                          std::to_string(m));
      }
      vl.push_back(static_cast<int>(x));
    }
    lists.push_back(std::move(vl));
  }
  return SimplicialComplex::from_facets(static_cast<int>(m), lists);
}

Json module_to_json(const GradedModule& module) {
  Json mult = Json::array();
  for (int i = 0; i < module.num_vars(); ++i) {
    for (std::size_t t = 0; t + 1 < module.num_levels(); ++t) {
      const auto& a = module.mult(i, t);
      if (a.is_zero()) continue;
      Json entries = Json::array();
      for (const auto& e : a.entries()) {
        entries.push_back(Json::array({e.row, e.col, to_string(e.value)}));
      }
      mult.push_back(Json{{"var", i + 1}, {"level", t}, {"entries", std::move(entries)}});
    }
  }
  return Json{{"m", module.num_vars()}, {"levels", module.level_dims()}, {"mult", std::move(mult)}};
}

GradedModule module_from_json(const Json& j) {
  const long long m = require_int(require(j, "m", "module"), "module.m");
  if (m < 0 || m > kMaxVertices) {
    throw SchemaError("module.m must be in 0.." + std::to_string(kMaxVertices));
  }
  const Json& levels = require(j, "levels", "module");
  if (!levels.is_array()) throw SchemaError("module.levels must be an array");
  std::vector<std::size_t> dims;
  for (std::size_t t = 0; t < levels.size(); ++t) {
    dims.push_back(require_index(levels[t], "module.levels[" + std::to_string(t) + "]"));
  }
  const std::size_t slots = dims.empty() ? 0 : dims.size() - 1;

  // Shapes default to the declared levels; explicit entries must fit them.
  std::vector<std::vector<std::vector<MatrixEntry>>> entries(
      static_cast<std::size_t>(m), std::vector<std::vector<MatrixEntry>>(slots));
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(m), std::vector<bool>(slots, false));
  if (auto it = j.find("mult"); it != j.end()) {
    if (!it->is_array()) throw SchemaError("module.mult must be an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const Json& op = (*it)[k];
      const std::string where = "module.mult[" + std::to_string(k) + "]";
      const long long var = require_int(require(op, "var", where.c_str()), where + ".var");
      const std::size_t level = require_index(require(op, "level", where.c_str()), where + ".level");
      if (var < 1 || var > m) throw SchemaError(where + ".var must be in 1..m");
      if (level >= slots) throw SchemaError(where + ".level must be below the top level");
      const auto vi = static_cast<std::size_t>(var - 1);
      if (seen[vi][level]) throw SchemaError(where + " repeats an operator");
      seen[vi][level] = true;
      const Json& list = require(op, "entries", where.c_str());
      if (!list.is_array()) throw SchemaError(where + ".entries must be an array");
      for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string at = where + ".entries[" + std::to_string(e) + "]";
        if (!list[e].is_array() || list[e].size() != 3) {
          throw SchemaError(at + " must be [row, col, \"p/q\"]");
        }
        const std::size_t r = require_index(list[e][0], at + "[0]");
        const std::size_t c = require_index(list[e][1], at + "[1]");
        if (r >= dims[level + 1] || c >= dims[level]) {
          throw SchemaError(at + " lies outside " + std::to_string(dims[level + 1]) + "x" +
                            std::to_string(dims[level]));
        }
        entries[vi][level].push_back({r, c, rational_from_json(list[e][2], at + "[2]")});
      }
    }
  }
  std::vector<std::vector<SparseMatrix>> mult(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < mult.size(); ++i) {
    for (std::size_t t = 0; t < slots; ++t) {
      try {
        mult[i].emplace_back(dims[t + 1], dims[t], std::move(entries[i][t]));
      } catch (const std::invalid_argument& e) {
        throw SchemaError("module operator v" + std::to_string(i + 1) + " at level " +
                          std::to_string(t) + ": " + e.what());
      }
    }
  }
  return GradedModule(static_cast<int>(m), std::move(dims), std::move(mult));
}

ModuleInput input_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("input must be a JSON object");
  const bool complex = j.contains("facets");
  const bool module = j.contains("levels");
  if (complex && module) throw SchemaError("input has both \"facets\" and \"levels\"");
  if (complex) return complex_from_json(j);
  if (module) return module_from_json(j);
  throw SchemaError("input is neither a complex (\"facets\") nor a module (\"levels\")");
}

Json table_to_json(const BettiTable& b) {
  Json entries = Json::array();
  for (int i = 0; i <= b.num_vars(); ++i) {
    for (std::size_t j = 0; j <= b.j_max(); ++j) {
      if (b.at(i, j) == 0) continue;
      entries.push_back(Json{{"i", i}, {"j2", 2 * j}, {"beta", b.at(i, j)}});
    }
  }
  return Json{{"m", b.num_vars()}, {"entries", std::move(entries)}};
}

BettiTable table_from_json(const Json& j) {
  const long long m = require_int(require(j, "m", "table"), "table.m");
  if (m < 0) throw SchemaError("table.m must be non-negative");
  const Json& entries = require(j, "entries", "table");
  if (!entries.is_array()) throw SchemaError("table.entries must be an array");
  struct Cell {
    int i;
    std::size_t j;
    std::size_t beta;
  };
  std::vector<Cell> cells;
  std::size_t j_max = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string where = "table.entries[" + std::to_string(k) + "]";
    const std::size_t i = require_index(require(entries[k], "i", where.c_str()), where + ".i");
    const std::size_t j2 = require_index(require(entries[k], "j2", where.c_str()), where + ".j2");
    const std::size_t beta = require_index(require(entries[k], "beta", where.c_str()), where + ".beta");
    if (i > static_cast<std::size_t>(m)) throw SchemaError(where + ".i exceeds m");
    if (j2 % 2 != 0) throw SchemaError(where + ".j2 must be even");
    cells.push_back({static_cast<int>(i), j2 / 2, beta});
    j_max = std::max(j_max, j2 / 2);
  }
  BettiTable table(static_cast<int>(m), j_max);
  for (const auto& c : cells) table.add(c.i, c.j, c.beta);
  return table;
}

std::string table_to_tsv(const BettiTable& b) {
  std::ostringstream out;
  out << "i\t2j\tbeta\n";
  for (int i = 0; i <= b.num_vars(); ++i) {
    for (std::size_t j = 0; j <= b.j_max(); ++j) {
      if (b.at(i, j) != 0) out << i << '\t' << 2 * j << '\t' << b.at(i, j) << '\n';
    }
  }
  return out.str();
}

std::string poincare_to_tsv(const std::vector<std::size_t>& poincare) {
  std::ostringstream out;
  out << "k\tdim\n";
  for (std::size_t k = 0; k < poincare.size(); ++k) out << k << '\t' << poincare[k] << '\n';
  return out.str();
}

Json report_to_json(const CheckReport& r) {
  Json params = Json::object();
  for (const auto& [key, value] : r.params) params[key] = param_to_json(value);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"id", row.id},
                        {"lhs", row.lhs},
                        {"rhs", rational_to_json(row.rhs)},
                        {"status", std::string(to_string(row.status))}});
  }
  return Json{{"suite", r.suite},
              {"proved", r.proved},
              {"params", std::move(params)},
              {"rows", std::move(rows)},
              {"overall", std::string(to_string(r.overall()))}};
}

}  // namespace tork
