#pragma once

#include "tork/betti_table.hpp"
#include "tork/conjectures.hpp"
#include "tork/graded_module.hpp"
#include "tork/simplicial_complex.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tork {

using Json = nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"m": <int>, "facets": [[<int>...], ...]} with 1-based vertices. Output
// lists facets in graded order.
Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

// {"m": <int>, "levels": [<int>...],
//  "mult": [{"var": i, "level": t, "entries": [[r, c, "p/q"], ...]}, ...]}
// var is 1-based, level and r/c are 0-based. Omitted operators are zero.
// Loading checks structure only; call validate() for shapes and commutativity.
Json module_to_json(const GradedModule& module);
GradedModule module_from_json(const Json& j);

using ModuleInput = std::variant<SimplicialComplex, GradedModule>;

// Complex if the object has "facets", module if it has "levels".
ModuleInput input_from_json(const Json& j);

// {"m": <int>, "entries": [{"i": <int>, "j2": <2j>, "beta": <int>}, ...]},
// nonzero entries only, sorted by (i, 2j).
Json table_to_json(const BettiTable& b);
BettiTable table_from_json(const Json& j);

// Header "i\t2j\tbeta", one line per nonzero entry.
std::string table_to_tsv(const BettiTable& b);

// Header "k\tdim", one line per degree 0..2·j_max.
std::string poincare_to_tsv(const std::vector<std::size_t>& poincare);

// {"suite", "proved", "params", "rows": [{"id", "lhs", "rhs", "status"}], "overall"};
// rhs is an integer when integral, otherwise "p/q".
Json report_to_json(const CheckReport& r);

}  // namespace tork
