#pragma once

#include "tork/betti_table.hpp"
#include "tork/graded_module.hpp"
#include "tork/koszul.hpp"
#include "tork/rational.hpp"
#include "tork/simplicial_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tork {

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view to_string(CheckStatus status);  // "pass", "fail", "na"

struct CheckRow {
  std::string id;
  long long lhs = 0;
  Rational rhs;
  CheckStatus status = CheckStatus::NotApplicable;
};

using ParamValue = std::variant<long long, bool, std::string>;

// One inequality suite applied to one table. When the suite's hypothesis is
// unmet, rows still carry their factual comparison but the overall status is
// "na".
struct CheckReport {
  std::string suite;
  bool proved = false;  // failures of proved suites indicate an engine bug
  bool applicable = true;
  std::map<std::string, ParamValue> params;
  std::vector<CheckRow> rows;

  // na if not applicable; otherwise fail if any row fails, pass if every row
  // passes, na if no row was decidable.
  CheckStatus overall() const;
};

// What is known about the module a table came from; drives applicability.
struct ModuleFacts {
  bool finite_dimensional = false;      // dim_Q M < ∞
  bool monomial = false;                // M = S(m)/I with I a monomial ideal
  std::optional<int> complex_size;      // n = dim K + 1 for Stanley-Reisner inputs

  static ModuleFacts finite_module() { return {true, false, std::nullopt}; }
  static ModuleFacts monomial_quotient() { return {true, true, std::nullopt}; }
  // Q[K] is finite-dimensional only when K has no vertices.
  static ModuleFacts stanley_reisner(const SimplicialComplex& k) {
    return {k.dimension() < 0, true, k.dimension() + 1};
  }
};

// β^{-i} ≥ C(m, i), i = 0..m. Conjectural; hypothesis dim M < ∞, M ≠ 0. When the
// hypothesis fails the report also carries the β^{-i} ≥ C(pd, i) analogue rows.
CheckReport check_horrocks(const BettiTable& b, const ModuleFacts& facts);

// hrk ≥ 2^m. Conjectural; hypothesis dim M < ∞, M ≠ 0 and pd = m.
CheckReport check_weak_horrocks(const BettiTable& b, const ModuleFacts& facts);

// β^0 ≥ 1, β^{-1} ≥ m, β^{-(m-1)} ≥ m, β^{-m} ≥ 1. Proved for dim M < ∞, m ≥ 1.
CheckReport check_corner_bounds(const BettiTable& b, const ModuleFacts& facts);

// hrk ≥ 3m - 1 (odd m), hrk ≥ 5m - 4 (even m ≥ 4). Proved for dim M < ∞.
CheckReport check_parity_bounds(const BettiTable& b, const ModuleFacts& facts);

// hrk ≥ (3/2)(m - 1)² + 8, compared exactly. Proved for dim M < ∞, m ≥ 5.
CheckReport check_avramov_buchweitz(const BettiTable& b, const ModuleFacts& facts);

// β^{-i} ≥ C(pd, i), i = 0..pd. Proved for monomial quotients. With a known
// n = dim K + 1 the report adds pd ≥ m - n and Σ_j β^{-i,2j} ≥ C(m - n, i).
// Throws std::invalid_argument on the zero table.
CheckReport check_evans_griffith(const BettiTable& b, const ModuleFacts& facts);

// hrk ≥ 2^{m-n} for the table of Q[K], n = dim K + 1. Proved.
CheckReport check_toral_rank_zk(const BettiTable& b, int complex_size);

// β^{-i}(M) = β^{-(m-i)}(M*) for every i. Proved for finite-dimensional M.
CheckReport check_duality(const GradedModule& module, const KoszulOptions& options = {});

// Σ_i (-1)^i β^{-i} = 0. Proved for dim M < ∞, m ≥ 1.
CheckReport check_euler(const BettiTable& b, const ModuleFacts& facts);

enum class Suite { Horrocks, Weak, Corners, Parity, AvramovBuchweitz, EvansGriffith, ToralRank,
                   Duality, Euler };

std::string_view suite_name(Suite s);  // horrocks, weak, corners, parity, ab, eg, trk, duality, euler
bool is_proved(Suite s);
const std::vector<Suite>& all_suites();

// Comma-separated names, "all" expands to every suite. Throws
// std::invalid_argument on an unknown name.
std::vector<Suite> parse_suites(std::string_view list);

// Runs the requested suites. `module` is needed for duality; without it the
// duality report is na. Zero tables yield na reports instead of throwing.
std::vector<CheckReport> run_suites(const std::vector<Suite>& suites, const BettiTable& b,
                                    const ModuleFacts& facts, const GradedModule* module = nullptr,
                                    const KoszulOptions& options = {});

}  // namespace tork
