#include "tork/conjectures.hpp"

#include <algorithm>
#include <stdexcept>

namespace tork {

namespace {

CheckStatus at_least(long long lhs, const Rational& rhs) {
  return Rational(static_cast<long>(lhs)) >= rhs ? CheckStatus::Pass : CheckStatus::Fail;
}

CheckRow ge_row(std::string id, long long lhs, Rational rhs) {
  CheckRow row{std::move(id), lhs, std::move(rhs), CheckStatus::NotApplicable};
  row.status = at_least(row.lhs, row.rhs);
  return row;
}

long long as_ll(std::size_t x) { return static_cast<long long>(x); }

Rational power_of_two(long e) {
  if (e < 0) return Rational(1, 1) / Rational(Integer(1) << static_cast<unsigned long>(-e));
  return Rational(Integer(1) << static_cast<unsigned long>(e));
}

std::string num(long long x) { return std::to_string(x); }

CheckReport make_report(std::string suite, bool proved, const BettiTable& b) {
  CheckReport r;
  r.suite = std::move(suite);
  r.proved = proved;
  r.params["m"] = static_cast<long long>(b.num_vars());
  return r;
}

void mark_unmet(CheckReport& r, std::string hypothesis) {
  r.applicable = false;
  r.params["hypothesis_unmet"] = std::move(hypothesis);
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "na";
  }
  return "na";
}

CheckStatus CheckReport::overall() const {
  if (!applicable) return CheckStatus::NotApplicable;
  bool any_pass = false;
  bool any_na = false;
  for (const auto& row : rows) {
    if (row.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (row.status == CheckStatus::Pass) any_pass = true;
    if (row.status == CheckStatus::NotApplicable) any_na = true;
  }
  return (any_pass && !any_na) ? CheckStatus::Pass : CheckStatus::NotApplicable;
}

CheckReport check_horrocks(const BettiTable& b, const ModuleFacts& facts) {
  CheckReport r = make_report("horrocks", false, b);
  const int m = b.num_vars();
  const auto totals = total_betti(b);
  for (int i = 0; i <= m; ++i) {
    r.rows.push_back(ge_row("beta_" + num(i) + ">=C(" + num(m) + "," + num(i) + ")",
                            as_ll(totals[static_cast<std::size_t>(i)]), Rational(binomial(m, i))));
  }
  if (b.is_zero()) {
    mark_unmet(r, "M != 0");
  } else if (!facts.finite_dimensional) {
    mark_unmet(r, "dim M < inf");
    const int pd = projective_dimension(b);
    r.params["pd"] = static_cast<long long>(pd);
    for (int i = 0; i <= pd; ++i) {
      r.rows.push_back(ge_row("analogue:beta_" + num(i) + ">=C(pd," + num(i) + ")",
                              as_ll(totals[static_cast<std::size_t>(i)]),
                              Rational(binomial(pd, i))));
    }
  }
  return r;
}

CheckReport check_weak_horrocks(const BettiTable& b, const ModuleFacts& facts) {
  CheckReport r = make_report("weak", false, b);
  const int m = b.num_vars();
  const long long total = as_ll(hrk(b));
  r.rows.push_back(ge_row("hrk>=2^" + num(m), total, power_of_two(m)));
  const int pd = b.is_zero() ? -1 : projective_dimension(b);
  r.params["pd"] = static_cast<long long>(pd);
  if (b.is_zero()) {
    mark_unmet(r, "M != 0");
  } else if (!facts.finite_dimensional) {
    mark_unmet(r, "dim M < inf");
  } else if (pd != m) {
    mark_unmet(r, "pd = m");
  }
  if (!r.applicable && pd >= 0) r.rows.push_back(ge_row("analogue:hrk>=2^pd", total, power_of_two(pd)));
  return r;
}

CheckReport check_corner_bounds(const BettiTable& b, const ModuleFacts& facts) {
  CheckReport r = make_report("corners", true, b);
  const int m = b.num_vars();
  const auto totals = total_betti(b);
  auto beta = [&](int i) { return i < 0 || i > m ? 0LL : as_ll(totals[static_cast<std::size_t>(i)]); };
  r.rows.push_back(ge_row("tor0>=1", beta(0), Rational(1)));
  r.rows.push_back(ge_row("tor1>=m", beta(1), Rational(m)));
  r.rows.push_back(ge_row("tor(m-1)>=m", beta(m - 1), Rational(m)));
  r.rows.push_back(ge_row("tor(m)>=1", beta(m), Rational(1)));
  if (!facts.finite_dimensional) {
    mark_unmet(r, "dim M < inf");
  } else if (m < 1) {
    mark_unmet(r, "m >= 1");
  } else if (b.is_zero()) {
    mark_unmet(r, "M != 0");
  }
  return r;
}

CheckReport check_parity_bounds(const BettiTable& b, const ModuleFacts& facts) {
  CheckReport r = make_report("parity", true, b);
  const int m = b.num_vars();
  const long long total = as_ll(hrk(b));
  if (m % 2 == 1) {
    r.rows.push_back(ge_row("hrk>=3m-1", total, Rational(3 * m - 1)));
  } else if (m >= 4) {
    r.rows.push_back(ge_row("hrk>=5m-4", total, Rational(5 * m - 4)));
  } else {
    r.rows.push_back({"hrk>=5m-4", total, Rational(5 * m - 4), CheckStatus::NotApplicable});
    r.params["note"] = std::string("even m requires m >= 4");
  }
  if (!facts.finite_dimensional) {
    mark_unmet(r, "dim M < inf");
  } else if (b.is_zero()) {
    mark_unmet(r, "M != 0");
  }
  return r;
}

CheckReport check_avramov_buchweitz(const BettiTable& b, const ModuleFacts& facts) {
  CheckReport r = make_report("ab", true, b);
  const int m = b.num_vars();
  const Rational bound = Rational(3, 2) * Rational((m - 1) * (m - 1)) + 8;
  r.rows.push_back(ge_row("hrk>=(3/2)(m-1)^2+8", as_ll(hrk(b)), bound));
  Integer ceiling;
  mpz_cdiv_q(ceiling.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  r.params["rhs_ceiling"] = ceiling.get_si();
  if (!facts.finite_dimensional) {
    mark_unmet(r, "dim M < inf");
  } else if (m < 5) {
    mark_unmet(r, "m >= 5");
  } else if (b.is_zero()) {
    mark_unmet(r, "M != 0");
  }
  return r;
}

CheckReport check_evans_griffith(const BettiTable& b, const ModuleFacts& facts) {
  if (b.is_zero()) throw std::invalid_argument("Evans-Griffith check of the zero table");
  CheckReport r = make_report("eg", true, b);
  const int m = b.num_vars();
  const int pd = projective_dimension(b);
  const auto totals = total_betti(b);
  r.params["pd"] = static_cast<long long>(pd);
  for (int i = 0; i <= pd; ++i) {
    r.rows.push_back(ge_row("beta_" + num(i) + ">=C(pd," + num(i) + ")",
                            as_ll(totals[static_cast<std::size_t>(i)]), Rational(binomial(pd, i))));
  }
  if (facts.complex_size) {
    const int n = *facts.complex_size;
    const int codim = m - n;
    r.params["n"] = static_cast<long long>(n);
    r.params["m_minus_n"] = static_cast<long long>(codim);
    r.params["corollary_j_range_stated"] = "0.." + num(n);
    r.params["corollary_j_range_used"] = "0.." + num(static_cast<long long>(b.j_max()));
    r.rows.push_back(ge_row("pd>=m-n", pd, Rational(codim)));
    for (int i = 0; i <= codim; ++i) {
      r.rows.push_back(ge_row("corollary:beta_" + num(i) + ">=C(m-n," + num(i) + ")",
                              as_ll(totals[static_cast<std::size_t>(i)]),
                              Rational(binomial(codim, i))));
    }
  }
  if (!facts.monomial) mark_unmet(r, "M = S/I with I monomial");
  return r;
}

CheckReport check_toral_rank_zk(const BettiTable& b, int complex_size) {
  CheckReport r = make_report("trk", true, b);
  const int m = b.num_vars();
  r.params["n"] = static_cast<long long>(complex_size);
  r.rows.push_back(ge_row("hrk>=2^(m-n)", as_ll(hrk(b)), power_of_two(m - complex_size)));
  return r;
}

CheckReport check_duality(const GradedModule& module, const KoszulOptions& options) {
  CheckReport r;
  r.suite = "duality";
  r.proved = true;
  const int m = module.num_vars();
  r.params["m"] = static_cast<long long>(m);
  const GradedModule dual = dual_module(module);
  const auto direct = total_betti(betti_table(module, std::nullopt, options));
  const auto reflected = total_betti(betti_table(dual, std::nullopt, options));
  for (int i = 0; i <= m; ++i) {
    const long long lhs = as_ll(direct[static_cast<std::size_t>(i)]);
    const long long rhs = as_ll(reflected[static_cast<std::size_t>(m - i)]);
    r.rows.push_back({"beta_" + num(i) + "(M)=beta_" + num(m - i) + "(M*)", lhs, Rational(static_cast<long>(rhs)),
                      lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail});
  }
  return r;
}

CheckReport check_euler(const BettiTable& b, const ModuleFacts& facts) {
  CheckReport r = make_report("euler", true, b);
  const long long chi = euler_characteristic(b);
  r.rows.push_back({"chi=0", chi, Rational(0), chi == 0 ? CheckStatus::Pass : CheckStatus::Fail});
  if (!facts.finite_dimensional) {
    mark_unmet(r, "dim M < inf");
  } else if (b.num_vars() < 1) {
    mark_unmet(r, "m >= 1");
  }
  return r;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Horrocks: return "horrocks";
    case Suite::Weak: return "weak";
    case Suite::Corners: return "corners";
    case Suite::Parity: return "parity";
    case Suite::AvramovBuchweitz: return "ab";
    case Suite::EvansGriffith: return "eg";
    case Suite::ToralRank: return "trk";
    case Suite::Duality: return "duality";
    case Suite::Euler: return "euler";
  }
  return "";
}

bool is_proved(Suite s) { return s != Suite::Horrocks && s != Suite::Weak; }

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      Suite::Horrocks, Suite::Weak,      Suite::Corners,  Suite::Parity, Suite::AvramovBuchweitz,
      Suite::EvansGriffith, Suite::ToralRank, Suite::Duality, Suite::Euler};
  return suites;
}

std::vector<Suite> parse_suites(std::string_view list) {
  std::vector<Suite> out;
  auto add = [&](Suite s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view name = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (name.empty()) continue;
    if (name == "all") {
      for (Suite s : all_suites()) add(s);
      continue;
    }
    auto it = std::find_if(all_suites().begin(), all_suites().end(),
                           [&](Suite s) { return suite_name(s) == name; });
    if (it == all_suites().end()) {
      throw std::invalid_argument("unknown suite '" + std::string(name) +
                                  "' (expected horrocks, weak, corners, parity, ab, eg, trk, "
                                  "duality, euler or all)");
    }
    add(*it);
  }
  if (out.empty()) throw std::invalid_argument("no suite requested");
  return out;
}

std::vector<CheckReport> run_suites(const std::vector<Suite>& suites, const BettiTable& b,
                                    const ModuleFacts& facts, const GradedModule* module,
                                    const KoszulOptions& options) {
  std::vector<CheckReport> out;
  for (Suite s : suites) {
    switch (s) {
      case Suite::Horrocks: out.push_back(check_horrocks(b, facts)); break;
      case Suite::Weak: out.push_back(check_weak_horrocks(b, facts)); break;
      case Suite::Corners: out.push_back(check_corner_bounds(b, facts)); break;
      case Suite::Parity: out.push_back(check_parity_bounds(b, facts)); break;
      case Suite::AvramovBuchweitz: out.push_back(check_avramov_buchweitz(b, facts)); break;
      case Suite::EvansGriffith:
        if (b.is_zero()) {
          CheckReport r = make_report("eg", true, b);
          mark_unmet(r, "M != 0");
          out.push_back(std::move(r));
        } else {
          out.push_back(check_evans_griffith(b, facts));
        }
        break;
      case Suite::ToralRank:
        if (facts.complex_size) {
          out.push_back(check_toral_rank_zk(b, *facts.complex_size));
        } else {
          CheckReport r = make_report("trk", true, b);
          mark_unmet(r, "input is a simplicial complex");
          out.push_back(std::move(r));
        }
        break;
      case Suite::Duality:
        if (module != nullptr) {
          out.push_back(check_duality(*module, options));
        } else {
          CheckReport r = make_report("duality", true, b);
          mark_unmet(r, "finite-dimensional module input");
          out.push_back(std::move(r));
        }
        break;
      case Suite::Euler: out.push_back(check_euler(b, facts)); break;
    }
  }
  return out;
}

}  // namespace tork
