#include "run_record.hpp"

#include "tork/hochster.hpp"
#include "tork/koszul.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace tork::cli {

std::string canonical_hash(const Json& j) {
  const std::string text = j.dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int k = 0; k < length; ++k) {
    char byte[3];
    std::snprintf(byte, sizeof byte, "%02x", digest[k]);
    hex += byte;
  }
  return "sha256:" + hex;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char text[32];
  std::strftime(text, sizeof text, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return text;
}

Json rational_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json table_stats(const BettiTable& b) {
  return Json{{"hrk", hrk(b)},
              {"pd", b.is_zero() ? -1 : projective_dimension(b)},
              {"euler", euler_characteristic(b)},
              {"poincare", poincare_vector(b)}};
}

std::string table_diff(const BettiTable& koszul, const BettiTable& hochster) {
  std::ostringstream out;
  out << "i\t2j\tkoszul\thochster\n";
  const std::size_t j_max = std::max(koszul.j_max(), hochster.j_max());
  const int m = std::max(koszul.num_vars(), hochster.num_vars());
  for (int i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= j_max; ++j) {
      if (koszul.at(i, j) == hochster.at(i, j)) continue;
      out << i << '\t' << 2 * j << '\t' << koszul.at(i, j) << '\t' << hochster.at(i, j) << '\n';
    }
  }
  return out.str();
}

RecordOutput build_record(const RecordInput& in, const std::vector<Suite>& suites, bool oracle,
                          bool timestamp) {
  const auto start = std::chrono::steady_clock::now();
  const SimplicialComplex& k = in.complex;
  const BettiTable table = stanley_reisner_betti(k);
  const ModuleFacts facts = ModuleFacts::stanley_reisner(k);
  const auto reports = run_suites(suites, table, facts);

  RecordOutput out;
  Json input{{"mode", in.mode}, {"index", in.index}, {"m", k.num_vertices()}};
  if (in.seed) input["seed"] = *in.seed;
  const Json complex = complex_to_json(k);
  Json checks = Json::array();
  for (std::size_t s = 0; s < reports.size(); ++s) {
    checks.push_back(report_to_json(reports[s]));
    if (reports[s].proved && reports[s].overall() == CheckStatus::Fail) out.proved_failure = true;
  }
  Json& r = out.record;
  r["input"] = std::move(input);
  r["input_hash"] = canonical_hash(complex);
  r["complex"] = complex;
  r["n"] = k.dimension() + 1;
  r["table"] = table_to_json(table);
  r["stats"] = table_stats(table);
  r["checks"] = std::move(checks);
  if (oracle) {
    const BettiTable expected = hochster_betti(k);
    out.oracle_mismatch = !(expected == table);
    r["oracle"] = Json{{"hochster", out.oracle_mismatch ? "mismatch" : "match"}};
  }
  if (timestamp) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    r["wall_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    r["timestamp"] = utc_timestamp();
  }
  return out;
}

bool Aggregate::add(const Json& record) {
  Extremal e;
  std::size_t total = 0;
  int pd = 0;
  std::vector<std::pair<std::string, std::string>> outcomes;
  bool proved_failure = false;
  bool mismatch = false;
  try {
    const Json& input = record.at("input");
    e.index = input.at("index").get<std::size_t>();
    e.mode = input.at("mode").get<std::string>();
    e.complex = record.at("complex");
    e.m = e.complex.at("m").get<int>();
    e.n = record.at("n").get<int>();
    total = record.at("stats").at("hrk").get<std::size_t>();
    pd = record.at("stats").at("pd").get<int>();
    e.hrk = total;
    for (const auto& c : record.at("checks")) {
      const std::string suite = c.at("suite").get<std::string>();
      const std::string overall = c.at("overall").get<std::string>();
      if (overall != "pass" && overall != "fail" && overall != "na") return false;
      if (overall == "fail" && c.at("proved").get<bool>()) proved_failure = true;
      outcomes.emplace_back(suite, overall);
    }
    if (auto it = record.find("oracle"); it != record.end()) {
      mismatch = it->at("hochster").get<std::string>() != "match";
    }
  } catch (const Json::exception&) {
    return false;
  }
  if (e.n > e.m || e.m < 0) return false;

  ++records_;
  if (proved_failure) ++proved_failures_;
  if (mismatch) ++oracle_mismatches_;
  for (const auto& [suite, overall] : outcomes) {
    Counts& c = suites_[suite];
    if (overall == "pass") ++c.pass;
    if (overall == "fail") ++c.fail;
    if (overall == "na") ++c.na;
  }
  ++hrk_[total];
  ++pd_[pd];
  // hrk / 2^{m-n}
  Rational ratio(Integer(static_cast<unsigned long>(total)),
                 Integer(1) << static_cast<unsigned long>(e.m - e.n));
  ratio.canonicalize();
  if (ratio == 1) equality_.push_back(e);
  if (!min_ratio_ || ratio < *min_ratio_) {
    min_ratio_ = ratio;
    minimal_.clear();
  }
  if (ratio == *min_ratio_) minimal_.push_back(std::move(e));
  return true;
}

namespace {

Json extremal_json(const auto& list) {
  Json out = Json::array();
  for (const auto& e : list) {
    out.push_back(Json{{"mode", e.mode}, {"index", e.index}, {"m", e.m}, {"n", e.n},
                       {"hrk", e.hrk}, {"complex", e.complex}});
  }
  return out;
}

}  // namespace

Json Aggregate::enum_summary() const {
  Json suites = Json::object();
  for (const auto& [name, c] : suites_) {
    suites[name] = Json{{"pass", c.pass}, {"fail", c.fail}, {"na", c.na}};
  }
  Json s{{"records", records_},
         {"proved_failures", proved_failures_},
         {"oracle_mismatches", oracle_mismatches_},
         {"suites", std::move(suites)},
         {"min_hrk_ratio", min_ratio_ ? rational_json(*min_ratio_) : Json(nullptr)},
         {"hrk_equality_cases", equality_.size()}};
  return s;
}

Json Aggregate::report() const {
  Json s = enum_summary();
  s["skipped"] = skipped_;
  Json hrk = Json::array();
  for (const auto& [value, count] : hrk_) hrk.push_back(Json::array({value, count}));
  Json pd = Json::array();
  for (const auto& [value, count] : pd_) pd.push_back(Json::array({value, count}));
  s["hrk_distribution"] = std::move(hrk);
  s["pd_distribution"] = std::move(pd);
  s["min_hrk_ratio_records"] = extremal_json(minimal_);
  s["hrk_equality_records"] = extremal_json(equality_);
  return s;
}

std::string Aggregate::report_tsv() const {
  std::ostringstream out;
  out << "section\tkey\tvalue\n";
  out << "summary\trecords\t" << records_ << '\n';
  out << "summary\tskipped\t" << skipped_ << '\n';
  out << "summary\tproved_failures\t" << proved_failures_ << '\n';
  out << "summary\toracle_mismatches\t" << oracle_mismatches_ << '\n';
  out << "summary\tmin_hrk_ratio\t" << (min_ratio_ ? to_string(*min_ratio_) : "-") << '\n';
  for (const auto& [value, count] : hrk_) out << "hrk\t" << value << '\t' << count << '\n';
  for (const auto& [value, count] : pd_) out << "pd\t" << value << '\t' << count << '\n';
  for (const auto& [name, c] : suites_) {
    out << "suite\t" << name << ":pass\t" << c.pass << '\n';
    out << "suite\t" << name << ":fail\t" << c.fail << '\n';
    out << "suite\t" << name << ":na\t" << c.na << '\n';
  }
  for (const auto& e : minimal_) {
    out << "min_ratio_record\t" << e.mode << ':' << e.index << '\t' << e.complex.dump() << '\n';
  }
  for (const auto& e : equality_) {
    out << "hrk_equality\t" << e.mode << ':' << e.index << '\t' << e.complex.dump() << '\n';
  }
  return out.str();
}

}  // namespace tork::cli
