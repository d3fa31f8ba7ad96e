#pragma once

#include "tork/betti_table.hpp"
#include "tork/conjectures.hpp"
#include "tork/io.hpp"
#include "tork/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tork::cli {

// Lowercase hex SHA-256 of j.dump(); nlohmann objects keep keys sorted, so
// the dump is canonical.
std::string canonical_hash(const Json& j);

// UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

Json rational_json(const Rational& q);

// hrk, pd (-1 for the zero table), euler, poincare.
Json table_stats(const BettiTable& b);

struct OracleResult {
  bool match = true;
  BettiTable table;
};

// Entries where the two tables differ, one "i\t2j\tkoszul\thochster" line each.
std::string table_diff(const BettiTable& koszul, const BettiTable& hochster);

// One JSONL record for an enumerated or sampled complex.
struct RecordInput {
  std::string mode;                 // "exhaustive" or "sample"
  std::size_t index = 0;
  std::optional<std::uint64_t> seed;
  SimplicialComplex complex;
};

struct RecordOutput {
  Json record;
  bool proved_failure = false;
  bool oracle_mismatch = false;
};

RecordOutput build_record(const RecordInput& in, const std::vector<Suite>& suites, bool oracle,
                          bool timestamp);

// Accumulates the final summary line of an enum run and the aggregate of a
// report run from records.
class Aggregate {
 public:
  // Returns false if the record lacks a required field.
  bool add(const Json& record);
  void note_skipped() { ++skipped_; }
  std::size_t records() const { return records_; }
  std::size_t skipped() const { return skipped_; }
  std::size_t proved_failures() const { return proved_failures_; }

  // {"records", "suites": {name: {"pass","fail","na"}}, "min_hrk_ratio", ...}
  // The enum summary omits the distributions and extremal lists.
  Json enum_summary() const;
  Json report() const;
  std::string report_tsv() const;

 private:
  struct Counts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t na = 0;
  };
  struct Extremal {
    std::size_t index;
    std::string mode;
    Json complex;
    std::size_t hrk;
    int m;
    int n;
  };
  std::size_t records_ = 0;
  std::size_t skipped_ = 0;
  std::size_t proved_failures_ = 0;
  std::size_t oracle_mismatches_ = 0;
  std::map<std::string, Counts> suites_;
  std::map<std::size_t, std::size_t> hrk_;
  std::map<int, std::size_t> pd_;
  std::optional<Rational> min_ratio_;
  std::vector<Extremal> minimal_;
  std::vector<Extremal> equality_;
};

}  // namespace tork::cli
