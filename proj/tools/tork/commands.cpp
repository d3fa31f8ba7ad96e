#include "commands.hpp"

#include "run_record.hpp"

#include "tork/conjectures.hpp"
#include "tork/hochster.hpp"
#include "tork/io.hpp"
#include "tork/koszul.hpp"
#include "tork/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace tork::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedInput {
  ModuleInput value;
  Json canonical;
};

LoadedInput load_input(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot read " + path.string());
  Json j;
  try {
    j = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + " is not valid JSON: " + e.what());
  }
  LoadedInput in{input_from_json(j), {}};
  if (const auto* module = std::get_if<GradedModule>(&in.value)) {
    const auto violations = validate(*module);
    if (!violations.empty()) {
      std::string message = path.string() + " is not a valid module:";
      for (const auto& v : violations) message += "\n  " + v.message;
      throw SchemaError(message);
    }
    in.canonical = module_to_json(*module);
  } else {
    in.canonical = complex_to_json(std::get<SimplicialComplex>(in.value));
  }
  return in;
}

std::vector<Suite> suites_or_usage(const std::string& list) {
  try {
    return parse_suites(list);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Maps the exceptions shared by every command onto exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "tork: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SchemaError& e) {
    err << "tork: schema error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "tork: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "tork: invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
}

void require_format(const std::string& format) {
  if (format != "json" && format != "tsv") throw UsageError("--format must be json or tsv");
}

}  // namespace

int cmd_betti(const BettiArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_format(args.format);
    const LoadedInput in = load_input(args.input);
    const auto* complex = std::get_if<SimplicialComplex>(&in.value);
    if (args.oracle && complex == nullptr) throw UsageError("--oracle needs a simplicial complex input");
    KoszulOptions options;
    options.jobs = args.jobs;
    const BettiTable table = complex != nullptr
                                 ? stanley_reisner_betti(*complex, options)
                                 : betti_table(std::get<GradedModule>(in.value), std::nullopt, options);
    if (args.poincare) {
      out << poincare_to_tsv(poincare_vector(table));
    } else if (args.format == "tsv") {
      out << table_to_tsv(table);
    } else {
      out << table_to_json(table).dump() << '\n';
    }
    if (args.oracle) {
      HochsterOptions hochster;
      hochster.jobs = args.jobs;
      const BettiTable expected = hochster_betti(*complex, hochster);
      if (!(expected == table)) {
        err << "tork: Koszul and Hochster tables differ\n" << table_diff(table, expected);
        return static_cast<int>(kExitOracleMismatch);
      }
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_format(args.format);
    const auto suites = suites_or_usage(args.suites);
    const auto start = std::chrono::steady_clock::now();
    const LoadedInput in = load_input(args.input);
    const auto* complex = std::get_if<SimplicialComplex>(&in.value);
    if (args.oracle && complex == nullptr) throw UsageError("--oracle needs a simplicial complex input");
    KoszulOptions options;
    options.jobs = args.jobs;

    BettiTable table;
    ModuleFacts facts;
    const GradedModule* module = nullptr;
    std::string kind;
    if (complex != nullptr) {
      table = stanley_reisner_betti(*complex, options);
      facts = ModuleFacts::stanley_reisner(*complex);
      kind = "complex";
    } else {
      module = &std::get<GradedModule>(in.value);
      table = betti_table(*module, std::nullopt, options);
      facts = ModuleFacts::finite_module();
      kind = "module";
    }
    const auto reports = run_suites(suites, table, facts, module, options);
    bool mismatch = false;
    if (args.oracle) {
      HochsterOptions hochster;
      hochster.jobs = args.jobs;
      const BettiTable expected = hochster_betti(*complex, hochster);
      mismatch = !(expected == table);
      if (mismatch) err << "tork: Koszul and Hochster tables differ\n" << table_diff(table, expected);
    }

    std::size_t proved_failures = 0, conjectural_failures = 0;
    Json checks = Json::array();
    for (const auto& r : reports) {
      checks.push_back(report_to_json(r));
      if (r.overall() == CheckStatus::Fail) ++(r.proved ? proved_failures : conjectural_failures);
    }
    if (args.format == "tsv") {
      out << "suite\tproved\toverall\tfailing_rows\n";
      for (const auto& r : reports) {
        std::string failing;
        for (const auto& row : r.rows) {
          if (row.status != CheckStatus::Fail) continue;
          if (!failing.empty()) failing += ',';
          failing += row.id;
        }
        out << r.suite << '\t' << (r.proved ? "yes" : "no") << '\t' << to_string(r.overall()) << '\t'
            << (failing.empty() ? "-" : failing) << '\n';
      }
    } else {
      Json doc{{"input", Json{{"path", args.input.string()}, {"kind", kind}}},
               {"input_hash", canonical_hash(in.canonical)},
               {"table", table_to_json(table)},
               {"stats", table_stats(table)},
               {"checks", std::move(checks)},
               {"summary",
                Json{{"proved_failures", proved_failures}, {"conjectural_failures", conjectural_failures}}}};
      if (args.oracle) doc["oracle"] = Json{{"hochster", mismatch ? "mismatch" : "match"}};
      if (args.timestamp) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        doc["wall_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
        doc["timestamp"] = utc_timestamp();
      }
      out << doc.dump(2) << '\n';
    }
    if (mismatch) return static_cast<int>(kExitOracleMismatch);
    if (proved_failures > 0) {
      err << "tork: " << proved_failures << " proved suite(s) failed\n";
      return static_cast<int>(kExitProvedFailure);
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_enum(const EnumArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.exhaustive == args.sample) throw UsageError("choose exactly one of --exhaustive and --sample");
    if (args.m < 0 || args.m > kMaxVertices) {
      throw UsageError("--m must be in 0.." + std::to_string(kMaxVertices));
    }
    if (args.exhaustive && args.m > kDefaultEnumerationCap) {
      throw UsageError("exhaustive enumeration is capped at m = " + std::to_string(kDefaultEnumerationCap) +
                       "; use --sample --count N for larger m");
    }
    if (args.oracle && args.m > kDefaultHochsterCap) {
      throw UsageError("--oracle is capped at m = " + std::to_string(kDefaultHochsterCap));
    }
    const auto suites = suites_or_usage(args.suites);
    if (args.out.empty()) throw UsageError("--out is required");

    std::ofstream file(args.out, args.append ? std::ios::app : std::ios::trunc);
    if (!file) throw IoError("cannot open " + args.out.string() + " for writing");

    const auto start = std::chrono::steady_clock::now();
    std::optional<ComplexEnumerator> enumerator;
    std::optional<ComplexSampler> sampler;
    if (args.exhaustive) {
      enumerator.emplace(args.m);
    } else {
      sampler.emplace(args.m, args.seed);
    }
    const std::string mode = args.exhaustive ? "exhaustive" : "sample";
    const std::size_t chunk = 64 * static_cast<std::size_t>(resolve_jobs(args.jobs));

    Aggregate aggregate;
    std::size_t index = 0;
    bool mismatch = false;
    bool proved_failure = false;
    while (true) {
      std::vector<RecordInput> inputs;
      while (inputs.size() < chunk) {
        std::optional<SimplicialComplex> k;
        if (enumerator) {
          k = enumerator->next();
        } else if (index + inputs.size() < args.count) {
          k = sampler->next();
        }
        if (!k) break;
        RecordInput in;
        in.mode = mode;
        in.index = index + inputs.size();
        if (sampler) in.seed = args.seed;
        in.complex = std::move(*k);
        inputs.push_back(std::move(in));
      }
      if (inputs.empty()) break;
      std::vector<RecordOutput> outputs(inputs.size());
      parallel_for(inputs.size(), args.jobs, [&](std::size_t k) {
        outputs[k] = build_record(inputs[k], suites, args.oracle, args.timestamp);
      });
      // Single writer, input order.
      for (const auto& o : outputs) {
        file << o.record.dump() << '\n';
        aggregate.add(o.record);
        mismatch = mismatch || o.oracle_mismatch;
        proved_failure = proved_failure || o.proved_failure;
      }
      index += inputs.size();
    }

    Json summary = aggregate.enum_summary();
    summary["mode"] = mode;
    summary["m"] = args.m;
    if (sampler) {
      summary["seed"] = args.seed;
      summary["count"] = args.count;
    }
    if (args.timestamp) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      summary["wall_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
      summary["timestamp"] = utc_timestamp();
    }
    const Json line{{"summary", std::move(summary)}};
    file << line.dump() << '\n';
    file.flush();
    if (!file) throw IoError("write to " + args.out.string() + " failed");
    out << line.dump() << '\n';
    if (mismatch) {
      err << "tork: Koszul and Hochster tables differ on at least one record\n";
      return static_cast<int>(kExitOracleMismatch);
    }
    if (proved_failure) {
      err << "tork: " << aggregate.proved_failures() << " record(s) failed a proved suite\n";
      return static_cast<int>(kExitProvedFailure);
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_format(args.format);
    std::ifstream file(args.in);
    if (!file) throw IoError("cannot read " + args.in.string());
    Aggregate aggregate;
    std::string line;
    while (std::getline(file, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const Json j = Json::parse(line, nullptr, false);
      if (j.is_object() && j.contains("summary")) continue;
      if (j.is_discarded() || !aggregate.add(j)) aggregate.note_skipped();
    }
    if (aggregate.skipped() > 0) err << "tork: skipped " << aggregate.skipped() << " corrupt record(s)\n";
    if (args.format == "tsv") {
      out << aggregate.report_tsv();
    } else {
      out << aggregate.report().dump(2) << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

namespace {

unsigned jobs_from(const CLI::Option* flag, unsigned flag_value) {
  if (flag->count() > 0) return flag_value;
  const char* env = std::getenv("TORK_JOBS");
  if (env == nullptr || *env == '\0') return 0;
  unsigned value = 0;
  const std::string_view text(env);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("TORK_JOBS must be a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

struct SharedFlags {
  std::string format = "json";
  unsigned jobs = 0;
  bool no_timestamp = false;
  bool oracle = false;
  CLI::Option* jobs_option = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    jobs_option = app->add_option("--jobs", jobs, "Worker threads (0 = all cores; overrides TORK_JOBS)");
    app->add_flag("--no-timestamp", no_timestamp, "Omit wall time and timestamp fields");
    app->add_flag("--oracle", oracle, "Cross-check complex inputs against the Hochster formula");
  }
};

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koszul homology, Betti tables and inequality checks for graded S(m)-modules", "tork"};
  app.require_subcommand(1);

  SharedFlags betti_flags, check_flags, enum_flags, report_flags;
  BettiArgs betti;
  CheckArgs check;
  EnumArgs en;
  ReportArgs report;

  auto* betti_cmd = app.add_subcommand("betti", "Print the Betti table of a complex or module");
  betti_cmd->add_option("--input", betti.input, "Complex or module JSON")->required();
  betti_cmd->add_flag("--poincare", betti.poincare, "Print the Poincare vector instead of the table");
  betti_flags.attach(betti_cmd);

  auto* check_cmd = app.add_subcommand("check", "Run inequality suites on a complex or module");
  check_cmd->add_option("--input", check.input, "Complex or module JSON")->required();
  check_cmd->add_option("--suite", check.suites, "Comma-separated suites or 'all'");
  check_flags.attach(check_cmd);

  auto* enum_cmd = app.add_subcommand("enum", "Enumerate or sample complexes into a JSONL file");
  enum_cmd->add_option("--m", en.m, "Number of vertices")->required();
  enum_cmd->add_flag("--exhaustive", en.exhaustive, "Every labeled complex on [m]");
  enum_cmd->add_flag("--sample", en.sample, "Random complexes");
  enum_cmd->add_option("--count", en.count, "Number of samples");
  enum_cmd->add_option("--seed", en.seed, "Sampling seed");
  enum_cmd->add_option("--suite", en.suites, "Comma-separated suites or 'all'");
  enum_cmd->add_option("--out", en.out, "Output JSONL path")->required();
  enum_cmd->add_flag("--append", en.append, "Append instead of truncating the output");
  enum_flags.attach(enum_cmd);

  auto* report_cmd = app.add_subcommand("report", "Aggregate a JSONL file written by enum");
  report_cmd->add_option("--in", report.in, "JSONL path")->required();
  report_flags.attach(report_cmd);

  std::vector<std::string> rest(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kExitOk) : static_cast<int>(kExitUsage);
  }

  return guarded(err, [&] {
    if (betti_cmd->parsed()) {
      betti.format = betti_flags.format;
      betti.oracle = betti_flags.oracle;
      betti.jobs = jobs_from(betti_flags.jobs_option, betti_flags.jobs);
      return cmd_betti(betti, out, err);
    }
    if (check_cmd->parsed()) {
      check.format = check_flags.format;
      check.timestamp = !check_flags.no_timestamp;
      check.jobs = jobs_from(check_flags.jobs_option, check_flags.jobs);
      check.oracle = check_flags.oracle;
      return cmd_check(check, out, err);
    }
    if (enum_cmd->parsed()) {
      en.oracle = enum_flags.oracle;
      en.timestamp = !enum_flags.no_timestamp;
      en.jobs = jobs_from(enum_flags.jobs_option, enum_flags.jobs);
      return cmd_enum(en, out, err);
    }
    report.format = report_flags.format;
    return cmd_report(report, out, err);
  });
}

}  // namespace tork::cli
