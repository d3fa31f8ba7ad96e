#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace tork::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitProvedFailure = 1,
  kExitUsage = 2,
  kExitOracleMismatch = 3,
  kExitIo = 4,
};

struct BettiArgs {
  std::filesystem::path input;
  std::string format = "json";
  bool oracle = false;
  bool poincare = false;
  unsigned jobs = 0;
};

struct CheckArgs {
  std::filesystem::path input;
  std::string suites = "all";
  std::string format = "json";
  bool oracle = false;
  bool timestamp = true;
  unsigned jobs = 0;
};

struct EnumArgs {
  int m = 0;
  bool exhaustive = false;
  bool sample = false;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string suites = "all";
  std::filesystem::path out;
  bool append = false;
  bool oracle = false;
  bool timestamp = true;
  unsigned jobs = 0;
};

struct ReportArgs {
  std::filesystem::path in;
  std::string format = "json";
};

int cmd_betti(const BettiArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_enum(const EnumArgs& args, std::ostream& out, std::ostream& err);
int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and dispatches to a command.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace tork::cli
