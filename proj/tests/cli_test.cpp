#include "commands.hpp"
#include "run_record.hpp"

#include "tork/io.hpp"
#include "tork/koszul.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace tork::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tork_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int tork(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    args.insert(args.begin(), "tork");
    return run(args, out_, err_);
  }

  fs::path square() { return write("square.json", R"({"m":4,"facets":[[1,2],[2,3],[3,4],[1,4]]})"); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, BettiTsvForSquare) {
  EXPECT_EQ(tork({"betti", "--input", square().string(), "--format", "tsv"}), kExitOk);
  EXPECT_EQ(out_.str(), "i\t2j\tbeta\n0\t0\t1\n1\t4\t2\n2\t8\t1\n");
}

TEST_F(CliTest, BettiJsonRoundTrips) {
  const fs::path p = square();
  EXPECT_EQ(tork({"betti", "--input", p.string()}), kExitOk);
  const BettiTable parsed = table_from_json(Json::parse(out_.str()));
  EXPECT_EQ(parsed, stanley_reisner_betti(SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})));
}

TEST_F(CliTest, BettiPoincare) {
  EXPECT_EQ(tork({"betti", "--input", square().string(), "--poincare"}), kExitOk);
  EXPECT_EQ(out_.str(), "k\tdim\n0\t1\n1\t0\n2\t0\n3\t2\n4\t0\n5\t0\n6\t1\n7\t0\n8\t0\n");
}

TEST_F(CliTest, BettiOracleAgrees) {
  EXPECT_EQ(tork({"betti", "--input", square().string(), "--oracle"}), kExitOk);
  EXPECT_TRUE(err_.str().empty());
}

TEST_F(CliTest, BettiOnModule) {
  const fs::path p = write("q.json", R"({"m":3,"levels":[1]})");
  EXPECT_EQ(tork({"betti", "--input", p.string(), "--format", "tsv"}), kExitOk);
  EXPECT_EQ(out_.str(), "i\t2j\tbeta\n0\t0\t1\n1\t2\t3\n2\t4\t3\n3\t6\t1\n");
  EXPECT_EQ(tork({"betti", "--input", p.string(), "--oracle"}), kExitUsage);
}

TEST_F(CliTest, SchemaErrors) {
  EXPECT_EQ(tork({"betti", "--input", write("broken.json", R"({"m":2,"facets":[[3]]})").string()}), kExitUsage);
  EXPECT_NE(err_.str().find("schema error"), std::string::npos);
  EXPECT_EQ(tork({"betti", "--input", write("junk.json", "{not json").string()}), kExitUsage);
  // Non-commuting operators are rejected on load.
  const std::string bad = R"({"m":2,"levels":[1,2,1],"mult":[
    {"var":1,"level":0,"entries":[[0,0,"1"]]},
    {"var":2,"level":0,"entries":[[1,0,"1"]]},
    {"var":2,"level":1,"entries":[[0,0,"1"]]}]})";
  EXPECT_EQ(tork({"betti", "--input", write("bad.json", bad).string()}), kExitUsage);
  EXPECT_EQ(tork({"betti", "--input", (dir_ / "missing.json").string()}), kExitIo);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(tork({}), kExitUsage);
  EXPECT_EQ(tork({"frobnicate"}), kExitUsage);
  EXPECT_EQ(tork({"betti"}), kExitUsage);
  EXPECT_EQ(tork({"betti", "--input", square().string(), "--format", "xml"}), kExitUsage);
  EXPECT_EQ(tork({"check", "--input", square().string(), "--suite", "nope"}), kExitUsage);
  EXPECT_EQ(tork({"--help"}), kExitOk);
}

TEST_F(CliTest, CheckSquareSuites) {
  EXPECT_EQ(tork({"check", "--input", square().string(), "--suite", "eg,trk,euler", "--no-timestamp"}), kExitOk);
  const Json doc = Json::parse(out_.str());
  ASSERT_EQ(doc.at("checks").size(), 3u);
  EXPECT_EQ(doc.at("checks")[0].at("overall"), "pass");
  EXPECT_EQ(doc.at("checks")[1].at("overall"), "pass");
  // χ = 0 holds, but Q[K] is infinite-dimensional, so the suite reports na.
  EXPECT_EQ(doc.at("checks")[2].at("rows")[0].at("status"), "pass");
  EXPECT_EQ(doc.at("checks")[2].at("overall"), "na");
  EXPECT_FALSE(doc.contains("timestamp"));
  EXPECT_EQ(doc.at("input_hash").get<std::string>().rfind("sha256:", 0), 0u);
}

TEST_F(CliTest, CheckApplicability) {
  EXPECT_EQ(tork({"check", "--input", square().string(), "--suite", "ab", "--no-timestamp"}), kExitOk);
  EXPECT_EQ(Json::parse(out_.str()).at("checks")[0].at("overall"), "na");
  const fs::path q = write("point.json", R"({"m":3,"levels":[1]})");
  EXPECT_EQ(tork({"check", "--input", q.string(), "--suite", "corners", "--no-timestamp"}), kExitOk);
  EXPECT_EQ(Json::parse(out_.str()).at("checks")[0].at("overall"), "pass");
}

TEST_F(CliTest, CheckConjecturalFailureExitsZero) {
  // Horrocks rows fail on the square; the suite is conjectural and not applicable.
  EXPECT_EQ(tork({"check", "--input", square().string(), "--suite", "horrocks", "--format", "tsv"}), kExitOk);
  EXPECT_NE(out_.str().find("horrocks\tno\tna\tbeta_1>=C(4,1)"), std::string::npos);
}

TEST_F(CliTest, CheckDeterministicWithoutTimestamp) {
  const fs::path p = square();
  tork({"check", "--input", p.string(), "--no-timestamp"});
  const std::string first = out_.str();
  tork({"check", "--input", p.string(), "--no-timestamp", "--jobs", "3"});
  EXPECT_EQ(out_.str(), first);
  tork({"check", "--input", p.string()});
  EXPECT_TRUE(Json::parse(out_.str()).contains("timestamp"));
}

TEST_F(CliTest, CheckModuleWithAllSuites) {
  const fs::path p = write("mq.json", module_to_json(monomial_quotient(2, {{2, 0}, {1, 1}, {0, 2}}, 3)).dump());
  EXPECT_EQ(tork({"check", "--input", p.string(), "--suite", "all", "--no-timestamp"}), kExitOk);
  const Json doc = Json::parse(out_.str());
  EXPECT_EQ(doc.at("summary").at("proved_failures"), 0);
}

TEST_F(CliTest, EnumExhaustiveThree) {
  const fs::path out = dir_ / "m3.jsonl";
  EXPECT_EQ(tork({"enum", "--m", "3", "--exhaustive", "--out", out.string(), "--no-timestamp"}), kExitOk);
  std::ifstream in(out);
  std::string line;
  std::size_t records = 0;
  Json summary;
  while (std::getline(in, line)) {
    const Json j = Json::parse(line);
    if (j.contains("summary")) {
      summary = j.at("summary");
    } else {
      ++records;
      EXPECT_FALSE(j.contains("timestamp"));
      EXPECT_FALSE(j.contains("wall_ms"));
    }
  }
  EXPECT_EQ(records, 19u);
  EXPECT_EQ(summary.at("records"), 19);
  EXPECT_EQ(summary.at("proved_failures"), 0);
}

TEST_F(CliTest, EnumSampleIsByteIdentical) {
  const fs::path a = dir_ / "a.jsonl", b = dir_ / "b.jsonl";
  EXPECT_EQ(tork({"enum", "--m", "5", "--sample", "--count", "60", "--seed", "1", "--out", a.string(),
                  "--no-timestamp", "--jobs", "1"}),
            kExitOk);
  EXPECT_EQ(tork({"enum", "--m", "5", "--sample", "--count", "60", "--seed", "1", "--out", b.string(),
                  "--no-timestamp", "--jobs", "4"}),
            kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST_F(CliTest, EnumEnvironmentJobs) {
  const fs::path a = dir_ / "a.jsonl";
  setenv("TORK_JOBS", "2", 1);
  EXPECT_EQ(tork({"enum", "--m", "2", "--exhaustive", "--out", a.string(), "--no-timestamp"}), kExitOk);
  setenv("TORK_JOBS", "two", 1);
  EXPECT_EQ(tork({"enum", "--m", "2", "--exhaustive", "--out", a.string(), "--no-timestamp"}), kExitUsage);
  // The flag wins over a malformed environment value.
  EXPECT_EQ(tork({"enum", "--m", "2", "--exhaustive", "--out", a.string(), "--no-timestamp", "--jobs", "1"}),
            kExitOk);
  unsetenv("TORK_JOBS");
}

TEST_F(CliTest, EnumAppendAndTruncate) {
  const fs::path a = dir_ / "a.jsonl";
  tork({"enum", "--m", "1", "--exhaustive", "--out", a.string(), "--no-timestamp"});
  const std::string once = slurp(a);
  tork({"enum", "--m", "1", "--exhaustive", "--out", a.string(), "--no-timestamp", "--append"});
  EXPECT_EQ(slurp(a), once + once);
  tork({"enum", "--m", "1", "--exhaustive", "--out", a.string(), "--no-timestamp"});
  EXPECT_EQ(slurp(a), once);
}

TEST_F(CliTest, EnumErrors) {
  EXPECT_EQ(tork({"enum", "--m", "6", "--exhaustive", "--out", (dir_ / "x").string()}), kExitUsage);
  EXPECT_NE(err_.str().find("--sample"), std::string::npos);
  EXPECT_EQ(tork({"enum", "--m", "3", "--out", (dir_ / "x").string()}), kExitUsage);
  EXPECT_EQ(tork({"enum", "--m", "3", "--exhaustive", "--sample", "--out", (dir_ / "x").string()}), kExitUsage);
  // Unwritable output aborts before any record is computed.
  EXPECT_EQ(tork({"enum", "--m", "3", "--exhaustive", "--out", (dir_ / "no" / "such" / "dir.jsonl").string()}),
            kExitIo);
  EXPECT_TRUE(out_.str().empty());
}

TEST_F(CliTest, EnumWithOracle) {
  const fs::path a = dir_ / "a.jsonl";
  EXPECT_EQ(tork({"enum", "--m", "4", "--exhaustive", "--oracle", "--out", a.string(), "--no-timestamp"}), kExitOk);
  const Json summary = Json::parse(out_.str()).at("summary");
  EXPECT_EQ(summary.at("oracle_mismatches"), 0);
  EXPECT_EQ(summary.at("min_hrk_ratio"), 1);
}

TEST_F(CliTest, ReportListsSquareAsEqualityCase) {
  const fs::path a = dir_ / "m4.jsonl";
  ASSERT_EQ(tork({"enum", "--m", "4", "--exhaustive", "--out", a.string(), "--no-timestamp"}), kExitOk);
  EXPECT_EQ(tork({"report", "--in", a.string()}), kExitOk);
  const Json report = Json::parse(out_.str());
  EXPECT_EQ(report.at("records"), 167);
  EXPECT_EQ(report.at("skipped"), 0);
  EXPECT_EQ(report.at("min_hrk_ratio"), 1);
  const Json square_facets = Json::parse(R"([[1,2],[2,3],[1,4],[3,4]])");
  bool found = false;
  for (const auto& e : report.at("hrk_equality_records")) {
    if (e.at("complex").at("facets") == square_facets) found = true;
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(report.at("suites").at("trk").at("pass"), 167);
}

TEST_F(CliTest, ReportEmptyFile) {
  const fs::path p = write("empty.jsonl", "");
  EXPECT_EQ(tork({"report", "--in", p.string()}), kExitOk);
  const Json report = Json::parse(out_.str());
  EXPECT_EQ(report.at("records"), 0);
  EXPECT_EQ(report.at("skipped"), 0);
  EXPECT_TRUE(report.at("min_hrk_ratio").is_null());
}

TEST_F(CliTest, ReportSkipsCorruptLine) {
  const fs::path a = dir_ / "m2.jsonl";
  ASSERT_EQ(tork({"enum", "--m", "2", "--exhaustive", "--out", a.string(), "--no-timestamp"}), kExitOk);
  std::ofstream(a, std::ios::app) << "{\"input\": truncated\n" << R"({"input":{"index":1}})" << "\n";
  EXPECT_EQ(tork({"report", "--in", a.string(), "--format", "tsv"}), kExitOk);
  EXPECT_NE(out_.str().find("summary\trecords\t5\n"), std::string::npos);
  EXPECT_NE(out_.str().find("summary\tskipped\t2\n"), std::string::npos);
  EXPECT_NE(err_.str().find("skipped 2"), std::string::npos);
}

TEST_F(CliTest, HashIsCanonical) {
  const Json a = Json::parse(R"({"m":2,"facets":[[1],[2]]})");
  const Json b = Json::parse(R"({"facets":[[1],[2]],"m":2})");
  EXPECT_EQ(canonical_hash(a), canonical_hash(b));
  EXPECT_NE(canonical_hash(a), canonical_hash(Json::parse(R"({"m":2,"facets":[[1,2]]})")));
  // SHA-256 of the empty JSON object "{}".
  EXPECT_EQ(canonical_hash(Json::object()),
            "sha256:44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a");
}

TEST(CliBinary, ExitCodesThroughMain) {
  const std::string binary = TORK_BINARY;
  EXPECT_EQ(std::system((binary + " --help > /dev/null").c_str()), 0);
  const int status = std::system((binary + " betti --input /nonexistent/file.json 2> /dev/null").c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kExitIo);
}

}  // namespace
}  // namespace tork::cli
