#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spackd_cli/cli.hpp"

namespace spackd::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("spackd_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

TEST(CliChi, Examples) {
  const Result a = run_cli({"chi", "--k", "3", "--t", "4", "--seq", "1,1,2^inf"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, "4\n");
  EXPECT_TRUE(a.err.empty());

  const Result b = run_cli({"chi", "--k", "6", "--t", "10", "--seq", "2^inf"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_EQ(b.out, "6\n");
  EXPECT_NE(b.err.find("G(3,5)"), std::string::npos);

  const Result c = run_cli({"chi", "--k", "3", "--t", "4", "--seq", "1,3^inf"});
  EXPECT_EQ(c.code, kExitUsage);
  EXPECT_NE(c.err.find("unsupported-sequence"), std::string::npos);
}

TEST(CliChi, JsonFormat) {
  const Result r = run_cli({"chi", "--k", "3", "--t", "4", "--seq", "2^inf", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_NE(r.out.find("\"chi\":5"), std::string::npos);
}

TEST(CliColor, MatricesMatchFixtures) {
  const std::string dir = SPACKD_FIXTURE_DIR;
  struct Case {
    std::vector<std::string> args;
    std::string fixture;
  };
  const std::vector<Case> cases = {
      {{"color", "--k", "3", "--t", "4", "--seq", "1,1,2^inf", "--rows", "8", "--format", "matrix"}, "s31_k3_t4"},
      {{"color", "--k", "5", "--t", "9", "--seq", "1,2^inf", "--rows", "8", "--format", "matrix"}, "s32_k5_t9"},
      {{"color", "--k", "3", "--t", "5", "--seq", "2^inf", "--rows", "12", "--format", "matrix"}, "s33_k3_t5"},
  };
  for (const Case& c : cases) {
    const Result r = run_cli(c.args);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, read_file(dir + "/" + c.fixture + ".txt")) << c.fixture;
  }
}

TEST(CliColor, CsvAndErrors) {
  const Result csv = run_cli({"color", "--k", "3", "--t", "5", "--seq", "1^inf", "--range", "0", "3",
                              "--format", "csv"});
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out, "0,1\n1,2\n2,1\n3,2\n");

  const Result lifted = run_cli({"color", "--k", "6", "--t", "10", "--seq", "1^inf", "--range", "0",
                                 "3", "--format", "csv"});
  EXPECT_EQ(lifted.code, kExitOk);
  EXPECT_EQ(lifted.out, "0,1\n1,1\n2,2\n3,2\n");

  const Result no_range = run_cli({"color", "--k", "3", "--t", "5", "--seq", "1^inf", "--format", "csv"});
  EXPECT_EQ(no_range.code, kExitUsage);

  const Result out_of_scope = run_cli({"color", "--k", "2", "--t", "3", "--seq", "2^inf"});
  EXPECT_EQ(out_of_scope.code, kExitUsage);
  EXPECT_NE(out_of_scope.err.find("constructive-out-of-scope"), std::string::npos);
}

TEST(CliVerify, CertificateRoundTrip) {
  TempDir tmp;
  const Result cert = run_cli({"color", "--k", "3", "--t", "4", "--seq", "1,1,2^inf", "--format", "json"});
  ASSERT_EQ(cert.code, kExitOk);
  const std::string good = tmp.write("good.json", cert.out);
  const Result ok = run_cli({"verify", "--cert", good});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out, "{\"verdict\":\"valid\"}\n");

  std::string corrupted = cert.out;
  const auto pos = corrupted.find("0,\n    2,");
  ASSERT_NE(pos, std::string::npos) << corrupted;
  corrupted.replace(pos, 9, "0,\n    1,");
  const Result bad = run_cli({"verify", "--cert", tmp.write("bad.json", corrupted)});
  EXPECT_EQ(bad.code, kExitNegative);
  EXPECT_NE(bad.out.find("\"kind\":\"pair-too-close\""), std::string::npos);

  const Result malformed = run_cli({"verify", "--cert", tmp.write("m.json", "{\"k\": 3,")});
  EXPECT_EQ(malformed.code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--cert", (tmp.path() / "missing.json").string()}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify"}).code, kExitUsage);
}

TEST(CliVerify, ExplicitColoring) {
  TempDir tmp;
  const Result csv = run_cli({"color", "--k", "3", "--t", "4", "--seq", "1,1,2^inf", "--range", "-50",
                              "50", "--format", "csv"});
  const std::string good = tmp.write("good.csv", csv.out);
  EXPECT_EQ(run_cli({"verify", "--explicit", good, "--k", "3", "--t", "4", "--seq", "1,1,2^inf"}).code,
            kExitOk);
  const std::string bad = tmp.write("bad.csv", "0,1\n3,1\n");
  const Result r = run_cli({"verify", "--explicit", bad, "--k", "3", "--t", "4", "--seq", "1,1,2^inf"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_EQ(r.out,
            "{\"verdict\":\"invalid\",\"kind\":\"pair-too-close\",\"a\":0,\"b\":3,\"color\":1,"
            "\"required\":2,\"actual\":1}\n");
  EXPECT_EQ(run_cli({"verify", "--explicit", good}).code, kExitUsage);
}

TEST(CliSearch, Examples) {
  const Result unsat = run_cli({"search", "--k", "3", "--t", "4", "--seq", "1,1,2^inf", "--colors", "3",
                                "--window", "40"});
  EXPECT_EQ(unsat.code, kExitNegative);
  EXPECT_EQ(unsat.out.rfind("{\"status\":\"unsat\",\"window\":40,", 0), 0u);

  const Result sat = run_cli({"search", "--k", "3", "--t", "4", "--seq", "1,1,2^inf", "--colors", "4",
                              "--window", "40"});
  EXPECT_EQ(sat.code, kExitOk);
  EXPECT_NE(sat.out.find("\"witness\":[{\"n\":0,\"color\":1}"), std::string::npos);

  const Result timeout = run_cli({"search", "--k", "3", "--t", "5", "--seq", "2^inf", "--colors", "5",
                                  "--window", "200", "--budget", "10"});
  EXPECT_EQ(timeout.code, kExitInconclusive);
  EXPECT_EQ(timeout.out, "{\"status\":\"timeout\",\"window\":200,\"nodes\":11}\n");
}

TEST(CliSearch, BudgetFromEnvironment) {
  ::setenv("SPACKD_BUDGET", "10", 1);
  const Result r = run_cli({"search", "--k", "3", "--t", "5", "--seq", "2^inf", "--colors", "5",
                            "--window", "200"});
  ::setenv("SPACKD_BUDGET", "zero", 1);
  const Result bad = run_cli({"search", "--k", "3", "--t", "5", "--seq", "2^inf", "--colors", "5",
                              "--window", "200"});
  ::unsetenv("SPACKD_BUDGET");
  EXPECT_EQ(r.code, kExitInconclusive);
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST(CliEnumerate, FiveByFive) {
  const Result r = run_cli({"enumerate", "--colors", "5", "--width", "5", "--height", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"count\":240"), std::string::npos);
  EXPECT_NE(r.out.find("\"diagonal_shift_2\":120,\"diagonal_shift_3\":120"), std::string::npos);
  EXPECT_NE(r.out.find("\"colorings\":[[[1,"), std::string::npos);

  const Result none = run_cli({"enumerate", "--colors", "4", "--width", "5", "--height", "5", "--count-only"});
  EXPECT_EQ(none.out, "{\"width\":5,\"height\":5,\"colors\":4,\"count\":0,\"diagonal_shift_2\":0,"
                      "\"diagonal_shift_3\":0}\n");
  EXPECT_EQ(run_cli({"enumerate", "--colors", "5", "--width", "100", "--height", "100"}).code, kExitUsage);
}

TEST(CliSelfcheck, PassesOnEmbeddedFixtures) {
  const Result r = run_cli({"selfcheck"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("PASS s31_k3_t4\n"), std::string::npos);
  EXPECT_NE(r.out.find("PASS agreement sweep"), std::string::npos);
  EXPECT_NE(r.out.find("selfcheck passed (15 fixtures"), std::string::npos);
}

TEST(CliSelfcheck, QuickSkipsSweep) {
  const Result r = run_cli({"selfcheck", "--quick"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.find("PASS agreement sweep"), std::string::npos);
  EXPECT_NE(r.out.find("SKIP agreement sweep"), std::string::npos);
}

TEST(CliSelfcheck, TamperedFixtureFailsByName) {
  TempDir tmp;
  for (const auto& entry : std::filesystem::directory_iterator(SPACKD_FIXTURE_DIR)) {
    std::filesystem::copy_file(entry.path(), tmp.path() / entry.path().filename());
  }
  EXPECT_EQ(run_cli({"selfcheck", "--quick", "--fixture-dir", tmp.path().string()}).code, kExitOk);

  std::string text = read_file(tmp.path() / "s33_k3_t5.txt");
  text[text.find('6')] = '5';
  tmp.write("s33_k3_t5.txt", text);
  const Result r = run_cli({"selfcheck", "--quick", "--fixture-dir", tmp.path().string()});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.out.find("FAIL s33_k3_t5: render mismatch, line 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS s32_k3_t5"), std::string::npos);
}

TEST(CliUsage, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"chi", "--k", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"chi", "--k", "x", "--t", "4", "--seq", "2^inf"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"chi", "--k", "4", "--t", "3", "--seq", "2^inf"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"chi", "--k", "3", "--t", "4", "--seq", "2,1^inf"}).code, kExitUsage);
  const Result help = run_cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("selfcheck"), std::string::npos);
}

}  // namespace
}  // namespace spackd::cli
