#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "golden_cases.hpp"

using namespace hookschur;

namespace {

struct Result {
  int exit_code;
  std::string out;
  std::string err;
};

Result run_in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Result run_binary(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(HOOKSCHUR_CLI_PATH);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST(Golden, InProcess) {
  for (const auto& c : golden::load(HOOKSCHUR_GOLDEN_DIR)) {
    const Result r = run_in_process(c.args);
    EXPECT_EQ(r.exit_code, c.exit_code) << c.name << ": " << r.err;
    EXPECT_EQ(r.out, c.expected_stdout) << c.name;
    if (c.exit_code == cli::kExitUsage) {
      EXPECT_FALSE(r.err.empty()) << c.name;
    }
  }
}

TEST(Golden, Executable) {
  for (const auto& c : golden::load(HOOKSCHUR_GOLDEN_DIR)) {
    const Result r = run_binary(c.args);
    EXPECT_EQ(r.exit_code, c.exit_code) << c.name;
    EXPECT_EQ(r.out, c.expected_stdout) << c.name;
  }
}

TEST(ExitCodes, FailingReportGivesOne) {
  Report ok;
  ok.identity = "ok";
  Report bad;
  bad.identity = "bad";
  bad.pass = false;
  bad.first_mismatch = Mismatch{0, BigInt(1), BigInt(2)};
  std::ostringstream out;
  EXPECT_EQ(cli::detail::emit_reports({ok}, cli::OutputFormat::plain, out), cli::kExitOk);
  EXPECT_EQ(cli::detail::emit_reports({ok, bad}, cli::OutputFormat::json, out), cli::kExitCheckFailed);
  EXPECT_EQ(cli::detail::emit_reports({}, cli::OutputFormat::csv, out), cli::kExitOk);
}

TEST(ExitCodes, MalformedInputsGiveTwo) {
  const std::vector<std::string> commands{"hilbert", "count", "hookschur", "verify"};
  const std::vector<std::string> junk{"-k", "-l", "-n", "-N", "-p", "--max-k", "--max-l", "--format", "--list",
                                      "-1", "x", "1.5", "", "--bogus", "json", "2,3", "-q", "99999999999999999999"};
  std::mt19937 rng(7);
  int usage_errors = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::string> args{commands[rng() % commands.size()]};
    const std::size_t len = 1 + rng() % 5;
    for (std::size_t i = 0; i < len; ++i) args.push_back(junk[rng() % junk.size()]);
    const Result r = run_in_process(args);
    // Random junk may occasionally form a valid call; it must never be a check failure.
    ASSERT_NE(r.exit_code, cli::kExitCheckFailed);
    if (r.exit_code == cli::kExitUsage) {
      ++usage_errors;
      EXPECT_TRUE(r.out.empty());
      EXPECT_FALSE(r.err.empty());
    }
  }
  EXPECT_GT(usage_errors, 300);
}

TEST(ExitCodes, SpecificUsageErrors) {
  EXPECT_EQ(run_in_process({"verify", "tbinomial", "--max-k", "0"}).exit_code, cli::kExitUsage);
  EXPECT_EQ(run_in_process({"verify", "intermediate", "--max-l", "1"}).exit_code, cli::kExitUsage);
  EXPECT_EQ(run_in_process({"hookschur", "-p", "a,b", "-k", "1", "-l", "1"}).exit_code, cli::kExitUsage);
  EXPECT_EQ(run_in_process({"count", "-n", "3", "-k", "1"}).exit_code, cli::kExitUsage);
  EXPECT_EQ(run_in_process({"hilbert", "-k", "1", "-l", "1", "--format", "yaml"}).exit_code, cli::kExitUsage);
  EXPECT_EQ(run_in_process({"frobnicate"}).exit_code, cli::kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run_in_process({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("hilbert"), std::string::npos);
  EXPECT_NE(run_in_process({"verify", "--help"}).out.find("--max-k"), std::string::npos);
}

TEST(Cli, DefaultOrderIsFifty) {
  const Result r = run_in_process({"hilbert", "-k", "1", "-l", "1", "--format", "json"});
  EXPECT_EQ(series_from_json(Json::parse(r.out)).order(), kDefaultOrder);
  EXPECT_EQ(kDefaultOrder, 50u);
}

TEST(Cli, JsonOutputsAreByteStable) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"hilbert", "-k", "2", "-l", "3", "-N", "30", "--format", "json"},
        std::vector<std::string>{"hookschur", "-p", "3,1", "-k", "2", "-l", "1", "--format", "json"},
        std::vector<std::string>{"count", "-n", "5", "-k", "1", "-l", "1", "--list", "--format", "json"}}) {
    const Result r = run_in_process(args);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(Json::parse(r.out).dump() + "\n", r.out);
  }
  std::istringstream lines(run_in_process({"verify", "all", "--max-k", "2", "--max-l", "2", "-N", "10", "--format", "json"}).out);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    const Json j = Json::parse(line);
    EXPECT_EQ(j.dump(), line);
    EXPECT_TRUE(j["pass"].get<bool>()) << line;
  }
  EXPECT_GT(count, 0);
}

TEST(Cli, FormatsAgreeOnHilbertCoefficients) {
  const std::vector<std::string> base{"hilbert", "-k", "2", "-l", "1", "-N", "12"};
  auto with = [&](const char* fmt) {
    auto a = base;
    a.insert(a.end(), {"--format", fmt});
    return run_in_process(a).out;
  };
  const TruncSeries expected = hilbert_series(2, 1, 12);
  EXPECT_EQ(with("plain"), to_string(expected) + "\n");
  EXPECT_EQ(series_from_json(Json::parse(with("json"))), expected);
  EXPECT_EQ(with("csv"), to_csv(expected));
}

TEST(Cli, CountListFormats) {
  EXPECT_EQ(run_in_process({"count", "-n", "2", "-k", "1", "-l", "1", "--list", "--format", "json"}).out,
            "{\"n\":2,\"k\":1,\"l\":1,\"count\":2,\"partitions\":[[2],[1,1]]}\n");
  EXPECT_EQ(run_in_process({"count", "-n", "2", "-k", "1", "-l", "1", "--list", "--format", "csv"}).out,
            "2,1,1,2\n2\n1,1\n");
}

TEST(Cli, VerifyAllPasses) {
  const Result r = run_in_process({"verify", "all", "--max-k", "3", "--max-l", "3", "-N", "20"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("tbinomial-pascal"), std::string::npos);
  EXPECT_NE(r.out.find("intermediate"), std::string::npos);
}
