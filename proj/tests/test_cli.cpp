#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "degen/cli.hpp"

using namespace degen;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char ch : s)
    n += ch == '\n';
  return n;
}

Report three_cases() {
  Report r;
  r.seed = 42;
  r.timestamp = "2026-01-01T00:00:00Z";
  r.config["families"] = {"A"};
  r.cases.push_back({"dims", "A", 2, "{1}", "lambda=(1,0)", "3", "3", true, 0.125});
  r.cases.push_back({"dims", "B", 3, "{1,2}", "lambda=(0,1,0)", "21", "20", false, std::nullopt});
  r.cases.push_back({"laiso", "C", 2, "-", "quote \" and, comma", "a", "a", true, 1.5});
  return r;
}

} // namespace

TEST(Cli, WcExample) {
  auto r = run({"wc", "--family", "A", "--rank", "2", "--cuts", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("word [2,3,1]"), std::string::npos);
  EXPECT_NE(r.out.find("3 inversions"), std::string::npos);
}

TEST(Cli, InvalidRankIsUsageError) {
  auto r = run({"roots", "--family", "D", "--rank", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("rank"), std::string::npos);
}

TEST(Cli, UnknownFlagPrintsUsage) {
  auto r = run({"roots", "--family", "A", "--rank", "2", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, RootLabelsInBothSyntaxes) {
  auto r = run({"stretch", "psi", "--family", "B", "--rank", "3", "--cuts", "1", "--root", "1,2b"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,2b -> 1,3b\n");
  EXPECT_EQ(run({"stretch", "psi", "--family", "B", "--rank", "3", "--root", "1;2"}).code, 2);
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run({"polytope", "--family", "A", "--rank", "2", "--weight", "1,1"}).out, "8\n");
  EXPECT_EQ(run({"filtration", "--family", "A", "--rank", "2", "--k", "1", "--d", "1,1,1"}).out, "0  1\n1  2\n");
  EXPECT_EQ(run({"filtration", "--family", "A", "--rank", "2", "--k", "1", "--d", "1,1,3"}).code, 2);
  EXPECT_EQ(run({"cone", "member", "--family", "A", "--rank", "2", "--full", "--d", "1,1,3"}).out, "not a member\n");
  EXPECT_EQ(run({"cone", "witness", "--family", "A", "--rank", "2", "--alpha", "1,1", "--beta", "2,2"}).out,
            "(1,1,3)\nviolates 1,1 + 2,2 = 1,2\n");
  auto chr = run({"char", "--family", "A", "--rank", "3", "--weight", "1,0,0", "--word", "2,3,1", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(chr.out)["dimension"], 3);
  EXPECT_EQ(run({"char", "--family", "A", "--rank", "3", "--weight", "1,0,0", "--word", "1,1"}).code, 2);
  EXPECT_EQ(run({"stretch", "Psi", "--family", "A", "--rank", "2", "--cuts", "1", "--weight", "1,2"}).out, "(1,0,2)\n");
}

TEST(Cli, EnvironmentAndFlagPrecedence) {
  ::setenv("DEGEN_FAMILY", "A", 1);
  ::setenv("DEGEN_RANK", "3", 1);
  auto from_env = run({"roots"});
  auto flag_wins = run({"roots", "--rank", "2"});
  ::unsetenv("DEGEN_FAMILY");
  ::unsetenv("DEGEN_RANK");
  EXPECT_EQ(from_env.code, 0);
  EXPECT_EQ(count_lines(from_env.out), 6);
  EXPECT_EQ(count_lines(flag_wins.out), 3);
}

TEST(Verify, WeylGroupSuitePasses) {
  auto r = run({"verify", "--suite", "weylgroup", "--families", "A", "--max-rank", "4", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
}

TEST(Verify, DimsCaseCount) {
  VerifyConfig cfg;
  cfg.families = {Family::B};
  cfg.max_rank = 3;
  cfg.suites = {"dims"};
  auto r = verify_suite(cfg);
  int b3 = 0;
  for (const auto& c : r.cases)
    b3 += c.rank == 3;
  EXPECT_EQ(b3, 3 * 4);
  EXPECT_EQ(r.failed(), 0);
}

TEST(Verify, ConfigErrors) {
  EXPECT_EQ(run({"verify", "--families", ""}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "--families", "D", "--max-rank", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "facets", "--max-rank", "2", "--families", "A", "--output", "/nonexistent/dir/r.json"})
                .code,
            2);
}

TEST(Verify, DeterministicWithoutTimestamp) {
  std::vector<std::string> args{"verify", "--suite", "all", "--max-rank", "3", "--families", "A,C", "--no-timestamp"};
  auto a = run(args);
  args.push_back("--jobs");
  args.push_back("3");
  auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("timestamp"), std::string::npos);
  EXPECT_EQ(a.out.find("runtime_ms"), std::string::npos);
  auto report = parse_report_json(a.out);
  EXPECT_EQ(report.passed() + report.failed(), static_cast<int>(report.cases.size()));
  EXPECT_NE(run({"verify", "--suite", "facets", "--max-rank", "2", "--families", "A"}).out.find("timestamp"),
            std::string::npos);
}

TEST(Report, EmptyReportIsValidJson) {
  Report r;
  auto j = nlohmann::json::parse(emit_json(r));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["summary"]["cases"], 0);
  EXPECT_TRUE(j["cases"].empty());
  EXPECT_EQ(parse_report_json(emit_json(r)), r);
}

TEST(Report, RoundTrip) {
  Report r = three_cases();
  EXPECT_EQ(parse_report_json(emit_json(r)), r);
  EXPECT_EQ(r.failed(), 1);
}

TEST(Report, CsvHasOneRowPerCase) {
  Report r = three_cases();
  std::string csv = emit_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,family,rank,cuts,case,expected,computed,pass,runtime_ms");
  EXPECT_EQ(count_lines(csv), 4);
  EXPECT_NE(csv.find("\"{1,2}\""), std::string::npos);
  EXPECT_NE(csv.find("\"quote \"\" and, comma\""), std::string::npos);
}

TEST(Report, RejectsOtherSchemas) {
  EXPECT_THROW(parse_report_json("{\"schema\": 2}"), DomainError);
  EXPECT_THROW(parse_report_json("not json"), DomainError);
}
