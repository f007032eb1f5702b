// Golden runs of the command-line tool: output fragments and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SNIDEAL_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST(CliRing, Z12) {
  const auto r = run("ring --zn 12");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "order: 12\n"));
  EXPECT_TRUE(has(r, "nilradical: {0,6}\n"));
  EXPECT_TRUE(has(r, "units: {1,5,7,11}\n"));
}

TEST(CliRing, FieldAndSpecFile) {
  EXPECT_TRUE(has(run("ring --zn 5"), "field: true\n"));
  const std::string path = "cli_prod_spec.json";
  std::ofstream(path) << R"({"product": [{"zn": 12}, {"zn": 4}]})";
  const auto r = run("ring --spec " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "order: 48\n"));
  std::remove(path.c_str());
}

TEST(CliRing, JsonSchema) {
  const auto r = run("ring --zn 12 --ideals --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "snideal.ring/1");
  EXPECT_EQ(j.at("order"), 12);
  EXPECT_EQ(j.at("ideals").size(), 6u);
  EXPECT_EQ(j.at("nilradical"), nlohmann::json::parse("[0,6]"));
}

TEST(CliRing, BadInput) {
  EXPECT_EQ(run("ring --spec-json '{\"zn\": 0}'").code, 2);
  EXPECT_EQ(run("ring --spec-json 'not json'").code, 2);
  EXPECT_EQ(run("ring").code, 2);
  EXPECT_EQ(run("ring --spec does-not-exist.json").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
}

TEST(CliClassify, FourInZ12) {
  const auto r = run("classify --zn 12 --ideal 4 --mult 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "S-n-ideal: yes (witnesses 3,9)\n"));
  EXPECT_TRUE(has(r, "n-ideal: no (counterexample (2,2))\n"));
}

TEST(CliClassify, TwoInZ12) {
  const auto r = run("classify --zn 12 --ideal 2 --mult 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "prime: yes\n"));
  EXPECT_TRUE(has(r, "S-prime: yes"));
  EXPECT_TRUE(has(r, "S-n-ideal: yes"));
  EXPECT_TRUE(has(r, "(I:3) = {0,2,4,6,8,10} = I\n"));
}

TEST(CliClassify, NotDisjoint) {
  const auto r = run("classify --zn 12 --ideal 4 --mult 2");
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(has(r, "S-relative: undefined"));
  EXPECT_EQ(run("classify --zn 12 --ideal 4 --mult 2 --format json").code, 3);
}

TEST(CliClassify, BadInput) {
  EXPECT_EQ(run("classify --zn 12 --ideal 13").code, 2);
  EXPECT_EQ(run("classify --zn 12 --ideal 1").code, 2);
  EXPECT_EQ(run("classify --zn 12 --ideal x").code, 2);
}

TEST(CliClassify, Json) {
  const auto r = run("classify --zn 6 --ideal 2 --mult 3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "snideal.classification/1");
  EXPECT_TRUE(j.at("s_n").at("holds").get<bool>());
  EXPECT_FALSE(j.at("n_ideal").at("holds").get<bool>());
}

TEST(CliTable, N12) {
  const auto r = run("table --n 12 --all-prime-cofactors --verify");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "| 12 | {2} | ALL_DISJOINT | <0>, <6>, <3> | agrees |\n"));
  EXPECT_TRUE(has(r, "| 12 | {3} | ALL_DISJOINT | <0>, <6>, <4>, <2> | agrees |\n"));
}

TEST(CliTable, N8AndN30) {
  EXPECT_TRUE(has(run("table --n 8"), "| 8 | {2} | NONE | - |\n"));
  const auto r = run("table --n 30 --format text");
  EXPECT_TRUE(has(r, "n=30 P={2}: NONE -\n"));
  EXPECT_TRUE(has(r, "n=30 P={2,3}: ALL_DISJOINT <0>, <15>, <10>, <5>\n"));
}

TEST(CliTable, RangeFormats) {
  const auto csv = run("table --min-n 2 --max-n 40 --single-primes --verify --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("n,P,regime,s_n_ideals,agrees\n", 0), 0u);
  EXPECT_EQ(csv.out.find(",no\n"), std::string::npos);
  const auto j = nlohmann::json::parse(run("table --n 36 --format json").out);
  EXPECT_EQ(j.at("schema"), "snideal.zn-table/1");
  EXPECT_EQ(j.at("rows").size(), 3u);
  EXPECT_EQ(run("table --n 1").code, 2);
  EXPECT_EQ(run("table").code, 2);
}

TEST(CliVerify, ExitCodes) {
  EXPECT_EQ(run("verify --check NO-SUCH").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  const auto ex = run("verify --examples");
  EXPECT_EQ(ex.code, 0);
  EXPECT_TRUE(has(ex, "checks: 1, instances: 3, violations: 0\n"));
  const auto zn = run("verify --check T-ZN --max-n 500");
  EXPECT_EQ(zn.code, 0);
  EXPECT_TRUE(has(zn, "violations: 0"));
}

TEST(CliVerify, JsonAndReplay) {
  const auto r = run("verify T-UN --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "snideal.verify/1");
  EXPECT_EQ(j.at("violations"), 0);

  const std::string path = "cli_replay.json";
  std::ofstream(path) << R"({"check": "T-P1", "ring": {"zn": 12}, "ideals": [[4]], "mults": [[3]]})";
  const auto rp = run("verify --replay " + path);
  EXPECT_EQ(rp.code, 0);
  EXPECT_EQ(rp.out, "pass\n");
  std::remove(path.c_str());
}

TEST(CliVerify, Deterministic) {
  const std::string args = "verify T-CHAR T-SAT EXAMPLES SUBSET-CONVERSE --max-n 20";
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
