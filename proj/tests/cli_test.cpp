#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "leibalg/cli.hpp"
#include "leibalg/report.hpp"

namespace {

using namespace leibalg;
namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LEIBALG_TEST_DATA) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "leibalg_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(Cli, CheckL1OverGF5) {
  const auto r = run({"check", "--algebra", "L1", "--field", "gf:5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_TRUE(j["leibniz_identity"]["holds"].get<bool>());
  EXPECT_EQ(j["invariants"]["derived"]["dim"], 2);
  EXPECT_EQ(j["invariants"]["right_center"]["text"], "span{e1 + 4e3}");
  EXPECT_EQ(j["invariants"]["center"]["text"], "<0>");
  const auto& audit = j["audit"];
  ASSERT_EQ(audit.size(), 3u);
  EXPECT_TRUE(audit[0]["agrees"].get<bool>());
  EXPECT_EQ(audit[1]["stated"], "<0>");
  EXPECT_EQ(audit[1]["computed"], "span{e1 + 4e3}");
  EXPECT_FALSE(audit[1]["agrees"].get<bool>());
  EXPECT_TRUE(audit[2]["agrees"].get<bool>());
}

TEST(Cli, CheckRejectsZeroLambda) {
  const auto r = run({"check", "--algebra", "L2", "--lambda", "0", "--field", "gf:3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ZeroLambda"), std::string::npos);
}

TEST(Cli, CheckReportsViolatingTriple) {
  const auto r = run({"check", "--file", data("broken.json")});
  ASSERT_EQ(r.code, 1) << r.err;
  const auto v = r.json()["leibniz_identity"]["violation"];
  EXPECT_EQ(v["triple"], Json::array({1, 1, 1}));
  EXPECT_EQ(v["lhs"], "e3");
  EXPECT_EQ(v["rhs"], "e2 + e3");
  EXPECT_FALSE(r.json().contains("invariants"));
}

TEST(Cli, RationalFileAndLambda) {
  const auto file = run({"check", "--file", data("l2_rationals.json")});
  ASSERT_EQ(file.code, 0) << file.err;
  const auto builtin = run({"check", "--algebra", "L2", "--field", "rationals", "--lambda", "6/4"});
  ASSERT_EQ(builtin.code, 0) << builtin.err;
  EXPECT_EQ(builtin.json()["lambda"], "3/2");
  EXPECT_EQ(file.json()["structure_constants"], builtin.json()["structure_constants"]);
  EXPECT_EQ(file.json()["invariants"], builtin.json()["invariants"]);
  EXPECT_EQ(builtin.json()["invariants"]["right_center"]["text"], "span{e1 - e3}");
}

TEST(Cli, EmittedAlgebrasRoundTrip) {
  const std::vector<std::vector<std::string>> configs = {
      {"check", "--algebra", "L1", "--field", "gf:7"},
      {"check", "--algebra", "L2", "--field", "gf:7", "--lambda", "10"},
      {"check", "--algebra", "L2", "--field", "rationals", "--lambda", "-2/7"},
  };
  for (const auto& args : configs) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto emitted = r.json()["structure_constants"];
    const auto parsed = algebra_from_json(emitted);
    const auto path = scratch("roundtrip.json");
    std::ofstream(path) << emitted.dump();
    const auto again = run({"check", "--file", path.string()});
    ASSERT_EQ(again.code, 0) << again.err;
    EXPECT_EQ(again.json()["structure_constants"], emitted);
    std::visit([&](const auto& alg) { EXPECT_EQ(algebra_json(alg), emitted); }, parsed);
  }
  const auto l1 = std::get<Algebra<ModInt>>(
      algebra_from_json(run({"check", "--algebra", "L1", "--field", "gf:7"}).json()["structure_constants"]));
  EXPECT_EQ(l1, make_l1<ModInt>(Field::prime(7)));
}

TEST(Cli, AutL1OverGF3) {
  const auto r = run({"aut", "--algebra", "L1", "--field", "gf:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["order"], 48);
  EXPECT_TRUE(j["oracles"]["brute_force_equals_family"].get<bool>());
  EXPECT_TRUE(j["oracles"]["pruned_equals_family"].get<bool>());
  for (const char* key : {"homomorphism", "injective", "surjective", "kernel_trivial"})
    EXPECT_TRUE(j["phi"]["onto_gl2"][key].get<bool>()) << key;
  EXPECT_EQ(j["audit"][0]["coverage_c2_c1"], "36/48");
  EXPECT_FALSE(j["audit"][0]["agrees"].get<bool>());
  EXPECT_TRUE(j["checks_passed"].get<bool>());
  EXPECT_EQ(j["automorphisms"]["elements"].size(), 48u);
  EXPECT_EQ(j["automorphisms"]["provenance"], "closed-form-family");
}

TEST(Cli, AutL1OverGF2ShowsNonFactorableWitness) {
  const auto j = run({"aut", "--algebra", "L1", "--field", "gf:2"}).json();
  const auto& audit = j["audit"][0];
  EXPECT_EQ(audit["coverage_c2_c1"], "4/6");
  EXPECT_EQ(audit["uncovered_witness"]["params_text"], "(1,1,0,1)");
  EXPECT_FALSE(audit["uncovered_witness"]["in_c1_c2"].get<bool>());
  EXPECT_EQ(j["factorization"]["not_factorable"], 2);
}

TEST(Cli, AutL2OverGF5) {
  const auto r = run({"aut", "--algebra", "L2", "--lambda", "2", "--field", "gf:5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["order"], 20);
  EXPECT_TRUE(j["group"]["abelian"].get<bool>());
  EXPECT_TRUE(j["decomposition"]["certificate"]["certified"].get<bool>());
  EXPECT_EQ(j["decomposition"]["certificate"]["kind"], "direct");
  EXPECT_EQ(j["automorphisms"]["elements"][0]["params"]["beta"], "1");
}

TEST(Cli, AutOnACustomFile) {
  const auto emitted = run({"check", "--algebra", "L1", "--field", "gf:3"}).json()["structure_constants"];
  const auto path = scratch("l1_gf3.json");
  std::ofstream(path) << emitted.dump();
  const auto r = run({"aut", "--file", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["order"], 48);
  EXPECT_EQ(r.json()["automorphisms"]["provenance"], "brute-force");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"aut", "--algebra", "L1", "--field", "gf:17"}).code, 3);
  EXPECT_EQ(run({"aut", "--algebra", "L1", "--field", "rationals"}).code, 3);
  EXPECT_EQ(run({"aut", "--file", data("broken.json")}).code, 0);
  EXPECT_EQ(run({"check", "--algebra", "L1", "--field", "gf:4"}).code, 2);
  EXPECT_EQ(run({"check", "--algebra", "L3", "--field", "gf:5"}).code, 2);
  EXPECT_EQ(run({"check", "--algebra", "L2", "--field", "gf:5"}).code, 2);
  EXPECT_EQ(run({"check", "--algebra", "L1", "--field", "gf:5", "--lambda", "1"}).code, 2);
  EXPECT_EQ(run({"check", "--algebra", "L1"}).code, 2);
  EXPECT_EQ(run({"check", "--file", "/nonexistent/x.json"}).code, 2);
  EXPECT_EQ(run({"check", "--file", data("broken.json"), "--field", "gf:7"}).code, 2);
  EXPECT_EQ(run({"check", "--algebra", "L1", "--field", "gf:5", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"sweep"}).code, 2);
  EXPECT_EQ(run({"sweep", "--primes", ""}).code, 2);
  EXPECT_EQ(run({"sweep", "--primes", "2,,3"}).code, 2);
  EXPECT_EQ(run({"sweep", "--primes", "4"}).code, 2);
  EXPECT_EQ(run({"sweep", "--primes", "2,17"}).code, 3);
  EXPECT_EQ(run({"sweep", "--primes", "2", "--lambda", "1"}).code, 2);
  EXPECT_EQ(run({"aut", "--algebra", "L1", "--field", "gf:3", "--workers", "0"}).code, 2);

  EXPECT_EQ(exit_code_for(Errc::FieldTooLarge), 3);
  EXPECT_EQ(exit_code_for(Errc::InfiniteField), 3);
  EXPECT_EQ(exit_code_for(Errc::MalformedSpec), 2);
  EXPECT_EQ(exit_code_for(Errc::NotAGroup), 1);
}

TEST(Cli, MalformedFiles) {
  const std::vector<std::string> bodies = {
      "not json",
      R"({"field": "gf:5", "dim": 3})",
      R"({"field": "gf:5", "dim": 2, "table": [[[0,0],[0,0]],[[0,0]]]})",
      R"({"field": "gf:5", "dim": 1, "table": [[[true]]]})",
      R"({"field": "rationals", "dim": 1, "table": [[["1/0"]]]})",
  };
  for (const auto& body : bodies) {
    const auto path = scratch("malformed.json");
    std::ofstream(path) << body;
    EXPECT_EQ(run({"check", "--file", path.string()}).code, 2) << body;
  }
}

TEST(Cli, SweepRowsAndTextTable) {
  const auto r = run({"sweep", "--algebra", "L1", "--primes", "2,3,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = r.json()["rows"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["order"], 6);
  EXPECT_EQ(rows[1]["order"], 48);
  EXPECT_EQ(rows[2]["order"], 480);
  EXPECT_EQ(rows[2]["coverage_c2_c1"], "400/480");
  EXPECT_TRUE(rows[1]["brute_force_checked"].get<bool>());
  EXPECT_FALSE(rows[2]["brute_force_checked"].get<bool>());

  const auto l2 = run({"sweep", "--algebra", "L2", "--primes", "2,3,5,7"});
  ASSERT_EQ(l2.code, 0) << l2.err;
  EXPECT_EQ(l2.json()["rows"].size(), 1u + 2u + 4u + 6u);
  for (const auto& entry : l2.json()["lambda_independence"]) EXPECT_TRUE(entry["identical"].get<bool>());

  const auto text = run({"sweep", "--algebra", "L1", "--primes", "2,3", "--format", "text"});
  EXPECT_NE(text.out.find("algebra"), std::string::npos);
  EXPECT_NE(text.out.find("36/48"), std::string::npos);
  EXPECT_NE(text.out.find("all checks passed: true"), std::string::npos);
}

TEST(Cli, TextReportAndOutputFile) {
  const auto path = scratch("report.txt");
  fs::remove(path);
  const auto r = run({"aut", "--algebra", "L2", "--lambda", "1", "--field", "gf:3", "--format", "text", "--output",
                      path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("order: 6"), std::string::npos);
  EXPECT_NE(text.find("note: beta is the common diagonal scale"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministicAcrossWorkerCounts) {
  const auto a = run({"sweep", "--primes", "2,3,5", "--workers", "1"});
  const auto b = run({"sweep", "--primes", "2,3,5", "--workers", "4"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  ::setenv("LEIBALG_WORKERS", "3", 1);
  const auto c = run({"sweep", "--primes", "2,3,5"});
  ::unsetenv("LEIBALG_WORKERS");
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(run({"aut", "--algebra", "L1", "--field", "gf:5"}).out,
            run({"aut", "--algebra", "L1", "--field", "gf:5", "--workers", "3"}).out);
}

}  // namespace
