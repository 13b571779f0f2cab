#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>

#include <json.hpp>

#include "sylowkit/suite.hpp"
#include "support.hpp"

using namespace sylowkit;

namespace {

struct Run {
  int status;
  std::string out;
};

Run grp(std::string const& args) {
  std::string const cmd = std::string(GRP_BINARY) + " " + args + " 2>&1";
  FILE* f = ::popen(cmd.c_str(), "r");
  if (!f) return {-1, {}};
  std::string out;
  char buf[4096];
  while (auto n = std::fread(buf, 1, sizeof buf, f)) out.append(buf, n);
  int const st = ::pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::filesystem::path write_temp(std::string const& name, std::string const& body) {
  auto const p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

bool has_check(Report const& r, std::string const& name) {
  for (auto const& c : r.checks)
    if (c.verdict.name == name) return true;
  return false;
}

}  // namespace

TEST(Verify, S4IncludesSylow3ForBothPrimes) {
  auto const r = verify(fixtures::make("symmetric:4"), "symmetric:4");
  EXPECT_TRUE(r.all_pass());
  for (char const* p : {"p=2", "p=3"}) {
    EXPECT_TRUE(has_check(r, std::string("sylow3_div(") + p + ")")) << p;
    EXPECT_TRUE(has_check(r, std::string("sylow3_mod(") + p + ")")) << p;
  }
  EXPECT_EQ(r.certificates.size(), 4u);
}

TEST(Verify, OracleModePasses) {
  SuiteOptions opt;
  opt.oracle = true;
  for (char const* ref : {"cyclic:12", "q8", "dihedral:6", "product:(cyclic:2,symmetric:3)"})
    EXPECT_TRUE(verify(fixtures::make(ref), ref, opt).all_pass()) << ref;
}

TEST(Report, JsonSchema) {
  auto const j = to_json(sylow_report(fixtures::make("symmetric:4"), "symmetric:4", 2));
  EXPECT_EQ(j["group"], "symmetric:4");
  EXPECT_EQ(j["order"], 24);
  ASSERT_TRUE(j["checks"].is_array());
  for (auto const& c : j["checks"]) {
    EXPECT_TRUE(c["name"].is_string());
    EXPECT_TRUE(c["status"] == "pass" || c["status"] == "fail");
    EXPECT_TRUE(c.contains("lhs") && c.contains("rhs") && c.contains("witness") && c.contains("ms"));
  }
  bool saw_sylow = false;
  for (auto const& c : j["certificates"]) {
    if (c["kind"] == "sylow") {
      saw_sylow = true;
      EXPECT_EQ(c["p"], 2);
      EXPECT_EQ(c["n"], 3);
      EXPECT_EQ(c["elements"].size(), 8u);
    }
  }
  EXPECT_TRUE(saw_sylow);
  EXPECT_EQ(j["sylow_subgroups"].size(), 3u);
}

TEST(Report, FailingCheckCarriesWitness) {
  Report r;
  r.add(equality("demo", 3, 4, {{"x", 7}}));
  EXPECT_FALSE(r.all_pass());
  auto const j = to_json(r);
  EXPECT_EQ(j["checks"][0]["status"], "fail");
  EXPECT_EQ(j["checks"][0]["witness"]["x"], 7);
}

TEST(ParseGens, Grammar) {
  EXPECT_EQ(parse_gens("3,5", 12), (std::vector<elem>{3, 5}));
  EXPECT_TRUE(parse_gens("", 12).empty());
  EXPECT_THROW((void)parse_gens("3,,5", 12), error);
  EXPECT_THROW((void)parse_gens("12", 12), error);
}

TEST(Orbits, ActionGrammar) {
  auto const g = fixtures::make("symmetric:4");
  EXPECT_EQ(parse_action(g, "conj").points(), 24u);
  EXPECT_EQ(parse_action(g, "ltrans:1/1,2").points(), 4u);
  EXPECT_EQ(parse_action(g, "sylow:3").points(), 4u);
  EXPECT_THROW((void)parse_action(g, "spin"), error);
  EXPECT_THROW((void)parse_action(g, "ltrans:1"), error);
  auto const r = orbits_report(g, "s4", "conj", SuiteOptions{.oracle = true});
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.extra["orbits"].size(), 5u);  // conjugacy classes of S4
}

TEST(Cli, SylowS4) {
  auto const r = grp("sylow s4 -p 2");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("subgroup of size 8"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("count 3"), std::string::npos);
  EXPECT_NE(r.out.find("3 ≡ 1 (mod 2)"), std::string::npos);
  EXPECT_NE(r.out.find("3 | 24"), std::string::npos);
}

TEST(Cli, CauchyZ6) {
  auto const r = grp("cauchy cyclic:6 -p 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("element 2, order 3"), std::string::npos) << r.out;
}

TEST(Cli, QuotientZ12) {
  auto const r = grp("quotient cyclic:12 --gens 4 --json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["quotient"]["order"], 4);
  EXPECT_EQ(grp("quotient s3 --gens 1").status, 2);  // not normal
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(grp("verify s4").status, 0);
  EXPECT_EQ(grp("verify cyclic:12").status, 0);
  EXPECT_EQ(grp("verify symmetric:99").status, 2);
  EXPECT_EQ(grp("verify").status, 2);
  EXPECT_EQ(grp("frobnicate s3").status, 2);
  EXPECT_EQ(grp("sylow s4 -p 4").status, 2);
}

TEST(Cli, VerifyNonGroupFile) {
  auto const bad = write_temp("sylowkit_bad.cayley", "3\n0 1 2\n1 0 0\n2 2 0\n");
  auto const r = grp("verify " + bad.string());
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("NonAssociative"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("x1="), std::string::npos) << r.out;

  auto const range = write_temp("sylowkit_range.cayley", "2\n0 1\n1 2\n");
  auto const r2 = grp("verify " + range.string());
  EXPECT_EQ(r2.status, 2);
  EXPECT_NE(r2.out.find("entry 2 out of range"), std::string::npos) << r2.out;
}

TEST(Cli, VerifyGroupFile) {
  auto const z3 = write_temp("sylowkit_z3.cayley", "# Z3\n3\n0 1 2\n1 2 0\n2 0 1\n");
  EXPECT_EQ(grp("verify " + z3.string()).status, 0);
}

TEST(Cli, Catalog) {
  auto const r = grp("catalog");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("product:(cyclic:2,symmetric:4)  order 48"), std::string::npos);
}
