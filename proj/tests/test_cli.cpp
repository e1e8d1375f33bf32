#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "camina/cli.hpp"

using namespace camina;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CAMINA_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST(Cli, Info) {
  const auto r = run({"info", data("s3.perm")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("report-version = 1\n", 0), 0u);
  EXPECT_TRUE(has_line(r.out, "order = 6"));
  EXPECT_TRUE(has_line(r.out, "class-sizes = 1,2,3"));
  EXPECT_TRUE(has_line(r.out, "chief-factor-orders = 3,2"));
}

TEST(Cli, Table) {
  const auto r = run({"table", data("q8.cayley")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "classes = 5"));
  EXPECT_TRUE(has_line(r.out, "chi.0 = 1,1,1,1,1"));
  EXPECT_TRUE(has_line(r.out, "chi.4 = 2,0,-2,0,0"));
}

TEST(Cli, ClassifyDefaultsToMinimalNormalSubgroups) {
  const auto r = run({"classify", data("f20.cayley")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "pair.0.type = Type2"));
  EXPECT_TRUE(has_line(r.out, "pair.0.degrees = 4"));
  const auto t3 = run({"classify", data("heis3_c2.cayley"), "--auto-minimal"});
  EXPECT_TRUE(has_line(t3.out, "pair.0.type = Type3"));
  EXPECT_TRUE(has_line(t3.out, "pair.0.kuisch = i"));
}

TEST(Cli, ClassifyWithExplicitNormalSubgroup) {
  // In Q8 as saved, element 2 is the central involution.
  const auto r = run({"classify", data("q8.cayley"), "--normal", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "pair.0.normal-order = 2"));
  EXPECT_TRUE(has_line(r.out, "pair.0.type = Type1"));
  const auto bad = run({"classify", data("s3.perm"), "--normal", "2"});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, AnalyzeEmitsOneBlockPerCharacter) {
  const auto r = run({"analyze", "--pair", data("q8.cayley"), "--normal", "auto-minimal"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "pair.0.theta.0.invariant = true"));
  EXPECT_TRUE(has_line(r.out, "pair.0.theta.1.above = 4:2"));
  EXPECT_TRUE(has_line(r.out, "pair.0.theta.1.fully-ramified = true"));
  EXPECT_EQ(r.out.find("pair.0.theta.2."), std::string::npos);
}

TEST(Cli, Orbits) {
  const auto r = run({"orbits", "--prime", "5", "--dim", "2", "--gens", data("minus_identity_gf5.gens")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "orbit-sizes = 2,2,2,2,2,2,2,2,2,2,2,2"));
  EXPECT_TRUE(has_line(r.out, "regular-orbits = 12"));
  EXPECT_TRUE(has_line(r.out, "negation-pairing = true"));
  const auto c = run({"orbits", "--prime", "7", "--dim", "1", "--gens", data("cubes_gf7.gens")});
  EXPECT_TRUE(has_line(c.out, "dade-duplicate = true"));
}

TEST(Cli, CorpusFilter) {
  const auto r = run({"corpus", "--filter", "AGL1(5)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "total.groups = 1"));
  EXPECT_TRUE(has_line(r.out, "AGL1(5).minimal.0.type = Type2"));
  EXPECT_TRUE(has_line(r.out, "total.violations = 0"));
}

TEST(Cli, UsageAndParseErrorsExitWithOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"info"}).code, 1);
  EXPECT_EQ(run({"info", "/nonexistent/file"}).code, 1);
  const auto bad = run({"info", write_temp("bad.cayley", "cayley 2\n0 1\n")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line"), std::string::npos);
  EXPECT_EQ(run({"orbits", "--prime", "4", "--dim", "1", "--gens", data("cubes_gf7.gens")}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
