#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "surj/io.hpp"
#include "surj_cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = surj::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, MiddleProductSymbolic) {
  const auto r = run({"op", "--kind", "middle", "--q", "q", "2,1,1", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q(2,1,1,1,2) + (3,1,1,2,3) + (3,2,2,1,3)\n");
}

TEST(Cli, ProductAtRationalQ) {
  const auto r = run({"op", "--kind", "right", "--q", "1/2", "2,1,1", "1,2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = surj::Json::parse(r.out);
  EXPECT_EQ(j["degree"], 5);
  EXPECT_EQ(j["terms"].size(), 5u);
  EXPECT_EQ(j["terms"][0]["coeff"][0], "1/2");
}

TEST(Cli, ProductAtIntegerQIsPlainText) {
  const auto r = run({"op", "--kind", "middle", "--q", "0", "2,1,1", "1,2"});
  EXPECT_EQ(r.out, "(3,1,1,2,3) + (3,2,2,1,3)\n");
}

TEST(Cli, StructuralProducts) {
  EXPECT_EQ(run({"op", "--kind", "backslash", "3,4,1,2", "1"}).out, "(4,5,2,3,1)\n");
  EXPECT_EQ(run({"op", "--kind", "dot", "2,4,1,3,2", "1,2,1"}).out, "(2,5,1,3,2,4,5,4)\n");
  EXPECT_EQ(run({"op", "--kind", "concat", "2,1,1", "1,2"}).out, "(2,1,1,3,4)\n");
  EXPECT_EQ(run({"op", "--kind", "shuffle", "1", "1,1"}).out, "(1,2,2) + (2,1,1)\n");
}

TEST(Cli, Coproduct) {
  const auto r = run({"coproduct", "3,4,2,5,1,1,3,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1,1)⊗(2,3,1,4,2,4) + (2,1,1)⊗(1,2,3,1,3) + (3,2,1,1,3)⊗(1,2,2) + (3,4,2,1,1,3)⊗(1,1)\n");
  const auto j = surj::Json::parse(run({"coproduct", "2,1", "--format", "json"}).out);
  EXPECT_EQ(j["terms"][0]["words"], surj::Json::parse("[[1],[1]]"));
}

TEST(Cli, PrimitivesEtaPsi) {
  EXPECT_EQ(run({"primitive", "2,3,1"}).out, "-(2,1,3) + (2,3,1)\n");
  EXPECT_EQ(run({"eta", "2,1"}).out, "(1,2) - (2,1)\n");
  EXPECT_EQ(run({"psi", "1,2,1"}).out, "-(1,1,2) + (1,2,1)\n");
  const auto bad = run({"eta", "1,2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("irreducible"), std::string::npos);
}

TEST(Cli, DimsJson) {
  const auto r = run({"dims", "--max-n", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = surj::Json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  const auto& row = j[2];
  EXPECT_EQ(row["n"], 3);
  EXPECT_EQ(row["ST"], 13);
  EXPECT_EQ(row["Irr"], 8);
  EXPECT_EQ(row["primRank"], 8);
  EXPECT_EQ(row["D"], 4);
  EXPECT_EQ(row["B"], 2);
}

TEST(Cli, BasisListsGenerators) {
  const auto r = run({"basis", "--max-n", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = surj::Json::parse(r.out);
  EXPECT_EQ(j[2]["B"], surj::Json::parse("[[1,2,1],[2,3,1]]"));
}

TEST(Cli, CheckPassesWithExitZero) {
  const auto r = run({"check", "--suite", "tridendriform", "--max-total", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tridendriform: pass"), std::string::npos);
}

TEST(Cli, CheckJsonAndSeveralSuites) {
  const auto r = run({"check", "--suite", "dendriform", "--suite", "freeness", "--max-total", "4", "--max-n", "3",
                      "--format", "json", "--q", "2"});
  EXPECT_EQ(r.code, 0);
  const auto j = surj::Json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["suites"][1]["suite"], "freeness");
  EXPECT_EQ(j["suites"][1]["bound"], 3);
  EXPECT_TRUE(j["suites"][0]["counterexample"].is_null());
}

TEST(Cli, FailingSuiteExitsOneWithCounterexample) {
  const auto r = run({"check", "--suite", "order", "--max-total", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("relation:"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"op", "--kind", "sideways", "1", "1"}).code, 2);
  EXPECT_EQ(run({"op", "--kind", "left", "1,3", "1"}).code, 2);
  EXPECT_EQ(run({"op", "--kind", "left", "1"}).code, 2);
  EXPECT_EQ(run({"psi", "2,1", "--q", "x"}).code, 2);
  EXPECT_EQ(run({"check", "--suite", "gv", "--q", "1/2"}).code, 2);
  EXPECT_EQ(run({"dims", "--max-n", "0"}).code, 2);
}

TEST(Cli, OutputIsStable) {
  const std::vector<std::string> args{"check", "--suite", "brace", "--max-total", "4", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}
