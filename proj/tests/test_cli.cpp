#include <gtest/gtest.h>

#include <sstream>

#include "rigiditykit/cli.hpp"
#include "rigiditykit/json_io.hpp"

using rigiditykit::Json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = rigiditykit::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RigidHypersurfaceJson) {
  const CliResult r = run({"rigidity", "X1^6*X2^7 + Y1^8*Y2^9 + Z1^10*Z2^11", "--assume-prime", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Rigid");
  EXPECT_EQ(j["exponent_sums"][0]["sum"], "20417/27720");
  EXPECT_EQ(j["exponent_sums"][0]["threshold"], "1/1");
  EXPECT_EQ(j["sml_all"], true);
}

TEST(Cli, JsonFlagBeforeSubcommand) {
  const CliResult r = run({"--json", "rigidity", "X^2 + Y^2 + Z^2"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Inconclusive");
  EXPECT_EQ(j["exponent_sums"][0]["sum"], "3/2");
}

TEST(Cli, TightTriple) {
  const CliResult r = run({"ms", "t^2", "1-t^2", "-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("tight: yes"), std::string::npos);
  const CliResult j = run({"ms", "t^2", "1-t^2", "-1", "--json"});
  EXPECT_EQ(Json::parse(j.out)["bound"], 2);
}

TEST(Cli, NegativeLeadingExpressions) {
  const CliResult r = run({"ms", "-t^2", "t^2 - 1", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("tight: yes"), std::string::npos);
}

TEST(Cli, HypothesisFailureExitsOne) {
  const CliResult r = run({"ms", "t", "t", "-2*t"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NotCoprime"), std::string::npos);
}

TEST(Cli, SharedVariableExitsOne) {
  const CliResult r = run({"rigidity", "X^2+X*Y+Z^2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("SharedVariable"), std::string::npos);
}

TEST(Cli, SyntaxErrorExitsOne) {
  const CliResult r = run({"radical", "t^^2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);
}

TEST(Cli, UnknownFlagPrintsUsage) {
  const CliResult r = run({"rigidity", "X^3+Y^3+Z^3", "--frobnicate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, RadicalAndRootCount) {
  EXPECT_EQ(run({"radical", "t^4 - t^2"}).out, "t^3 - t\n");
  EXPECT_EQ(run({"nroots", "t^4 - t^2"}).out, "3\n");
  EXPECT_EQ(run({"radical", "x^2 - 2*x + 1"}).out, "x - 1\n");
  EXPECT_EQ(run({"nroots", "0"}).code, 1);
}

TEST(Cli, Gms) {
  const CliResult r = run({"gms", "(t+1)^3", "-t^3", "-3*t^2-3*t", "-1", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["bound"], 6);
}

TEST(Cli, Shadow) {
  const std::string terms =
      R"([{"coefficient":"1","factors":[{"base":"2","exponent":3}]},{"factors":[{"base":"1","exponent":3}]},)"
      R"({"coefficient":"-9","factors":[{"base":"1","exponent":3}]}])";
  const CliResult r = run({"shadow", "--mode", "zero", terms, "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["verdict"], "ConsistentAllConstant");
  EXPECT_EQ(run({"shadow", "--mode", "sideways", terms}).code, 1);
}

TEST(Cli, SemiRigid) {
  const CliResult r = run({"semirigid", "(X-Y)^4 + V^4*W^5 + Z^4", "--subst", "U = X - Y; U2 = X + Y", "--assume-prime",
                     "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "SemiRigid");
  EXPECT_NE(j["notes"].get<std::string>().find("U2"), std::string::npos);
  EXPECT_EQ(j["split"]["free_variables"], Json::array({"U2"}));
}

TEST(Cli, RigidityWithSubstitution) {
  const CliResult r = run({"rigidity", "(X-Y)^3 + (X+Y)^3 + Z^3", "--subst", "U = X - Y; U2 = X + Y", "--assume-prime",
                     "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["verdict"], "Rigid");
}

TEST(Cli, Trinomial) {
  const std::string data =
      R"({"A":[["-1","-1"],["1","0"],["0","1"],["-1","-2"]],"n":[2,2,1,2],"L":[[6,9],[6,12],[7],[8,9]],)"
      R"("names":[["Z1","Z2"],["X1","X2"],["Y"],["W1","W2"]]})";
  const CliResult r = run({"trinomial", data, "--assume-graded-factorial", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["exponent_sums"][0]["sum"], "169/252");
  EXPECT_EQ(j["exponent_sums"][1]["sum"], "317/504");
  EXPECT_EQ(j["factoriality"]["pairwise_coprime"], false);
}

TEST(Cli, FuzzIsDeterministic) {
  const std::vector<std::string> args{"fuzz", "gms", "--n", "4", "--trials", "200", "--seed", "3", "--max-deg", "4",
                                      "--coeff-bound", "3", "--json"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["violations"], 0);
}

TEST(Cli, SearchAndBudget) {
  const CliResult r = run({"search", "shadow", "--deg-cap", "1", "--coeffs=-1..1", "--exponents", "3,4,6", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["counterexamples"], 0);
  const CliResult big = run({"search", "shadow", "--deg-cap", "5"});
  EXPECT_EQ(big.code, 1);
  EXPECT_NE(big.err.find("SearchBudgetExceeded"), std::string::npos);
}

TEST(Cli, Corpus) {
  const CliResult r = run({"corpus", "run", CORPUS_DIR});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("mismatches: 0"), std::string::npos);
  EXPECT_EQ(run({"corpus", "run", "/nonexistent"}).code, 1);
}
