#include "common.hpp"

#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"
#include "qsc/bases.hpp"

namespace qsc {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Uv) {
  auto r = run({"uv", "--word", "r1 t1 t2 t1 r2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "u=21435 v=51243\n");
  EXPECT_EQ(run({"uv", "--word", "r1 t1 t1 r2 t4"}).out, "u=32415 v=52341\n");
  auto j = nlohmann::json::parse(run({"uv", "--word", "r1 t1 t2 t1 r2", "--json"}).out);
  EXPECT_EQ(j["u"], "21435");
  EXPECT_EQ(j["v"], "51243");
}

TEST(Cli, Ds) {
  EXPECT_EQ(run({"ds", "-f", "x1*x2", "-n", "3", "--mode", "both"}).out, "1\n1\n");
  EXPECT_EQ(run({"ds", "-f", "x1*x2", "-n", "3"}).out, "1\n");
  EXPECT_EQ(run({"ds", "-q", "-f", "x1*x2", "-n", "3"}).out, "q\n");
  EXPECT_EQ(run({"ds", "-f", "-", "-n", "2"}, "x2\n").out, "-1\n");
}

TEST(Cli, Expand) {
  EXPECT_EQ(run({"expand", "--basis", "schubert", "-f", "x1*x2", "-n", "3"}).out, "231 1\n");
  EXPECT_EQ(run({"expand", "--basis", "schubert", "-f", "0", "-n", "3"}).out, "0\n");
  EXPECT_EQ(run({"expand", "--basis", "fundamental", "-f", "x1+x2", "-n", "2"}).out, "(1) 1\n");
  auto j = nlohmann::json::parse(run({"expand", "--basis", "forest", "-f", "x2", "-n", "2", "--json"}).out);
  EXPECT_EQ(j["basis"], "forest");
  ASSERT_EQ(j["terms"].size(), 2u);
  // Round trip: the JSON terms reassemble to the input.
  Poly sum;
  for (const auto& t : j["terms"]) {
    auto f = parse_indexed_forest(t["index"].get<std::string>());
    sum += forest_poly(f) * Integer(t["coeff"].get<std::string>());
  }
  EXPECT_EQ(sum, P("x2"));
  EXPECT_EQ(run({"expand", "--basis", "fundamental", "-f", "x2", "-n", "2"}).code, kExitPrecondition);
}

TEST(Cli, LrTrimMatrixLocateGessel) {
  EXPECT_EQ(run({"lr", "-u", "2341", "-w", "15243", "-v", "263415"}).out, "1\n");
  EXPECT_EQ(run({"lr", "--word", "r1 t1 t1", "-w", "21"}).code, kExitOk);
  EXPECT_EQ(run({"trim", "--forest", "{1,2}:^..", "-n", "2"}).out, "r1 t1\n");
  EXPECT_EQ(run({"matrix", "--word", "r1 t1 t1 r2"}).out, "0100\n*010\n*001\n1000\n");
  EXPECT_EQ(run({"locate", "--lambda", "3,2,1", "--point", "2,2,2"}).out, "r1 t1 r2\n");
  auto j = nlohmann::json::parse(run({"locate", "--lambda", "3,2,1", "--point", "2,2,2", "--json"}).out);
  EXPECT_EQ(j["dimension"], 1);
  EXPECT_EQ(run({"locate", "--lambda", "3,2,1", "--point", "4,1,1"}).code, kExitPrecondition);
  EXPECT_EQ(run({"gessel", "-f", "x1+x2", "-n", "2"}).out, "(1) 1 ribbon (1)/()\n");
}

TEST(Cli, Verify) {
  auto r = run({"verify", "relations", "--max-n", "4", "--seed", "7"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("relations: PASS", 0), 0u);
  EXPECT_EQ(run({"verify", "relations", "--max-n", "4", "--seed", "7"}).out, r.out);
  auto j = nlohmann::json::parse(run({"verify", "duality", "--max-n", "3", "--json"}).out);
  EXPECT_EQ(j["suites"][0]["suite"], "duality");
  EXPECT_EQ(j["suites"][0]["passed"], true);
  EXPECT_NE(run({"verify", "bogus"}).code, kExitOk);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitParse);
  EXPECT_EQ(run({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(run({"ds", "-f", "x1*", "-n", "3"}).code, kExitParse);
  EXPECT_EQ(run({"uv", "--word", "r1 q2"}).code, kExitParse);
  auto bad = run({"matrix", "--word", "r1 r3"});
  EXPECT_EQ(bad.code, kExitPrecondition);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(run({"ds", "-q", "-f", "x1^2", "-n", "2", "--mode", "factorized"}).code, kExitPrecondition);
}

}  // namespace
}  // namespace qsc
