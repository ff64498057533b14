#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hqp/gca.hpp"
#include "hqp/io.hpp"

using namespace hqp;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return std::string(HQP_DATA_DIR) + "/" + name; }

fs::path scratch() {
  fs::path p = fs::temp_directory_path() / ("hqp_cli_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

int run(const std::string& args, const std::string& out = "/dev/null") {
  std::string cmd = std::string(HQP_CLI) + " " + args + " > " + out + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, MutateRankTwoSeed) {
  fs::path out = scratch() / "m1.json";
  ASSERT_EQ(run("mutate " + data("rank2_seed.json") + " --path 1 -o " + out.string()), 0);
  Seed s = seed_from_json(parse_json(slurp(out)));
  Seed s0 = seed_from_json(parse_json(slurp(data("rank2_seed.json"))));
  RatFunc want(LaurentPoly::parse(s0.ring, "x2^2 + z1*x2 + 1"), LaurentPoly::parse(s0.ring, "x1"));
  EXPECT_EQ(s.x[0], want);
}

TEST(Cli, EmptyPathIsIdentity) {
  fs::path dir = scratch();
  ASSERT_EQ(run("mutate " + data("rank2_seed.json") + " --path '' -o " + (dir / "a.json").string()), 0);
  ASSERT_EQ(run("mutate " + (dir / "a.json").string() + " --path '' -o " + (dir / "b.json").string()), 0);
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
}

TEST(Cli, MutateThereAndBack) {
  fs::path dir = scratch();
  ASSERT_EQ(run("mutate " + data("three_cycle_qp.json") + " --path '' -o " + (dir / "q0.json").string()), 0);
  ASSERT_EQ(run("mutate " + data("three_cycle_qp.json") + " --path 2 -o " + (dir / "q1.json").string()), 0);
  Json q1 = parse_json(slurp(dir / "q1.json"));
  EXPECT_EQ(q1.at("arrows").size(), 2u);
  EXPECT_TRUE(q1.at("terms").empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("mutate " + data("bad.json") + " --path 1"), 2);
  EXPECT_EQ(run("mutate /nonexistent.json --path 1"), 2);
  EXPECT_EQ(run("mutate " + data("rank2_seed.json") + " --path 3"), 3);
  EXPECT_EQ(run("mutate " + data("rank2_seed.json") + " --path x"), 2);
  EXPECT_EQ(run("verify no-such-suite"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
}

TEST(Cli, DegeneratePotentialIsAPreconditionFailure) {
  fs::path p = scratch() / "two_cycle.json";
  std::ofstream(p) << R"({"kind": "qp", "n": 2, "d": [1, 1], "arrows": [[1, 2], [2, 1]], "terms": []})";
  EXPECT_EQ(run("mutate " + p.string() + " --path 1"), 3);
}

TEST(Cli, VerifyInvolutions) {
  fs::path out = scratch() / "inv.json";
  EXPECT_EQ(run("verify involutions --seed 5", out.string()), 0);
  Json r = parse_json(slurp(out));
  EXPECT_TRUE(r.at("pass").get<bool>());
  EXPECT_EQ(r.at("seed").get<int>(), 5);
}

TEST(Cli, VerifyLaurent) {
  fs::path out = scratch() / "laurent.json";
  EXPECT_EQ(run("verify laurent", out.string()), 0);
  EXPECT_TRUE(parse_json(slurp(out)).at("pass").get<bool>());
}

TEST(Cli, ExploreDot) {
  fs::path out = scratch() / "g.dot";
  ASSERT_EQ(run("explore " + data("rank2_seed.json") + " --depth 2 --format dot -o " + out.string()), 0);
  EXPECT_NE(slurp(out).find("graph exchange"), std::string::npos);
}
