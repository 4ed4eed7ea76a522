#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "hyperplan/io/json_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPERPLAN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& rel) { return std::string(HYPERPLAN_DATA_DIR) + "/" + rel; }

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "hyperplan_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST(Cli, SolveP1) {
  auto r = run("solve " + data("json/p1.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("verdict=SAT plan=a,b", 0), 0U) << r.out;
}

TEST(Cli, CheckMirrorUnsat) {
  auto r = run("check " + data("json/t0.json") + " " + data("hltl/phi2.hltl"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("verdict=UNSAT", 0), 0U) << r.out;
  auto s = run("check " + data("json/t0.json") + " " + data("hltl/phi1.hltl"));
  EXPECT_EQ(s.code, 0);
  auto k = run("check " + data("json/t0.json") + " " + data("hltl/phi1.hltl") + " --enum 1");
  EXPECT_EQ(k.code, 1);
  EXPECT_EQ(k.out.rfind("verdict=UNKNOWN", 0), 0U);
}

TEST(Cli, Roundtrip) {
  auto r = run("roundtrip --seed 7 --count 100 --direction both");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "agreements=100 disagreements=0\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("solve").code, 2);
  EXPECT_EQ(run("solve /nonexistent/p.json").code, 2);
  EXPECT_EQ(run("check " + data("json/t0.json") + " " + data("json/t0.json")).code, 2);
  EXPECT_EQ(run("roundtrip --direction sideways").code, 2);
}

TEST(Cli, ResourceLimit) {
  EXPECT_EQ(run("--max-beliefs 1 solve " + data("json/p1.json")).code, 3);
}

TEST(Cli, PddlPipeline) {
  const auto strips = tmp("bomb.json");
  auto g = run("ground " + data("pddl/bomb-domain.pddl") + " " + data("pddl/bomb-p2-t1.pddl") + " -o " + strips);
  ASSERT_EQ(g.code, 0) << g.out;
  auto s = run("solve " + strips);
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find(",finish "), std::string::npos) << s.out;
  auto m = run("plan2mc " + strips + " -o " + tmp("bomb.smv") + " --formula " + tmp("bomb.hltl") + " --verify");
  EXPECT_EQ(m.code, 0) << m.out;
  EXPECT_NE(m.out.find("verify planner=SAT checker=SAT"), std::string::npos) << m.out;
}

TEST(Cli, Mc2PlanThenSolve) {
  const auto out = tmp("t0_phi1.json");
  auto e = run("mc2plan " + data("json/t0.json") + " " + data("hltl/phi1.hltl") + " -o " + out);
  ASSERT_EQ(e.code, 0);
  auto s = run("solve " + out);
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.rfind("verdict=SAT plan=(d1),(d0)", 0), 0U) << s.out;

  const auto sym = tmp("x0_sym.json");
  ASSERT_EQ(run("mc2plan " + data("json/x0.json") + " " + data("hltl/phi1.hltl") + " -o " + sym + " --symbolic").code,
            0);
  EXPECT_EQ(run("solve " + sym).code, 1);  // x0 has no p
  EXPECT_EQ(run("mc2plan " + data("json/t0.json") + " " + data("hltl/phi1.hltl") + " -o " + sym + " --symbolic").code,
            2);
}

TEST(Cli, Plan2McAgreesWithSolve) {
  const auto smv = tmp("p1.smv");
  const auto f = tmp("p1.hltl");
  auto r = run("plan2mc " + data("json/p1.json") + " -o " + smv + " --formula " + f + " --verify");
  EXPECT_EQ(r.code, 0) << r.out;
  auto text = hyperplan::io::read_file(smv);
  EXPECT_EQ(text.rfind("-- generated by hyperplan", 0), 0U);
  EXPECT_NE(text.find("MODULE main"), std::string::npos);
}
