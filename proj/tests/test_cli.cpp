#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef ADNRG_CLI
#error "ADNRG_CLI must name the adnrg executable"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + ADNRG_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Result r;
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("adnrg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, EnergyOfAnInterval) {
  const std::string a = file("a.txt", "dim=1\n0\n1\n2\n");
  const Result r = run("energy --k 4 --sets " + a + " --negate-last-half --engine both");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["E_k"], "19");
  EXPECT_EQ(j["normalized"], "19/27");
  EXPECT_EQ(j["engine"], "both");
  EXPECT_TRUE(j["engines_agree"].get<bool>());
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST_F(Cli, EnergyWithSeparateFiles) {
  const std::string a = file("a.txt", "dim=1\n0\n1\n");
  const std::string b = file("b.json", R"({"dim": 1, "points": [[-1], [0]]})");
  const Result r = run("energy --k 3 --sets " + a + "," + a + "," + b);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["E_k"], "3");
}

TEST_F(Cli, CompressAndDownset) {
  const std::string in = file("in.txt", "dim=2\n0 3\n0 7\n1 1\n");
  const Result c = run("compress --axis 2 --box 1,7 " + in + " " + path("c.txt"));
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(json::parse(c.out)["size_after"], 4);
  EXPECT_EQ(slurp(path("c.txt")), "dim=2\n0 -1\n0 0\n0 1\n1 0\n");

  const Result d = run("downset " + in + " " + path("d.json"));
  ASSERT_EQ(d.code, 0);
  EXPECT_TRUE(json::parse(d.out)["is_downset"].get<bool>());
  EXPECT_EQ(json::parse(slurp(path("d.json")))["dim"], 2);

  EXPECT_EQ(run("compress --axis 3 " + in + " " + path("x.txt")).code, 2);
  EXPECT_EQ(run("compress --axis 1 --box 1,1 " + in + " " + path("x.txt")).code, 2);
}

TEST_F(Cli, BallAndCarries) {
  const Result b = run("ball --dim 2 --k 4 --volumes 1,1,1,1 --method quad");
  ASSERT_EQ(b.code, 0);
  const json j = json::parse(b.out);
  EXPECT_NEAR(std::stod(j["value"].get<std::string>()), 0.459620353908, 1e-9);
  EXPECT_EQ(j["method"], "radial-quadrature");

  const Result mc = run("ball --dim 3 --k 5 --volumes 1 --method mc --samples 20000 --seed 4");
  ASSERT_EQ(mc.code, 0);
  EXPECT_EQ(json::parse(mc.out)["nodes_or_samples"], "20000");

  const Result c = run("carries --base 5 --dim 1 --mode centered");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(json::parse(c.out)["c"], "19/25");
  const Result e = run("carries --base 3 --mode exhaustive --objective min");
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(json::parse(e.out)["system"].size(), 3u);
  EXPECT_EQ(run("carries --base 4 --mode centered").code, 2);
}

TEST_F(Cli, CheckLemma) {
  const Result r = run("check-lemma compress --trials 20 --seed 3");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_EQ(run("check-lemma 4.4 --trials 10").code, 0);
  EXPECT_EQ(run("check-lemma 9.9").code, 2);
}

TEST_F(Cli, VerifyWritesReportsDeterministically) {
  const std::string args = "verify --experiment COMPRESS --trials 30 --seed 5 --format json";
  const Result one = run(args, "ADNRG_THREADS=1");
  const Result two = run(args, "ADNRG_THREADS=2");
  ASSERT_EQ(one.code, 0);
  ASSERT_EQ(two.code, 0);
  EXPECT_EQ(one.out, two.out);
  EXPECT_TRUE(json::parse(one.out)["pass"].get<bool>());

  ASSERT_EQ(run(args + " --out " + path("r.json")).code, 0);
  EXPECT_EQ(json::parse(slurp(path("r.json")))["records"], json::parse(one.out)["records"]);

  const Result md = run("verify --experiment CARRIES --format md");
  ASSERT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("| LHS | RHS |"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  const std::string cfg = file("cfg.json", R"({"experiment": "SHIFT", "sentinel": 0, "trials": 30})");
  EXPECT_EQ(run("verify --config " + cfg).code, 1);
  EXPECT_EQ(run("verify --experiment NOPE").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("energy --sets " + path("missing.txt")).code, 2);
  EXPECT_EQ(run("energy --sets x --engine turbo").code, 2);
  EXPECT_EQ(run("verify --config " + file("bad.json", "{not json")).code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
