// Runs the btg binary and checks exit codes and output shape.

#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun btg(const std::string& args) {
  std::string cmd = std::string(BTG_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("btg_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

}  // namespace

TEST(Cli, ClassifyHoleParameter) {
  CliRun r = btg("classify --a 3/10 --b 5/10 --c 2/10");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "FiniteType");
  EXPECT_EQ(j["steps"], 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(btg("classify").code, 2);
  EXPECT_EQ(btg("classify --alpha 1/5 --beta 7/10").code, 2);
  EXPECT_EQ(btg("classify --alpha x --beta 1/2").code, 2);
  EXPECT_EQ(btg("nosuchcommand").code, 2);
  EXPECT_EQ(btg("gasket render --size 4 --out /dev/null").code, 2);
  EXPECT_EQ(btg("lyapunov --policy weighted:2,0.5").code, 2);
}

TEST(Cli, IoErrorsExitThree) {
  EXPECT_EQ(btg("gasket render --depth 2 --size 32 --out /nonexistent/dir/x.ppm").code, 3);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(btg("--help").code, 0); }

TEST(Cli, GaussAgrees) {
  CliRun r = btg("gauss --alpha 9/10 --beta 1/2");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["gauss_step"], json::array({"5/9", "4/9"}));
  EXPECT_TRUE(j["equal"].get<bool>());
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(btg("verify partition").code, 0);
  EXPECT_EQ(btg("verify table1").code, 1);
  EXPECT_EQ(btg("verify nonsense").code, 2);
}

TEST(Cli, ConfigFile) {
  fs::path cfg = scratch("run.ini");
  std::ofstream(cfg) << "seed = 5\n";
  CliRun a = btg("--config " + cfg.string() + " lyapunov --steps 2000 --trials 2");
  CliRun b = btg("--seed 5 lyapunov --steps 2000 --trials 2");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RenderIsDeterministic) {
  fs::path x = scratch("a.ppm"), y = scratch("b.ppm");
  ASSERT_EQ(btg("--threads 1 gasket render --depth 8 --size 128 --out " + x.string()).code, 0);
  ASSERT_EQ(btg("--threads 2 gasket render --depth 8 --size 128 --mode carve --out " + y.string()).code, 0);
  EXPECT_EQ(slurp(x), slurp(y));
  EXPECT_EQ(slurp(x).substr(0, 2), "P6");
}

TEST(Cli, SampleCsv) {
  fs::path x = scratch("pts.csv");
  ASSERT_EQ(btg("gasket sample --depth 4 --per-cylinder 2 --chart alphabeta --out " + x.string()).code, 0);
  std::string s = slurp(x);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 33);
}

TEST(Cli, AffinityCsv) {
  CliRun r = btg("dimension affinity --depth 9 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')).find("depth"), 0u);
}
