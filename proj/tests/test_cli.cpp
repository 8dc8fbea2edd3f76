#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SPINLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST(Cli, VerifyIsDeterministic) {
  auto a = run("verify --suites lem:spin-center2,eq:CentralChar --n 3..4 --seed 7");
  auto b = run("verify --suites lem:spin-center2,eq:CentralChar --n 3..4 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = json::parse(a.out);
  EXPECT_EQ(j["tool"], "spinlab");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["suites"].size(), 4u);
  for (auto& rec : j["suites"]) EXPECT_FALSE(rec.contains("wall_ms"));
}

TEST(Cli, TimingAddsWallClock) {
  auto r = run("verify --suites eq:CentralChar --n 3 --timing");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["suites"][0].contains("wall_ms"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("verify --suites no-such-suite").code, 2);
  EXPECT_EQ(run("verify --n 2..4").code, 2);
  EXPECT_EQ(run("verify --n 9").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("table conj --n 3 --g '{not json' --h '{}'").code, 2);
  EXPECT_EQ(run("table ht-weights --n 3 --eps + --lambda '[0,1,2,0]'").code, 2);
}

TEST(Cli, ListCoversRegistry) {
  auto r = run("verify --list");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j.size(), 44u);
}

TEST(Cli, Tables) {
  auto c = run("table center --group spin --n 3");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(json::parse(c.out)["structure"], "Z/4");
  auto c6 = run("center --group spin --n 6");
  ASSERT_EQ(c6.code, 0);
  EXPECT_EQ(json::parse(c6.out)["structure"], "(Z/2)^2");
  auto h = run("table ht-weights --n 3 --eps + --lambda '[0,0,0,0]'");
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(json::parse(h.out)["weights"], json({0, 1, 2, 3}));
  auto h1 = run("table h1 --group gspin --n 5");
  ASSERT_EQ(h1.code, 0);
  EXPECT_EQ(json::parse(h1.out)["structure"], "Z/2");
  auto r = run("table roots --n 4");
  ASSERT_EQ(r.code, 0);
}

TEST(Cli, ConjOnElements) {
  std::string g = R"('{"kind":"even","n":3,"terms":[{"indices":[],"coeff":"2"},{"indices":[1,4],"coeff":"1"}]}')";
  auto r = run("table conj --n 3 --g " + g + " --h " + g);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["inner"], true);
  // x β(x) not scalar: not in GPin
  std::string bad = R"('{"kind":"even","n":3,"terms":[{"indices":[1,4],"coeff":"1"},{"indices":[2,5],"coeff":"1"}]}')";
  EXPECT_EQ(run("table conj --n 3 --g " + bad + " --h " + g).code, 2);
}
