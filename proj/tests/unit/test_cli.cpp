#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and captures stdout.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + LIEINV_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture() { return std::string(LIEINV_DATA_DIR) + "/f4_centralizer.json"; }

std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / ("lieinv_cli_" + name); }

}  // namespace

TEST(Cli, BuildCommands) {
  auto f4 = run("build --type F --rank 4");
  ASSERT_EQ(f4.code, 0);
  EXPECT_EQ(nlohmann::json::parse(f4.out)["dim"], 52);
  EXPECT_EQ(nlohmann::json::parse(f4.out)["labels"].size(), 52u);
  EXPECT_EQ(run("build --type Z --rank 9").code, 2);
  EXPECT_EQ(run("build --type A").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, IndexOfSl2) {
  const auto path = tmp("sl2.json");
  ASSERT_EQ(run("build --type A --rank 1 --out " + path.string()).code, 0);
  auto r = run("index --algebra " + path.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["results"]["index"], 1);
  EXPECT_EQ(run("index --algebra /nonexistent.json").code, 2);
}

TEST(Cli, VerifyFixture) {
  auto r = run("verify-fixture --file " + fixture());
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["seed"], 20240917);

  auto flipped = nlohmann::json::parse(std::ifstream(fixture()));
  for (auto& b : flipped["brackets"]) {
    if (b["i"] == 1 && b["j"] == 2) b["terms"][0]["c"] = "-2";
  }
  const auto bad = tmp("flipped.json");
  std::ofstream(bad) << flipped.dump();
  auto rb = run("verify-fixture --file " + bad.string());
  EXPECT_EQ(rb.code, 1);
  auto jb = nlohmann::json::parse(rb.out);
  EXPECT_FALSE(jb["checks"][0]["pass"].get<bool>());
  EXPECT_EQ(jb["checks"][0]["name"], "jacobi");

  auto nograd = nlohmann::json::parse(std::ifstream(fixture()));
  nograd.erase("grading");
  const auto ng = tmp("nograd.json");
  std::ofstream(ng) << nograd.dump();
  auto rn = run("verify-fixture --file " + ng.string());
  EXPECT_EQ(rn.code, 0);
  EXPECT_EQ(nlohmann::json::parse(rn.out)["warnings"].size(), 1u);
}

TEST(Cli, InvariantCheck) {
  auto j = nlohmann::json::parse(std::ifstream(fixture()));
  const std::string p = j["fixture"]["invariant_p"];
  EXPECT_EQ(run("invariant-check --algebra " + fixture() + " --poly '" + p + "'").code, 0);
  EXPECT_EQ(run("invariant-check --algebra " + fixture() + " --poly x16").code, 1);
  EXPECT_EQ(run("invariant-check --algebra " + fixture() + " --poly 'x17'").code, 2);
}

TEST(Cli, DeltaOnFixtureTorus) {
  auto r = run("delta --algebra " + fixture() + " --torus 16");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out)["results"];
  for (const auto& e : j["delta"]["entries"]) {
    const std::string w = e["weight"][0];
    if (w == "1" || w == "-1") {
      EXPECT_EQ(e["delta"], "0");
    }
  }
  EXPECT_TRUE(j["c3cn2"]["conclusions"]["generic_stabilizer_nilpotent"].get<bool>());
  EXPECT_EQ(run("delta --algebra " + fixture() + " --torus 17").code, 2);
}

TEST(Cli, G0AndWeights) {
  auto r = run("g0 --algebra " + fixture() + " --u 1,3-14");
  ASSERT_EQ(r.code, 0);
  auto w = run("weights --algebra " + fixture() + " --torus 16");
  ASSERT_EQ(w.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(w.out)["results"]["weights"]["symmetric"].get<bool>());
}

TEST(Cli, VerifyF4Deterministic) {
  auto a = run("verify-f4 --seed 11");
  auto b = run("verify-f4", "LIEINV_SEED=11");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run("verify-f4 --seed 12");
  ASSERT_EQ(c.code, 0);
  auto ja = nlohmann::json::parse(a.out), jc = nlohmann::json::parse(c.out);
  EXPECT_EQ(ja["checks"].size(), jc["checks"].size());
  EXPECT_NE(ja["results"]["stabilizers"][0]["point"], jc["results"]["stabilizers"][0]["point"]);
  EXPECT_EQ(run("verify-f4", "LIEINV_SEED=abc").code, 2);
}
