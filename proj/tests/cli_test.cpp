#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "triff/triff_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("triff_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string &name) const { return dir_ / name; }

  Result run(const std::string &args) const {
    const auto out = path("stdout"), err = path("stderr");
    const std::string cmd = std::string(TRIFF_BIN) + " " + args + " >" +
                            out.string() + " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    Result r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  void write(const std::string &name, const std::string &text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  fs::path dir_;
};

} // namespace

TEST_F(Cli, ConstructThenVerify) {
  const auto file = path("c.triff").string();
  ASSERT_EQ(run("construct one-bounded --n 5 -o " + file).status, 0);
  const auto r = run("verify " + file);
  EXPECT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["status"], "trifferent");
  EXPECT_EQ(j["size"], 10);
  EXPECT_EQ(j["config"]["command"], "verify");
}

TEST_F(Cli, VerifyReportsWitness) {
  write("bad.triff", "n=2\n00\n01\n10\n");
  const auto r = run("verify " + path("bad.triff").string());
  EXPECT_EQ(r.status, 1);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["status"], "not_trifferent");
  EXPECT_EQ(j["witness"]["codewords"], json({"00", "01", "10"}));
  EXPECT_NE(r.err.find("00 01 10"), std::string::npos);
}

TEST_F(Cli, MalformedInputIsUsageError) {
  write("bad.triff", "n=2\n00\n0x\n");
  const auto r = run("verify " + path("bad.triff").string());
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run("verify " + path("missing.triff").string()).status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
  EXPECT_EQ(run("construct one-bounded").status, 2);
}

TEST_F(Cli, ConstructOutputsRoundTrip) {
  const std::string cmds[] = {
      "construct one-bounded --n 7",
      "construct triple --q 3",
      "construct triple --q 2 --sigma random --seed 5",
      "construct recursive --t 2 --target 12",
  };
  int i = 0;
  for (const auto &cmd : cmds) {
    const auto file = path("c" + std::to_string(i++) + ".triff");
    ASSERT_EQ(run(cmd + " -o " + file.string()).status, 0) << cmd;
    const auto text = slurp(file);
    const auto parsed = triff::parse_triff(text);
    EXPECT_EQ(triff::format_triff(parsed), text) << cmd;
    EXPECT_EQ(run("verify " + file.string()).status, 0) << cmd;
    // Same inputs, same bytes.
    ASSERT_EQ(run(cmd + " -o " + file.string()).status, 0);
    EXPECT_EQ(slurp(file), text) << cmd;
  }
}

TEST_F(Cli, SearchWithOracleAndTable) {
  const auto table = path("results.json").string();
  const auto r = run("search max-r --n 3 --r 1 --oracle --table " + table);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["best_size"], 6);
  EXPECT_EQ(j["oracle_value"], 6);
  EXPECT_EQ(j["status"], "optimal");
  ASSERT_EQ(run("search max --n 2 --table " + table).status, 0);
  const auto t = json::parse(slurp(table));
  EXPECT_EQ(t["Tb"][0]["value"], 6);
  EXPECT_EQ(t["T"][0]["value"], 4);

  const auto rep = run("bound report --n 3 --exact-table " + table);
  ASSERT_EQ(rep.status, 0) << rep.err;
  const auto k = json::parse(rep.out);
  EXPECT_EQ(k["n"], 3);
  EXPECT_FALSE(k["crossover_N0"].is_null());
}

TEST_F(Cli, SearchIsDeterministic) {
  const auto a = run("search max --n 3");
  const auto b = run("search max --n 3");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, BoundCommands) {
  auto r = run("bound report --n 10");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["best"], "kurz");
  r = run("bound zarankiewicz --u 4 --v 4 --s 1 --t 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["zarankiewicz_bound"], 4.0);
  r = run("bound transfer --n 4 --r 0 --tb 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["transfer_bound"], 10.125);
  r = run("bound deficit --r 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_NEAR(json::parse(r.out)["deficit_upper"].get<double>(), 1.5, 1e-12);
  EXPECT_EQ(run("bound zarankiewicz --u 1 --v 4 --s 3 --t 2").status, 2);
}

TEST_F(Cli, GraphAndProjection) {
  const auto triple = path("t.triff").string();
  const auto proj = path("p.triff").string();
  ASSERT_EQ(run("construct triple --q 2 -o " + triple).status, 0);
  auto r = run("graph build " + triple);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["kind"], "bipartite");
  ASSERT_EQ(run("project " + triple + " -o " + proj).status, 0);
  r = run("graph kst-check " + proj + " --s 3 --t 9");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["kst"]["free"].get<bool>());
  r = run("graph kst-check " + proj + " --s 1 --t 1");
  EXPECT_EQ(r.status, 1);
  r = run("graph bipartition " + proj + " --seed 3 --trials 100 --exhaustive");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["applicable"].get<bool>());
  EXPECT_EQ(run("project " + triple + " --coordinate 0").status, 2);
}

TEST_F(Cli, ShiftsAndPruning) {
  const auto file = path("c.triff").string();
  ASSERT_EQ(run("construct one-bounded --n 4 -o " + file).status, 0);
  auto r = run("sample-shift " + file + " --r 1 --exhaustive");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["identity_holds"].get<bool>());
  r = run("sample-shift " + file + " --r 1 --trials 1000 --seed 9");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, run("sample-shift " + file + " --r 1 --trials 1000 --seed 9").out);
  r = run("prune " + file);
  ASSERT_EQ(r.status, 0);
  EXPECT_LE(json::parse(r.out)["final"].size(), 2u);
  write("square.triff", "n=2\n00\n01\n02\n10\n11\n12\n20\n21\n22\n");
  EXPECT_EQ(run("prune " + path("square.triff").string()).status, 1);
}
