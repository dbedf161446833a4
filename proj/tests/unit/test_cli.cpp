#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fixtures.h"
#include "pds/cli.h"
#include "pds/io.h"
#include "pds/scheduler.h"

using namespace pds;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("pds_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  fs::path dir;
};

}  // namespace

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"solve"}).code, cli::kUsage);
  EXPECT_EQ(run({"solve", path("missing.json")}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(Cli, GenSolveCheck) {
  ASSERT_EQ(run({"gen", "--n", "7", "--m", "2", "--s", "2", "--seed", "3", "--out", path("i.json")}).code, 0);
  const Instance inst = load_instance(path("i.json"));
  EXPECT_EQ(inst.n(), 7);
  const Outcome solved = run({"solve", path("i.json"), "--solution", path("s.json"), "--out", path("r.json")});
  ASSERT_EQ(solved.code, 0) << solved.err;
  const auto result = nlohmann::json::parse(read_file(path("r.json")));
  EXPECT_EQ(result["status"], "optimal");
  const Solution sol = parse_solution(read_file(path("s.json")));
  const Outcome checked = run({"check", path("i.json"), path("s.json"), "--timeline", path("t.json")});
  EXPECT_EQ(checked.code, 0);
  EXPECT_EQ(checked.out, "feasible, makespan=" + std::to_string(result["ub"].get<Minutes>()) + "\n");
  EXPECT_EQ(parse_timeline(read_file(path("t.json"))), evaluate(inst, sol));
}

TEST_F(Cli, CheckReportsViolations) {
  save_instance(fixtures::abc(), path("abc.json"));
  write_file(path("bad.json"), R"({"tours":[[1]],"missions":{},"drones":[]})");
  const Outcome r = run({"check", path("abc.json"), path("bad.json")});
  EXPECT_EQ(r.code, cli::kInfeasible);
  EXPECT_NE(r.out.find("coverage"), std::string::npos);
}

TEST_F(Cli, BoundOfSolution) {
  save_instance(fixtures::abc(), path("abc.json"));
  write_file(path("s.json"), serialize_solution(Solution{{}, {{1, 2}, {2, 1}, {3, 1}}, {{1}, {1}, {2, 3}}}));
  const Outcome r = run({"bound", path("abc.json"), "--solution", path("s.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  // 2*10 + 6 + 8 = 34 over three drones
  EXPECT_EQ(j["sum_k_tau"], 34);
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["ceil_share"], 12);
  EXPECT_EQ(j["max_tau"], 10);
  EXPECT_EQ(j["bound"], 12);
}

TEST_F(Cli, BoundOfGeneratedInstance) {
  ASSERT_EQ(run({"gen", "--n", "9", "--m", "3", "--seed", "5", "--out", path("i.json")}).code, 0);
  const Outcome r = run({"bound", path("i.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const Minutes work = j["sum_k_tau"];
  EXPECT_EQ(j["ceil_share"].get<Minutes>(), (work + 2) / 3);
  EXPECT_LE(j["bound"].get<Minutes>(), j["ub"].get<Minutes>());
}

TEST_F(Cli, EmitAndImport) {
  save_instance(fixtures::make({{1, 0, 0, 0, {}}, {2, 0, 0, 0, {}}, {3, 0, 0, 0, {}}}, 1, 1), path("i.json"));
  const Outcome e = run({"emit", path("i.json"), "--sec", "upto", "--sec-max", "3", "--out", path("m.lp")});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NE(read_file(path("m.lp")).find("sec_1_2_3_1"), std::string::npos);
  write_file(path("sub.txt"), "w_1_0_1 1\nw_1_1_0 1\nw_1_2_3 1\nw_1_3_2 1\n");
  const Outcome bad = run({"import", path("i.json"), path("sub.txt")});
  EXPECT_EQ(bad.code, cli::kInfeasible);
  EXPECT_NE(bad.err.find("{2,3}"), std::string::npos);
  write_file(path("ok.txt"), "w_1_0_1 1\nw_1_1_2 1\nw_1_2_3 1\nw_1_3_0 1\n");
  const Outcome good = run({"import", path("i.json"), path("ok.txt"), "--out", path("s.json")});
  ASSERT_EQ(good.code, 0) << good.err;
  EXPECT_EQ(parse_solution(read_file(path("s.json"))).tours, (std::vector<Tour>{{1, 2, 3}}));
}

TEST_F(Cli, BenchIsReproducible) {
  fs::create_directories(dir / "set");
  for (int i = 0; i < 4; ++i)
    ASSERT_EQ(run({"gen", "--n", std::to_string(4 + i), "--seed", std::to_string(i), "--out", path("set/i" + std::to_string(i) + ".json")}).code, 0);
  const Outcome a = run({"bench", path("set"), "--s", "2", "--no-timing"});
  const Outcome b = run({"bench", path("set"), "--s", "2", "--no-timing"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto rows = parse_csv(a.out);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.s, 2);
    EXPECT_EQ(r.status, "optimal");
    EXPECT_EQ(r.lb, r.ub);
  }
  const Outcome t = run({"bench", path("set"), "--format", "table", "--solver", "heuristic", "--iters", "20"});
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(t.out.rfind("instance,bounds,sec_tot,sec_bst\n", 0), 0u);
}

TEST_F(Cli, SolveBudgetExhaustedExitCode) {
  ASSERT_EQ(run({"gen", "--n", "14", "--m", "3", "--s", "2", "--seed", "2", "--out", path("i.json")}).code, 0);
  const Outcome r = run({"solve", path("i.json"), "--nodes", "1", "--iters", "0", "--format", "csv"});
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, "budget_exhausted");
  EXPECT_LT(*rows[0].lb, *rows[0].ub);
  EXPECT_EQ(r.code, cli::kLimit);
}
