#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.h"
#include "pds/emit.h"
#include "pds/exact.h"

using namespace pds;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

int count_rows(const std::string& text, const std::string& prefix) {
  int c = 0;
  for (const auto& l : lines(text))
    if (l.rfind(" " + prefix, 0) == 0 && l.find(':') != std::string::npos) ++c;
  return c;
}

// Variable values a MILP solver would report for `sol`.
std::string assignment(const Instance& inst, const Solution& sol) {
  std::ostringstream out;
  const Timeline tl = evaluate(inst, sol);
  out << "alpha " << tl.makespan << "\n";
  for (std::size_t k = 0; k < sol.tours.size(); ++k) {
    out << "u_" << k + 1 << "_0 1\n";
    for (auto [i, j] : tour_arcs(sol.tours[k]).arcs) out << "w_" << k + 1 << "_" << i << "_" << j << " 1\n";
    for (Vertex j : sol.tours[k]) out << "u_" << k + 1 << "_" << j << " 1\n";
  }
  for (auto [j, g] : sol.missions) out << "z_" << j << "_" << g << " 1\nT_" << j << " " << tl.mission_completion.at(j) << "\n";
  for (auto [arc, v] : flow_arcs(sol)) out << "f_" << arc.first << "_" << arc.second << " " << v << "\ny_" << arc.first << "_" << arc.second << " 1\n";
  return out.str();
}

Instance mixed() {
  return fixtures::make({{1, 0, 0, 0, {}}, {0, 2, 1, 2, {9, 6}}, {3, 1, 1, 2, {14, 9}}, {-1, -1, 0, 0, {}}}, 2, 2, "mixed");
}

}  // namespace

TEST(Emit, SingleTruckOnlyCustomer) {
  const Instance inst = fixtures::make({{1, 0, 0, 0, {}}}, 1, 1, "one");
  const std::string lp = emit_milp(inst, {});
  EXPECT_NE(lp.find("obj: alpha"), std::string::npos);
  EXPECT_NE(lp.find(" w_1_0_1 w_1_1_0 "), std::string::npos);
  int w_vars = 0;
  for (const auto& l : lines(lp))
    if (l.rfind(" w_", 0) == 0 && l.find(':') == std::string::npos)
      for (std::istringstream ss(l); !ss.eof();) {
        std::string tok;
        ss >> tok;
        if (tok.rfind("w_", 0) == 0) ++w_vars;
      }
  EXPECT_EQ(w_vars, 2);
  EXPECT_EQ(count_rows(lp, "sec_"), 0);
  EXPECT_EQ(count_rows(lp, "va"), 0);
  // hand optimum t_01 + t_10 = 4, from the only truck tour
  const Solution sol = import_milp_solution("alpha 4\nw_1_0_1 1\nw_1_1_0 1\nu_1_0 1\nu_1_1 1\n", inst);
  EXPECT_EQ(sol.tours, (std::vector<Tour>{{1}}));
  EXPECT_EQ(evaluate(inst, sol).makespan, 4);
}

TEST(Emit, ByteStable) {
  const Instance inst = mixed();
  EmitterConfig cfg;
  cfg.sec_mode = SecMode::pairs_and_triples;
  EXPECT_EQ(emit_milp(inst, cfg), emit_milp(inst, cfg));
}

TEST(Emit, ValidInequalityIsOneRow) {
  const Instance inst = mixed();
  EmitterConfig on, off;
  off.include_va = false;
  const auto a = lines(emit_milp(inst, on));
  const auto b = lines(emit_milp(inst, off));
  ASSERT_EQ(a.size(), b.size() + 1);
  std::size_t i = 0;
  while (i < b.size() && a[i] == b[i]) ++i;
  EXPECT_EQ(a[i].rfind(" va:", 0), 0u) << a[i];
  EXPECT_TRUE(std::equal(b.begin() + static_cast<long>(i), b.end(), a.begin() + static_cast<long>(i) + 1));
  // 2 alpha >= 9 z_2_1 + 12 z_2_2 + 14 z_3_1 + 18 z_3_2
  EXPECT_EQ(a[i], " va: 2 alpha - 9 z_2_1 - 12 z_2_2 - 14 z_3_1 - 18 z_3_2 >= 0");
}

TEST(Emit, EveryConstraintFamilyPresent) {
  EmitterConfig cfg;
  cfg.sec_mode = SecMode::pairs_and_triples;
  const std::string lp = emit_milp(mixed(), cfg);
  for (const char* prefix : {"tour_", "cmpl_", "asg_", "truck_", "use_", "deg_", "bal_", "sec_", "flo_", "fhi_", "sync_", "dout",
                             "dflow_", "dcons_", "va"})
    EXPECT_GE(count_rows(lp, prefix), 1) << prefix;
  EXPECT_NE(lp.find("Binaries"), std::string::npos);
  EXPECT_NE(lp.find("Generals"), std::string::npos);
  EXPECT_NE(lp.find("lazy separation"), std::string::npos);
}

TEST(Emit, SecModes) {
  const Instance inst = mixed();
  EmitterConfig cfg;
  EXPECT_TRUE(emitted_sec_sets(inst, cfg).empty());
  cfg.sec_mode = SecMode::pairs_and_triples;
  EXPECT_EQ(emitted_sec_sets(inst, cfg).size(), 6u + 4u);
  cfg.sec_mode = SecMode::all_up_to;
  cfg.sec_max = 5;
  // every subset of size >= 2 of four customers
  EXPECT_EQ(emitted_sec_sets(inst, cfg).size(), 11u);
  const std::string lp = emit_milp(inst, cfg);
  EXPECT_NE(lp.find("no lazy separation needed"), std::string::npos);
  EXPECT_EQ(count_rows(lp, "sec_"), 2 * 11);
  EXPECT_NE(lp.find(" sec_2_3_1: w_1_2_3 + w_1_3_2 <= 1"), std::string::npos) << lp;
}

TEST(Emit, ConfigErrors) {
  const Instance inst = mixed();
  EmitterConfig cfg;
  cfg.sec_mode = SecMode::all_up_to;
  cfg.sec_max = 6;
  EXPECT_THROW(emit_milp(inst, cfg), InputError);
  cfg = {};
  cfg.big_m = default_big_m(inst) - 1;
  EXPECT_THROW(emit_milp(inst, cfg), InputError);
  EXPECT_EQ(default_big_m(inst), 9 + 14);
}

TEST(Import, SubtourNamed) {
  const Instance inst = fixtures::make({{1, 0, 0, 0, {}}, {2, 0, 0, 0, {}}, {3, 0, 0, 0, {}}}, 1, 1);
  try {
    import_milp_solution("w_1_0_1 1\nw_1_1_0 1\nw_1_2_3 1\nw_1_3_2 1\n", inst);
    FAIL() << "expected a subtour";
  } catch (const SubtourError& e) {
    EXPECT_EQ(e.set(), (std::vector<Vertex>{2, 3}));
    EXPECT_EQ(e.truck(), 1);
    EXPECT_NE(std::string(e.what()).find("{2,3}"), std::string::npos);
  }
}

TEST(Import, Errors) {
  const Instance inst = fixtures::make({{1, 0, 0, 0, {}}, {0, 2, 1, 1, {3}}}, 1, 1);
  EXPECT_THROW(import_milp_solution("w_1_0_1 0.5\n", inst), InputError);
  // customer 2 left uncovered
  EXPECT_THROW(import_milp_solution("w_1_0_1 1\nw_1_1_0 1\n", inst), InfeasibleSolution);
  // alpha below the plan's makespan
  EXPECT_THROW(import_milp_solution("alpha 3\nw_1_0_1 1\nw_1_1_0 1\nz_2_1 1\nf_0_2 1\nf_2_0 1\n", inst), InputError);
  EXPECT_NO_THROW(import_milp_solution("alpha 4\nw_1_0_1 1\nw_1_1_0 1\nz_2_1 1\nf_0_2 1\nf_2_0 1\n", inst));
}

TEST(Import, RoundTripsSolverSolutions) {
  std::mt19937_64 rng(61);
  for (int c = 0; c < 40; ++c) {
    GeneratorConfig cfg;
    cfg.n = 6;
    cfg.m = 1 + static_cast<int>(rng() % 3);
    cfg.s = 1 + static_cast<int>(rng() % 2);
    const Instance inst = generate_instance(cfg, rng());
    const SolveOutcome out = solve_exact(inst);
    const Solution back = import_milp_solution(assignment(inst, *out.incumbent), inst);
    ASSERT_TRUE(check(inst, back).empty());
    ASSERT_EQ(evaluate(inst, back).makespan, out.ub);
    ASSERT_EQ(back.missions, out.incumbent->missions);
  }
}
