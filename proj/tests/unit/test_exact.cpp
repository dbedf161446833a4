#include <gtest/gtest.h>

#include <random>

#include "fixtures.h"
#include "oracle.h"
#include "pds/exact.h"

using namespace pds;

TEST(SolveExact, AllTruckOnlyIsTsp) {
  GeneratorConfig cfg;
  cfg.n = 9;
  cfg.truck_only_fraction = 1.0;
  const Instance inst = generate_instance(cfg, 4);
  const SolveOutcome out = solve_exact(inst);
  EXPECT_EQ(out.status, SolveStatus::optimal);
  std::vector<Vertex> all{1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_EQ(out.ub, held_karp(inst, all));
  EXPECT_EQ(out.lb, out.ub);
}

TEST(SolveExact, SpecDroneExample) {
  const SolveOutcome out = solve_exact(fixtures::abc());
  EXPECT_EQ(out.status, SolveStatus::optimal);
  EXPECT_EQ(out.ub, 14);
  ASSERT_TRUE(out.incumbent);
  EXPECT_EQ(evaluate(fixtures::abc(), *out.incumbent).makespan, 14);
}

TEST(SolveExact, MatchesOracle) {
  std::mt19937_64 rng(404);
  for (int c = 0; c < 40; ++c) {
    const Instance inst = oracle::random_instance(rng, 7, 3, 2);
    const SolveOutcome out = solve_exact(inst);
    ASSERT_EQ(out.status, SolveStatus::optimal);
    ASSERT_EQ(out.ub, oracle::optimum(inst)) << serialize_instance(inst);
    ASSERT_EQ(out.lb, out.ub);
    ASSERT_TRUE(out.incumbent);
    ASSERT_TRUE(check(inst, *out.incumbent).empty());
    ASSERT_EQ(evaluate(inst, *out.incumbent).makespan, out.ub);
  }
}

TEST(SolveExact, OutcomeInvariantsUnderTinyBudget) {
  GeneratorConfig cfg;
  cfg.n = 12;
  cfg.m = 3;
  cfg.s = 2;
  const Instance inst = generate_instance(cfg, 8);
  SolveBudget b;
  b.nodes = 5;
  b.heuristic_iterations = 0;
  const SolveOutcome out = solve_exact(inst, b);
  EXPECT_LE(out.lb, out.ub);
  ASSERT_TRUE(out.incumbent);
  EXPECT_EQ(evaluate(inst, *out.incumbent).makespan, out.ub);
  if (out.status == SolveStatus::optimal) EXPECT_EQ(out.lb, out.ub);
  else EXPECT_EQ(out.status, SolveStatus::budget_exhausted);
}

TEST(SolveExact, AboveCapFallsBackToHeuristic) {
  GeneratorConfig cfg;
  cfg.n = 20;
  const Instance inst = generate_instance(cfg, 2);
  SolveBudget b;
  b.heuristic_iterations = 50;
  const SolveOutcome out = solve_exact(inst, b);
  ASSERT_TRUE(out.incumbent);
  EXPECT_LE(out.lb, out.ub);
  EXPECT_EQ(out.lb, root_bound(inst, out.ub).lb);
  EXPECT_TRUE(out.status == SolveStatus::budget_exhausted || out.lb == out.ub);
}

TEST(RootBound, ForcedDroneCustomers) {
  // a truck-only customer far away makes drones serve the nearby ones
  const Instance inst = fixtures::make({{30, 0, 0, 0, {}}, {1, 0, 1, 1, {5}}, {0, 1, 1, 1, {9}}}, 1, 1);
  const BoundReport tight = root_bound(inst, 14);
  EXPECT_EQ(tight.truck_bound, 120);
  // with an upper bound of 14 every drone customer's truck round trip is
  // already cheaper, so nothing is forced
  const Instance far = fixtures::make({{0, 3, 0, 0, {}}, {30, 0, 1, 1, {5}}, {0, -30, 1, 1, {9}}}, 1, 1);
  const BoundReport r = root_bound(far, 30);
  EXPECT_EQ(r.drone_forced, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(r.forced_drone.work, 14);
  EXPECT_EQ(r.drone_bound, 14);
  EXPECT_EQ(r.lb, 14);
  EXPECT_GT(r.lb, 0);
}

TEST(Status, Names) {
  EXPECT_STREQ(to_string(SolveStatus::optimal), "optimal");
  EXPECT_STREQ(to_string(SolveStatus::budget_exhausted), "budget_exhausted");
}
