#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.h"
#include "oracle.h"
#include "pds/scheduler.h"

using namespace pds;

namespace {

MissionSet random_set(std::mt19937_64& rng, int max_missions, int max_m) {
  MissionSet ms;
  ms.m = std::uniform_int_distribution<int>(1, max_m)(rng);
  const int count = std::uniform_int_distribution<int>(0, max_missions)(rng);
  for (int i = 0; i < count; ++i)
    ms.missions.push_back({i + 1, std::uniform_int_distribution<int>(1, ms.m)(rng),
                           std::uniform_int_distribution<Minutes>(1, 30)(rng)});
  return ms;
}

Minutes brute(const MissionSet& ms) {
  std::vector<oracle::DroneJob> jobs;
  for (const auto& mi : ms.missions) jobs.push_back({{{mi.k, mi.tau}}});
  return oracle::DroneScheduler(jobs, ms.m).optimum();
}

// Runs the plan through the checker and evaluator on a matching instance.
Minutes replayed(const MissionSet& ms, const DronePlan& plan) {
  if (ms.missions.empty()) return plan.makespan;
  std::vector<fixtures::Cust> cs;
  Solution sol;
  for (const auto& mi : ms.missions) {
    cs.push_back({1.0 + mi.customer, 0, mi.k, mi.k, {mi.tau}});
    sol.missions[static_cast<Vertex>(cs.size())] = mi.k;
  }
  const Instance inst = fixtures::make(cs, ms.m, 1);
  apply_plan(sol, plan);
  EXPECT_TRUE(check(inst, sol).empty());
  return evaluate(inst, sol).makespan;
}

}  // namespace

TEST(DroneLb, Examples) {
  EXPECT_EQ(drone_lb({{}, 3}).bound, 0);
  const DroneBound b = drone_lb({{{1, 2, 10}, {2, 1, 6}}, 3});
  EXPECT_EQ(b.work, 26);
  EXPECT_EQ(b.work_share, 9);
  EXPECT_EQ(b.max_tau, 10);
  EXPECT_EQ(b.bound, 10);
  EXPECT_EQ(drone_lb({{{1, 1, 5}}, 1}).bound, 5);
}

TEST(Greedy, Examples) {
  EXPECT_EQ(schedule_greedy({{{1, 2, 10}, {2, 1, 6}, {3, 1, 8}}, 3}).makespan, 14);
  EXPECT_EQ(schedule_greedy({{}, 3}).makespan, 0);
  EXPECT_EQ(schedule_greedy({{{1, 3, 7}}, 3}).makespan, 7);
  EXPECT_THROW(schedule_greedy({{{1, 4, 7}}, 3}), InputError);
}

TEST(Greedy, LowestDroneIdOnTies) {
  const DronePlan plan = schedule_greedy({{{1, 1, 5}}, 3});
  ASSERT_EQ(plan.drones.size(), 3u);
  EXPECT_EQ(plan.drones[0], std::vector<Vertex>{1});
  EXPECT_TRUE(plan.drones[1].empty());
}

TEST(Exact, Examples) {
  const auto r = schedule_exact({{{1, 2, 10}, {2, 1, 6}, {3, 1, 8}}, 3});
  EXPECT_EQ(r.plan.makespan, 14);
  EXPECT_TRUE(r.proven);
  for (Minutes tau : {1, 9, 40}) {
    const auto one = schedule_exact({{{4, 2, tau}}, 2});
    EXPECT_EQ(one.plan.makespan, tau);
    EXPECT_TRUE(one.proven);
  }
  EXPECT_THROW(schedule_exact({{{1, 3, 7}}, 2}), InputError);
  MissionSet big{{}, 2};
  for (int i = 0; i < 15; ++i) big.missions.push_back({i + 1, 1, 5});
  EXPECT_THROW(schedule_exact(big), LimitError);
}

TEST(Exact, GreedyIsNotAlwaysOptimal) {
  // greedy runs B(2x6) first, then the two 1x5 jobs, leaving A for last
  const MissionSet ms{{{1, 1, 7}, {2, 2, 6}, {3, 1, 5}, {4, 1, 5}}, 2};
  EXPECT_EQ(brute(ms), schedule_exact(ms).plan.makespan);
  EXPECT_LE(schedule_exact(ms).plan.makespan, schedule_greedy(ms).makespan);
}

TEST(Exact, MatchesOracleSixMissionsTwoDrones) {
  std::mt19937_64 rng(6);
  for (int c = 0; c < 50; ++c) {
    MissionSet ms{{}, 2};
    for (int i = 0; i < 6; ++i)
      ms.missions.push_back({i + 1, std::uniform_int_distribution<int>(1, 2)(rng),
                             std::uniform_int_distribution<Minutes>(1, 20)(rng)});
    const auto r = schedule_exact(ms);
    ASSERT_TRUE(r.proven);
    ASSERT_EQ(r.plan.makespan, brute(ms)) << c;
    ASSERT_EQ(replayed(ms, r.plan), r.plan.makespan);
  }
}

TEST(Exact, BoundsAndPermutationInvariance) {
  std::mt19937_64 rng(77);
  for (int c = 0; c < 1000; ++c) {
    MissionSet ms = random_set(rng, 8, 4);
    const auto lb = drone_lb(ms).bound;
    const auto ex = schedule_exact(ms);
    const auto gr = schedule_greedy(ms);
    ASSERT_TRUE(ex.proven);
    ASSERT_LE(lb, ex.plan.makespan);
    ASSERT_LE(ex.plan.makespan, gr.makespan);
    ASSERT_EQ(replayed(ms, ex.plan), ex.plan.makespan);
    ASSERT_EQ(replayed(ms, gr), gr.makespan);
    MissionSet shuffled = ms;
    std::shuffle(shuffled.missions.begin(), shuffled.missions.end(), rng);
    ASSERT_EQ(schedule_exact(shuffled).plan.makespan, ex.plan.makespan);
    MissionSet doubled = ms;
    doubled.m *= 2;
    ASSERT_LE(schedule_exact(doubled).plan.makespan, ex.plan.makespan);
  }
}

TEST(Exact, CutoffSemantics) {
  const MissionSet ms{{{1, 2, 10}, {2, 1, 6}, {3, 1, 8}}, 3};
  const auto above = schedule_exact(ms, {}, 20);
  EXPECT_EQ(above.plan.makespan, 14);
  const auto at = schedule_exact(ms, {}, 14);
  EXPECT_GE(at.lower_bound, 14);
  EXPECT_GE(at.plan.makespan, 14);
}

TEST(Exact, BudgetExhaustion) {
  std::mt19937_64 rng(5);
  MissionSet ms{{}, 4};
  for (int i = 0; i < 14; ++i)
    ms.missions.push_back({i + 1, std::uniform_int_distribution<int>(1, 4)(rng),
                           std::uniform_int_distribution<Minutes>(5, 60)(rng)});
  const auto r = schedule_exact(ms, {.node_budget = 10, .max_missions = 14});
  EXPECT_LE(r.plan.makespan, schedule_greedy(ms).makespan);
  EXPECT_LE(r.lower_bound, r.plan.makespan);
  if (!r.proven) EXPECT_LE(r.nodes, 1000u);
}

TEST(MissionSet, FromSolution) {
  const Instance inst = fixtures::abc();
  const Solution sol{{}, {{1, 2}, {2, 1}, {3, 1}}, {{1}, {1}, {2, 3}}};
  const MissionSet ms = mission_set(inst, sol);
  EXPECT_EQ(ms.m, 3);
  ASSERT_EQ(ms.missions.size(), 3u);
  EXPECT_EQ(drone_lb(ms).work, 34);
}
