#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pds/instance.h"
#include "pds/solution.h"
#include "pds/types.h"

namespace pds {

struct Mission {
  Vertex customer = 0;
  int k = 1;
  Minutes tau = 1;
};

// Missions with fixed group sizes, to be scheduled on m identical drones.
struct MissionSet {
  std::vector<Mission> missions;
  int m = 1;
};

// Missions implied by the drone part of a solution.
MissionSet mission_set(const Instance& inst, const Solution& sol);

// Lower bound from total drone work: m * makespan >= sum_j k_j * tau_j.
struct DroneBound {
  Minutes work = 0;       // sum of k_j * tau_j
  int m = 1;
  Minutes work_share = 0; // ceil(work / m)
  Minutes max_tau = 0;    // the longest single mission
  Minutes bound = 0;      // max(work_share, max_tau)
};

DroneBound drone_lb(const MissionSet& ms);

struct DronePlan {
  std::vector<std::vector<Vertex>> drones;  // one sequence per drone, size m
  Minutes makespan = 0;
};

// List scheduling: missions by decreasing k*tau (ties: larger tau, then lower
// customer id), each sent to its k earliest-free drones (ties: lower drone
// index). Throws InputError when a mission needs more than m drones.
DronePlan schedule_greedy(const MissionSet& ms);

struct ScheduleLimits {
  std::uint64_t node_budget = 2'000'000;
  int max_missions = 14;
};

struct ExactSchedule {
  DronePlan plan;
  bool proven = false;       // plan.makespan is optimal
  Minutes lower_bound = 0;   // proven bound on the optimum
  std::uint64_t nodes = 0;
};

// Optimal drone schedule by branch-and-bound over dispatch orders. States
// are (remaining missions, multiset of drone availabilities) with the
// multiset shifted to start at zero, so equivalent states are explored once.
//
// With a finite cutoff the search only looks for schedules strictly below
// it; when none exists the result carries lower_bound >= cutoff, a feasible
// (greedy) plan and proven = false unless that plan happens to be optimal.
// On budget exhaustion the best plan seen is returned with proven = false.
// Throws LimitError above limits.max_missions.
ExactSchedule schedule_exact(const MissionSet& ms, const ScheduleLimits& limits = {},
                             Minutes cutoff = kInfinity);

// Copies a drone plan into a solution (missions must already be set).
void apply_plan(Solution& sol, const DronePlan& plan);

}  // namespace pds
