#pragma once

#include <cstdint>
#include <vector>

#include "pds/instance.h"
#include "pds/solution.h"

namespace pds {

// Greedy construction. Truck-only customers go first, farthest from the
// depot first, each at the tour position that keeps the longest tour
// shortest. Drone-eligible customers follow in the same order and take
// whichever of {best truck insertion, best k-drone mission} raises the
// makespan least, ties broken by the smaller increase in total work.
Solution construct(const Instance& inst);

// Ruin & recreate local search. This scheme is not taken from any published
// algorithm; its only contract is feasibility and non-degradation.
//
// Each iteration removes ceil(ruin_fraction * n) customers, half picked from
// the resource that sets the makespan (the longest tour, or the drone missions
// with the most work) and the rest at random, then reinserts them one by one
// at their best truck position or drone group size and runs 2-opt on every
// tour. Drone missions are rescheduled with the exact scheduler while there
// are at most 8 of them and with list scheduling beyond that.
//
// A candidate replaces the current solution when its makespan is lower, or
// equal with total work (tour time plus drone work) at most
// (1 + sideways_tolerance) times the current one.
struct SearchConfig {
  int iterations = 1000;
  double ruin_fraction = 0.3;
  std::uint64_t seed = 1;
  std::int64_t time_limit_ms = 0;  // 0 = no limit
  double sideways_tolerance = 0.05;
};

void validate(const SearchConfig& cfg);

struct SearchTrace {
  std::vector<Minutes> current;  // makespan of the current solution after each iteration
  std::vector<Minutes> best;
  std::size_t accepted = 0;
};

Solution ruin_recreate(const Instance& inst, const Solution& init, const SearchConfig& cfg,
                       SearchTrace* trace = nullptr);

// construct() followed by ruin_recreate().
Solution heuristic_solve(const Instance& inst, const SearchConfig& cfg);

}  // namespace pds
