#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pds/instance.h"
#include "pds/scheduler.h"
#include "pds/solution.h"
#include "pds/types.h"

namespace pds {

// Optimal closed tour through the depot and `subset`. |subset| <= 18.
Minutes held_karp(const Instance& inst, const std::vector<Vertex>& subset);

// Same, returning the visiting order.
std::pair<Tour, Minutes> held_karp_tour(const Instance& inst, const std::vector<Vertex>& subset);

struct TourPartition {
  std::vector<Tour> tours;  // non-empty tours only
  Minutes makespan = 0;     // longest tour
};

// Splits `subset` into at most s tours minimizing the longest one.
// |subset| <= 14 when s >= 2, <= 18 when s == 1.
TourPartition minmax_tours(const Instance& inst, const std::vector<Vertex>& subset, int s);

// Held-Karp values and min-max partition values for every subset of a fixed
// customer list (bit b of a mask is customers[b]). Built once per solve.
class TourTable {
 public:
  static constexpr int kMaxCustomers = 16;

  TourTable(const Instance& inst, std::vector<Vertex> customers, int s);

  // Longest tour of the best split of `mask` over at most s trucks.
  Minutes minmax(std::uint32_t mask) const { return minmax_.back()[mask]; }
  Minutes single(std::uint32_t mask) const { return single_[mask]; }
  std::vector<Tour> tours(std::uint32_t mask) const;

  const std::vector<Vertex>& customers() const { return customers_; }
  std::uint32_t bit(Vertex j) const;

 private:
  Tour order(std::uint32_t mask) const;

  const Instance* inst_;
  std::vector<Vertex> customers_;
  std::vector<Minutes> single_;
  std::vector<std::vector<Minutes>> minmax_;  // minmax_[t-1]: at most t trucks
  std::vector<std::vector<Minutes>> path_;    // path_[mask * c + last]
};

// Directed arcs used by truck `truck` in an integer solution.
struct ArcSet {
  int truck = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs;
};

// Vertex sets of the cycles that avoid the depot, in order of their smallest
// vertex. Throws InputError unless every vertex has in-degree == out-degree
// <= 1 and arcs are distinct.
std::vector<std::vector<Vertex>> separate_subtours(const ArcSet& arcs);

// Arcs of one truck tour, depot at both ends.
ArcSet tour_arcs(const Tour& tour, int truck = 0);

enum class SolveStatus { optimal, feasible, infeasible, budget_exhausted };

const char* to_string(SolveStatus status);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t schedule_nodes = 0;
  std::int64_t time_ms = 0;
  std::int64_t time_best_ms = 0;  // when the final incumbent was found
  std::uint64_t prunes_by_va = 0;
  std::uint64_t prunes_by_incumbent = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::feasible;
  Minutes lb = 0;
  Minutes ub = kInfinity;
  std::optional<Solution> incumbent;
  SolveStats stats;
};

struct SolveBudget {
  std::uint64_t nodes = 50'000'000;
  std::int64_t time_ms = 0;  // 0 = unlimited
  // Instances above this size are not searched; the heuristic result is
  // returned with the root bound.
  int max_customers = TourTable::kMaxCustomers;
  ScheduleLimits schedule;
  // Seeds the incumbent; 0 iterations means construction only.
  int heuristic_iterations = 500;
  std::uint64_t seed = 1;
};

// Lower bounds available before branching.
struct BoundReport {
  Minutes truck_bound = 0;            // min-max tours over truck-only customers
  std::vector<Vertex> drone_forced;   // customers a truck cannot serve below ub
  DroneBound forced_drone;            // valid-inequality bound over drone_forced
  Minutes drone_bound = 0;            // min(ub, forced_drone.bound)
  Minutes lb = 0;                     // max of the above
};

// Root bounds given an upper bound `ub` (use kInfinity when none is known).
BoundReport root_bound(const Instance& inst, Minutes ub);

// Exact branch-and-bound over the per-customer choice {truck} or {k drones}.
SolveOutcome solve_exact(const Instance& inst, const SolveBudget& budget = {});

}  // namespace pds
