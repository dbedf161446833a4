#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pds/instance.h"
#include "pds/types.h"

namespace pds {

using Tour = std::vector<Vertex>;

// A complete plan: truck tours (depot implicit at both ends), the group size
// chosen for every drone-served customer, and the ordered missions flown by
// each drone.
//
// Drones fly back-and-forth trips only: every mission starts and ends at the
// depot. A drone sequence orders missions in time; it does not describe
// customer-to-customer flights. Consecutive entries (i, j) in one drone's
// sequence are one unit of the mission-precedence flow on arc (i, j).
struct Solution {
  std::vector<Tour> tours;
  std::map<Vertex, int> missions;
  std::vector<std::vector<Vertex>> drones;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct Timeline {
  std::map<Vertex, Minutes> mission_completion;
  std::vector<Minutes> truck_return;
  Minutes makespan = 0;

  friend bool operator==(const Timeline&, const Timeline&) = default;
};

enum class ViolationKind { coverage, truck_only, k_range, flow_mismatch, duplicate, fleet_exceeded };

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string subject;
  std::string detail;
};

struct EvaluateOptions {
  // Time at which every vehicle becomes available at the depot.
  Minutes depot_ready = 0;
};

// Every breach of the solution invariants, one entry per distinct breach.
// An empty result means the solution is feasible.
std::vector<Violation> check(const Instance& inst, const Solution& sol);

class InfeasibleSolution : public std::runtime_error {
 public:
  explicit InfeasibleSolution(std::vector<Violation> v);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Replays the plan: drones advance through their sequences, a mission starts
// once all of its drones are free, trucks run their tours from the depot.
// Throws InfeasibleSolution if check() reports anything.
Timeline evaluate(const Instance& inst, const Solution& sol, const EvaluateOptions& opts = {});

Minutes tour_duration(const Instance& inst, const Tour& tour);

// Mission-precedence flow induced by the drone sequences: arc (i, j) carries
// the number of drones flying mission j right after mission i, with 0 as the
// depot at both ends.
std::map<std::pair<Vertex, Vertex>, int> flow_arcs(const Solution& sol);

// Total drone work sum_j k_j * tau_j^{k_j}.
Minutes drone_work(const Instance& inst, const Solution& sol);

}  // namespace pds
