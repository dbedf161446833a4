#pragma once

// Slow, independent reference implementations used only by the tests.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "pds/instance.h"
#include "pds/solution.h"

namespace oracle {

using pds::Minutes;
using pds::Vertex;

// Shortest closed tour through the depot and `subset` by trying every order.
Minutes tsp(const pds::Instance& inst, const std::vector<Vertex>& subset);

// Closed-tour lengths keyed by sorted customer set.
using TourCache = std::map<std::vector<Vertex>, Minutes>;

// Best split of `subset` over at most s trucks, trying every assignment of
// customers to trucks and every order inside each truck.
Minutes minmax(const pds::Instance& inst, const std::vector<Vertex>& subset, int s, TourCache* cache = nullptr);

// Missions to schedule on m identical drones. Each mission lists its
// admissible (k, tau) choices; one choice means a fixed group size.
struct DroneJob {
  std::vector<std::pair<int, Minutes>> options;
};

// Minimum makespan over every choice of group size, every dispatch order and
// every subset of drones for each mission.
class DroneScheduler {
 public:
  DroneScheduler(std::vector<DroneJob> jobs, int m);
  // Optimum over the jobs whose bit is set in `mask`.
  Minutes optimum(std::uint32_t mask);
  Minutes optimum() { return optimum(jobs_.empty() ? 0u : (1u << jobs_.size()) - 1); }

 private:
  Minutes solve(std::uint32_t mask, const std::vector<Minutes>& avail);

  std::vector<DroneJob> jobs_;
  int m_;
  std::map<std::pair<std::uint32_t, std::vector<Minutes>>, Minutes> memo_;
};

// Optimal makespan of the whole instance: every split of customers between
// trucks and drones, with the two oracles above.
Minutes optimum(const pds::Instance& inst);

// Completion times by longest path over the mission precedence graph of the
// drone sequences; truck returns by summing arcs.
pds::Timeline replay(const pds::Instance& inst, const pds::Solution& sol);

// Vertex sets of connected components (arcs taken as undirected) that do
// not contain the depot, sorted.
std::vector<std::vector<Vertex>> components_without_depot(const std::vector<std::pair<Vertex, Vertex>>& arcs);

// Random instance small enough for the oracles.
pds::Instance random_instance(std::mt19937_64& rng, int n_max, int m_max, int s_max);

}  // namespace oracle
