#include "pds/solution.h"

#include <algorithm>
#include <set>
#include <string>

namespace pds {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::coverage: return "coverage";
    case ViolationKind::truck_only: return "truck_only";
    case ViolationKind::k_range: return "k_range";
    case ViolationKind::flow_mismatch: return "flow_mismatch";
    case ViolationKind::duplicate: return "duplicate";
    case ViolationKind::fleet_exceeded: return "fleet_exceeded";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<Violation>& v) {
  std::string out = "solution is infeasible:";
  for (const auto& x : v) out += std::string(" [") + to_string(x.kind) + " " + x.subject + ": " + x.detail + "]";
  return out;
}

struct Replay {
  std::map<Vertex, Minutes> completion;
  bool stuck = false;
};

// Discrete-event replay of the drone sequences. Assumes every sequence entry
// is a mission and each mission is flown by its declared number of drones.
Replay replay_drones(const Instance& inst, const Solution& sol, Minutes ready) {
  Replay r;
  const std::size_t nd = sol.drones.size();
  std::vector<std::size_t> pos(nd, 0);
  std::vector<Minutes> avail(nd, ready);
  std::map<Vertex, std::vector<std::size_t>> crew;
  for (std::size_t d = 0; d < nd; ++d)
    for (Vertex j : sol.drones[d]) crew[j].push_back(d);

  std::size_t remaining = crew.size();
  while (remaining > 0) {
    bool progress = false;
    for (std::size_t d = 0; d < nd; ++d) {
      if (pos[d] >= sol.drones[d].size()) continue;
      const Vertex j = sol.drones[d][pos[d]];
      const auto& members = crew[j];
      const bool ready_all = std::all_of(members.begin(), members.end(), [&](std::size_t e) {
        return pos[e] < sol.drones[e].size() && sol.drones[e][pos[e]] == j;
      });
      if (!ready_all) continue;
      Minutes start = ready;
      for (std::size_t e : members) start = std::max(start, avail[e]);
      const Minutes done = start + inst.drone_time(j, sol.missions.at(j));
      for (std::size_t e : members) {
        avail[e] = done;
        ++pos[e];
      }
      r.completion[j] = done;
      --remaining;
      progress = true;
    }
    if (!progress) {
      r.stuck = true;
      break;
    }
  }
  return r;
}

}  // namespace

InfeasibleSolution::InfeasibleSolution(std::vector<Violation> v)
    : std::runtime_error(describe(v)), violations_(std::move(v)) {}

std::vector<Violation> check(const Instance& inst, const Solution& sol) {
  std::vector<Violation> out;
  const int n = inst.n();
  auto known = [&](Vertex j) { return j >= 1 && j <= n; };

  const auto used_tours = std::count_if(sol.tours.begin(), sol.tours.end(), [](const Tour& t) { return !t.empty(); });
  if (used_tours > inst.s())
    out.push_back({ViolationKind::fleet_exceeded, "tours", std::to_string(used_tours) + " tours for " + std::to_string(inst.s()) + " trucks"});
  if (static_cast<int>(sol.drones.size()) > inst.m())
    out.push_back({ViolationKind::fleet_exceeded, "drones", std::to_string(sol.drones.size()) + " drone sequences for " + std::to_string(inst.m()) + " drones"});

  std::vector<int> served(static_cast<std::size_t>(n + 1), 0);
  std::set<Vertex> reported_unknown;
  auto note = [&](Vertex j, const std::string& where) {
    if (!known(j)) {
      if (reported_unknown.insert(j).second)
        out.push_back({ViolationKind::coverage, "customer " + std::to_string(j), "unknown customer id in " + where});
      return;
    }
    ++served[static_cast<std::size_t>(j)];
  };
  for (std::size_t t = 0; t < sol.tours.size(); ++t)
    for (Vertex j : sol.tours[t]) note(j, "tour " + std::to_string(t));
  for (const auto& [j, k] : sol.missions) note(j, "missions");

  for (Vertex j = 1; j <= n; ++j) {
    const int c = served[static_cast<std::size_t>(j)];
    if (c == 0) out.push_back({ViolationKind::coverage, "customer " + std::to_string(j), "not served"});
    if (c > 1) out.push_back({ViolationKind::duplicate, "customer " + std::to_string(j), "served " + std::to_string(c) + " times"});
  }

  for (const auto& [j, k] : sol.missions) {
    if (!known(j)) continue;
    if (inst.truck_only(j)) {
      out.push_back({ViolationKind::truck_only, "customer " + std::to_string(j), "truck-only customer assigned to drones"});
    } else if (k < inst.q(j) || k > inst.p(j)) {
      out.push_back({ViolationKind::k_range, "customer " + std::to_string(j),
                     "group size " + std::to_string(k) + " outside [" + std::to_string(inst.q(j)) + ", " + std::to_string(inst.p(j)) + "]"});
    }
  }

  bool flow_ok = true;
  std::map<Vertex, int> flown;
  for (std::size_t d = 0; d < sol.drones.size(); ++d) {
    std::set<Vertex> seen;
    for (Vertex j : sol.drones[d]) {
      if (!seen.insert(j).second) {
        out.push_back({ViolationKind::duplicate, "drone " + std::to_string(d + 1), "mission " + std::to_string(j) + " repeated"});
        flow_ok = false;
        continue;
      }
      if (!sol.missions.contains(j)) {
        out.push_back({ViolationKind::flow_mismatch, "drone " + std::to_string(d + 1), "flies " + std::to_string(j) + ", which is not a mission"});
        flow_ok = false;
        continue;
      }
      ++flown[j];
    }
  }
  for (const auto& [j, k] : sol.missions) {
    const int f = flown.contains(j) ? flown[j] : 0;
    if (f != k) {
      out.push_back({ViolationKind::flow_mismatch, "mission " + std::to_string(j),
                     "group size " + std::to_string(k) + " but flown by " + std::to_string(f) + " drones"});
      flow_ok = false;
    }
  }

  // Only meaningful once each mission has exactly its crew.
  const bool times_ok = std::all_of(sol.missions.begin(), sol.missions.end(), [&](const auto& e) {
    return known(e.first) && inst.drone_feasible(e.first, e.second);
  });
  if (flow_ok && times_ok && replay_drones(inst, sol, 0).stuck)
    out.push_back({ViolationKind::flow_mismatch, "drones", "cyclic mission precedence between drone sequences"});
  return out;
}

Minutes tour_duration(const Instance& inst, const Tour& tour) {
  Minutes total = 0;
  Vertex prev = kDepot;
  for (Vertex j : tour) {
    if (j < 1 || j > inst.n()) throw InputError("tour_duration: unknown customer " + std::to_string(j));
    total += inst.truck_time(prev, j);
    prev = j;
  }
  return total + inst.truck_time(prev, kDepot);
}

Timeline evaluate(const Instance& inst, const Solution& sol, const EvaluateOptions& opts) {
  auto v = check(inst, sol);
  if (!v.empty()) throw InfeasibleSolution(std::move(v));

  Timeline tl;
  tl.makespan = opts.depot_ready;
  for (const Tour& t : sol.tours) {
    if (t.empty()) continue;
    const Minutes back = opts.depot_ready + tour_duration(inst, t);
    tl.truck_return.push_back(back);
    tl.makespan = std::max(tl.makespan, back);
  }
  tl.mission_completion = replay_drones(inst, sol, opts.depot_ready).completion;
  for (const auto& [j, t] : tl.mission_completion) tl.makespan = std::max(tl.makespan, t);
  return tl;
}

std::map<std::pair<Vertex, Vertex>, int> flow_arcs(const Solution& sol) {
  std::map<std::pair<Vertex, Vertex>, int> arcs;
  for (const auto& seq : sol.drones) {
    if (seq.empty()) continue;
    Vertex prev = kDepot;
    for (Vertex j : seq) {
      ++arcs[{prev, j}];
      prev = j;
    }
    ++arcs[{prev, kDepot}];
  }
  return arcs;
}

Minutes drone_work(const Instance& inst, const Solution& sol) {
  Minutes w = 0;
  for (const auto& [j, k] : sol.missions) w += k * inst.drone_time(j, k);
  return w;
}

}  // namespace pds
