#include "pds/exact.h"

#include <algorithm>
#include <chrono>

#include "pds/heuristic.h"

namespace pds {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

Minutes ceil_div(Minutes a, Minutes b) { return (a + b - 1) / b; }

// Cheapest drone option of a customer: least work and shortest flight.
struct DroneFloor {
  Minutes work = kInfinity;
  Minutes tau = kInfinity;
};

DroneFloor drone_floor(const Instance& inst, Vertex j) {
  DroneFloor f;
  if (inst.truck_only(j)) return f;
  for (int k = inst.q(j); k <= inst.p(j); ++k) {
    f.work = std::min(f.work, k * inst.drone_time(j, k));
    f.tau = std::min(f.tau, inst.drone_time(j, k));
  }
  return f;
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const SolveBudget& budget, Clock::time_point t0)
      : inst_(inst), budget_(budget), t0_(t0), table_(inst, all_customers(inst), inst.s()) {
    for (Vertex j : inst.truck_only_customers()) forced_truck_ |= table_.bit(j);
    // Most work first so the drone bound rises early; ties by id.
    order_ = inst.drone_eligible_customers();
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return max_work(a) > max_work(b); });
    for (Vertex j : order_) floors_.push_back(drone_floor(inst, j));
  }

  // Seeds the incumbent.
  void offer(const Solution& sol, Minutes value) {
    if (value < ub_) {
      ub_ = value;
      best_ = sol;
      time_best_ = elapsed();
    }
  }

  // Returns true when the tree was fully explored.
  bool run() {
    std::vector<Mission> missions;
    try {
      dfs(0, forced_truck_, missions, 0, 0);
    } catch (const Stop&) {
      return false;
    }
    return complete_;
  }

  Minutes ub() const { return ub_; }
  const std::optional<Solution>& best() const { return best_; }
  SolveStats stats() const {
    SolveStats s = stats_;
    s.time_best_ms = time_best_;
    return s;
  }
  const TourTable& table() const { return table_; }

 private:
  struct Stop {};

  static std::vector<Vertex> all_customers(const Instance& inst) {
    std::vector<Vertex> v;
    for (Vertex j = 1; j <= inst.n(); ++j) v.push_back(j);
    return v;
  }

  Minutes max_work(Vertex j) const {
    Minutes w = 0;
    for (int k = inst_.q(j); k <= inst_.p(j); ++k) w = std::max(w, k * inst_.drone_time(j, k));
    return w;
  }

  std::int64_t elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0_).count();
  }

  void tick() {
    ++stats_.nodes;
    if (stats_.nodes > budget_.nodes) throw Stop{};
    if (budget_.time_ms > 0 && (stats_.nodes & 255u) == 0 && elapsed() >= budget_.time_ms) throw Stop{};
  }

  Minutes drone_bound(Minutes work, Minutes max_tau) const {
    return std::max(ceil_div(work, inst_.m()), max_tau);
  }

  // Bound for a node where order_[idx..] are still undecided. Each undecided
  // customer must end up on a truck or on drones; the cheaper of the two
  // consequences, taken one customer at a time, is a valid bound.
  Minutes lookahead(std::size_t idx, std::uint32_t trucks, Minutes work, Minutes max_tau, Minutes base) const {
    const Minutes tb = table_.minmax(trucks);
    const Minutes db = drone_bound(work, max_tau);
    Minutes lb = base;
    for (std::size_t i = idx; i < order_.size(); ++i) {
      const Vertex j = order_[i];
      const Minutes as_truck = std::max(table_.minmax(trucks | table_.bit(j)), db);
      const Minutes as_drone = std::max({tb, ceil_div(work + floors_[i].work, inst_.m()), max_tau, floors_[i].tau});
      lb = std::max(lb, std::min(as_truck, as_drone));
      if (lb >= ub_) break;
    }
    return lb;
  }

  void dfs(std::size_t idx, std::uint32_t trucks, std::vector<Mission>& missions, Minutes work, Minutes max_tau) {
    tick();
    const Minutes tb = table_.minmax(trucks);
    const Minutes db = drone_bound(work, max_tau);
    if (db >= ub_) {
      ++stats_.prunes_by_va;
      return;
    }
    if (tb >= ub_) {
      ++stats_.prunes_by_incumbent;
      return;
    }
    if (idx == order_.size()) {
      leaf(trucks, missions, tb);
      return;
    }
    if (lookahead(idx, trucks, work, max_tau, std::max(tb, db)) >= ub_) {
      ++stats_.prunes_by_incumbent;
      return;
    }

    const Vertex j = order_[idx];
    struct Child {
      Minutes lb;
      int k;  // 0 = truck
    };
    std::vector<Child> children;
    children.push_back({std::max(table_.minmax(trucks | table_.bit(j)), db), 0});
    for (int k = inst_.q(j); k <= inst_.p(j); ++k) {
      const Minutes tau = inst_.drone_time(j, k);
      children.push_back({std::max(tb, drone_bound(work + k * tau, std::max(max_tau, tau))), k});
    }
    std::stable_sort(children.begin(), children.end(), [](const Child& a, const Child& b) { return a.lb < b.lb; });

    for (const Child& c : children) {
      if (c.lb >= ub_) {
        ++stats_.prunes_by_incumbent;
        continue;
      }
      if (c.k == 0) {
        dfs(idx + 1, trucks | table_.bit(j), missions, work, max_tau);
      } else {
        const Minutes tau = inst_.drone_time(j, c.k);
        missions.push_back({j, c.k, tau});
        dfs(idx + 1, trucks, missions, work + c.k * tau, std::max(max_tau, tau));
        missions.pop_back();
      }
    }
  }

  void leaf(std::uint32_t trucks, const std::vector<Mission>& missions, Minutes truck_value) {
    Solution sol;
    Minutes value = truck_value;
    if (!missions.empty()) {
      MissionSet ms{missions, inst_.m()};
      if (static_cast<int>(missions.size()) > budget_.schedule.max_missions) {
        // Too many missions to prove anything here; keep the list schedule.
        complete_ = false;
        const DronePlan plan = schedule_greedy(ms);
        apply_plan(sol, plan);
        value = std::max(value, plan.makespan);
      } else {
        const ExactSchedule ex = schedule_exact(ms, budget_.schedule, ub_);
        stats_.schedule_nodes += ex.nodes;
        if (ex.lower_bound >= ub_) {
          ++stats_.prunes_by_incumbent;
          return;
        }
        if (!ex.proven) complete_ = false;
        apply_plan(sol, ex.plan);
        value = std::max(value, ex.plan.makespan);
      }
    }
    if (value >= ub_) return;
    sol.tours = table_.tours(trucks);
    for (const Mission& x : missions) sol.missions[x.customer] = x.k;
    offer(sol, value);
  }

  const Instance& inst_;
  const SolveBudget& budget_;
  Clock::time_point t0_;
  TourTable table_;
  std::uint32_t forced_truck_ = 0;
  std::vector<Vertex> order_;
  std::vector<DroneFloor> floors_;
  Minutes ub_ = kInfinity;
  std::optional<Solution> best_;
  std::int64_t time_best_ = 0;
  SolveStats stats_;
  bool complete_ = true;
};

}  // namespace

BoundReport root_bound(const Instance& inst, Minutes ub) {
  BoundReport r;
  const auto c_t = inst.truck_only_customers();
  if (static_cast<int>(c_t.size()) <= TourTable::kMaxCustomers) {
    r.truck_bound = TourTable(inst, c_t, inst.s()).minmax(static_cast<std::uint32_t>((std::uint64_t{1} << c_t.size()) - 1));
  } else {
    for (Vertex j : c_t) r.truck_bound = std::max(r.truck_bound, inst.truck_time(kDepot, j) + inst.truck_time(j, kDepot));
  }

  // A customer whose truck visit alone already costs ub must fly in any
  // solution better than ub.
  MissionSet forced;
  forced.m = inst.m();
  Minutes forced_work = 0;
  Minutes forced_tau = 0;
  if (!is_infinite(ub)) {
    for (Vertex j : inst.drone_eligible_customers()) {
      if (inst.truck_time(kDepot, j) + inst.truck_time(j, kDepot) < ub) continue;
      const DroneFloor f = drone_floor(inst, j);
      r.drone_forced.push_back(j);
      forced_work += f.work;
      forced_tau = std::max(forced_tau, f.tau);
    }
  }
  r.forced_drone.m = inst.m();
  r.forced_drone.work = forced_work;
  r.forced_drone.work_share = ceil_div(forced_work, inst.m());
  r.forced_drone.max_tau = forced_tau;
  r.forced_drone.bound = std::max(r.forced_drone.work_share, forced_tau);
  r.drone_bound = is_infinite(ub) ? r.forced_drone.bound : std::min(ub, r.forced_drone.bound);
  r.lb = std::max(r.truck_bound, r.drone_bound);
  if (!is_infinite(ub)) r.lb = std::min(r.lb, ub);
  return r;
}

SolveOutcome solve_exact(const Instance& inst, const SolveBudget& budget) {
  const auto t0 = Clock::now();
  auto elapsed = [&] { return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count(); };

  SolveOutcome out;
  SearchConfig hc;
  hc.iterations = budget.heuristic_iterations;
  hc.seed = budget.seed;
  Solution seed_sol = budget.heuristic_iterations > 0 ? heuristic_solve(inst, hc) : construct(inst);
  const Minutes seed_value = evaluate(inst, seed_sol).makespan;

  if (inst.n() > budget.max_customers) {
    out.incumbent = seed_sol;
    out.ub = seed_value;
    out.lb = root_bound(inst, out.ub).lb;
    out.status = out.lb == out.ub ? SolveStatus::optimal : SolveStatus::budget_exhausted;
    out.stats.time_ms = elapsed();
    out.stats.time_best_ms = out.stats.time_ms;
    return out;
  }

  BranchAndBound bb(inst, budget, t0);
  bb.offer(seed_sol, seed_value);
  const BoundReport root = root_bound(inst, seed_value);
  const bool complete = bb.run();

  out.incumbent = bb.best();
  out.ub = bb.ub();
  out.stats = bb.stats();
  out.stats.time_ms = elapsed();
  if (complete) {
    out.lb = out.ub;
    out.status = SolveStatus::optimal;
  } else {
    out.lb = std::min(root.lb, out.ub);
    out.status = out.lb == out.ub ? SolveStatus::optimal : SolveStatus::budget_exhausted;
  }
  return out;
}

}  // namespace pds
