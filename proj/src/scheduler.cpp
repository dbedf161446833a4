#include "pds/scheduler.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

namespace pds {

namespace {

void validate(const MissionSet& ms) {
  if (ms.m < 1) throw InputError("mission set: m must be >= 1");
  std::set<Vertex> ids;
  for (const Mission& x : ms.missions) {
    if (x.k < 1) throw InputError("mission " + std::to_string(x.customer) + ": group size must be >= 1");
    if (x.k > ms.m)
      throw InputError("infeasible mission " + std::to_string(x.customer) + ": needs " + std::to_string(x.k) + " drones, fleet has " + std::to_string(ms.m));
    if (x.tau < 1) throw InputError("mission " + std::to_string(x.customer) + ": tau must be positive");
    if (!ids.insert(x.customer).second) throw InputError("mission set: customer " + std::to_string(x.customer) + " appears twice");
  }
}

Minutes ceil_div(Minutes a, Minutes b) { return (a + b - 1) / b; }

// Dispatches missions in the given order to their k earliest-free drones.
DronePlan dispatch(const MissionSet& ms, const std::vector<std::size_t>& order) {
  const auto m = static_cast<std::size_t>(ms.m);
  DronePlan plan;
  plan.drones.assign(m, {});
  std::vector<Minutes> avail(m, 0);
  std::vector<std::size_t> idx(m);
  for (std::size_t i : order) {
    const Mission& x = ms.missions[i];
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return avail[a] < avail[b]; });
    const auto k = static_cast<std::size_t>(x.k);
    const Minutes done = avail[idx[k - 1]] + x.tau;
    std::vector<std::size_t> crew(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(crew.begin(), crew.end());
    for (std::size_t d : crew) {
      avail[d] = done;
      plan.drones[d].push_back(x.customer);
    }
    plan.makespan = std::max(plan.makespan, done);
  }
  return plan;
}

struct StateKey {
  std::uint32_t mask;
  std::vector<Minutes> avail;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const {
    std::size_t h = key.mask * 0x9E3779B97F4A7C15ull;
    for (Minutes a : key.avail) h = (h ^ static_cast<std::size_t>(a)) * 0x100000001B3ull;
    return h;
  }
};

struct MemoEntry {
  Minutes value;  // relative to the state's smallest availability
  bool exact;     // false: value is only a lower bound
};

struct BudgetExhausted {};

class OrderSearch {
 public:
  OrderSearch(const MissionSet& ms, std::uint64_t budget) : ms_(ms), budget_(budget) {
    const std::size_t cnt = ms.missions.size();
    // Children are tried in decreasing k*tau so good schedules show up early.
    order_.resize(cnt);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = ms.missions[a];
      const auto& y = ms.missions[b];
      if (x.k * x.tau != y.k * y.tau) return x.k * x.tau > y.k * y.tau;
      return x.tau > y.tau;
    });
    // Missions with equal (k, tau) are interchangeable: only the first
    // remaining one of each class is branched on.
    twin_before_.assign(cnt, -1);
    for (std::size_t a = 0; a < cnt; ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (ms.missions[order_[a]].k == ms.missions[order_[b]].k && ms.missions[order_[a]].tau == ms.missions[order_[b]].tau)
          twin_before_[a] = static_cast<int>(b);
  }

  Minutes search(std::uint32_t mask, const std::vector<Minutes>& avail, Minutes rem_work, Minutes cutoff) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (mask == 0) {
      const Minutes v = avail.back();
      if (v < incumbent_) {
        incumbent_ = v;
        incumbent_path_ = path_;
      }
      return v;
    }
    const Minutes lb = bound(mask, avail, rem_work);
    if (lb >= cutoff) return lb;

    const Minutes shift = avail.front();
    StateKey key{mask, avail};
    for (Minutes& a : key.avail) a -= shift;
    if (auto it = memo_.find(key); it != memo_.end()) {
      const Minutes v = it->second.value + shift;
      if (it->second.exact || v >= cutoff) return v;
    }

    Minutes best = cutoff;
    Minutes child_lb = kInfinity;
    std::vector<Minutes> next(avail.size());
    for (std::size_t a = 0; a < order_.size(); ++a) {
      if (!(mask & (1u << a))) continue;
      if (twin_before_[a] >= 0 && (mask & (1u << twin_before_[a]))) continue;
      const Mission& x = ms_.missions[order_[a]];
      build_child(avail, x, next);
      path_.push_back(order_[a]);
      const Minutes v = search(mask & ~(1u << a), next, rem_work - x.k * x.tau, best);
      path_.pop_back();
      if (v < best) {
        best = v;
      } else {
        child_lb = std::min(child_lb, v);
      }
    }
    if (best < cutoff) {
      memo_[std::move(key)] = {best - shift, true};
      return best;
    }
    memo_[std::move(key)] = {child_lb - shift, false};
    return child_lb;
  }

  // Rebuilds a dispatch order achieving `target` from a state whose optimum
  // is known to be exactly `target`.
  std::vector<std::size_t> reconstruct(std::uint32_t mask, std::vector<Minutes> avail, Minutes rem_work, Minutes target) {
    std::vector<std::size_t> out;
    std::vector<Minutes> next(avail.size());
    while (mask != 0) {
      bool found = false;
      for (std::size_t a = 0; a < order_.size() && !found; ++a) {
        if (!(mask & (1u << a))) continue;
        const Mission& x = ms_.missions[order_[a]];
        build_child(avail, x, next);
        const Minutes v = search(mask & ~(1u << a), next, rem_work - x.k * x.tau, target + 1);
        if (v == target) {
          out.push_back(order_[a]);
          mask &= ~(1u << a);
          rem_work -= x.k * x.tau;
          avail = next;
          found = true;
        }
      }
      if (!found) throw std::logic_error("schedule reconstruction failed");
    }
    return out;
  }

  std::uint32_t full_mask() const {
    return order_.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << order_.size()) - 1);
  }
  std::uint64_t nodes() const { return nodes_; }
  Minutes incumbent() const { return incumbent_; }
  const std::vector<std::size_t>& incumbent_path() const { return incumbent_path_; }

 private:
  Minutes bound(std::uint32_t mask, const std::vector<Minutes>& avail, Minutes rem_work) const {
    const Minutes total = std::accumulate(avail.begin(), avail.end(), Minutes{0}) + rem_work;
    Minutes lb = std::max(avail.back(), ceil_div(total, static_cast<Minutes>(avail.size())));
    for (std::size_t a = 0; a < order_.size(); ++a) {
      if (!(mask & (1u << a))) continue;
      const Mission& x = ms_.missions[order_[a]];
      lb = std::max(lb, avail[static_cast<std::size_t>(x.k - 1)] + x.tau);
    }
    return lb;
  }

  static void build_child(const std::vector<Minutes>& avail, const Mission& x, std::vector<Minutes>& next) {
    const auto k = static_cast<std::size_t>(x.k);
    const Minutes done = avail[k - 1] + x.tau;
    // avail[k..] is sorted; merge k copies of `done` into it.
    std::size_t out = 0;
    std::size_t i = k;
    std::size_t placed = 0;
    while (out < avail.size()) {
      if (placed < k && (i >= avail.size() || done <= avail[i])) {
        next[out++] = done;
        ++placed;
      } else {
        next[out++] = avail[i++];
      }
    }
  }

  const MissionSet& ms_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> order_;
  std::vector<int> twin_before_;
  std::unordered_map<StateKey, MemoEntry, StateKeyHash> memo_;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> incumbent_path_;
  Minutes incumbent_ = kInfinity;
};

}  // namespace

MissionSet mission_set(const Instance& inst, const Solution& sol) {
  MissionSet ms;
  ms.m = inst.m();
  for (const auto& [j, k] : sol.missions) ms.missions.push_back({j, k, inst.drone_time(j, k)});
  return ms;
}

DroneBound drone_lb(const MissionSet& ms) {
  validate(ms);
  DroneBound b;
  b.m = ms.m;
  for (const Mission& x : ms.missions) {
    b.work += x.k * x.tau;
    b.max_tau = std::max(b.max_tau, x.tau);
  }
  b.work_share = ceil_div(b.work, ms.m);
  b.bound = std::max(b.work_share, b.max_tau);
  return b;
}

DronePlan schedule_greedy(const MissionSet& ms) {
  validate(ms);
  std::vector<std::size_t> order(ms.missions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Mission& x = ms.missions[a];
    const Mission& y = ms.missions[b];
    if (x.k * x.tau != y.k * y.tau) return x.k * x.tau > y.k * y.tau;
    if (x.tau != y.tau) return x.tau > y.tau;
    return x.customer < y.customer;
  });
  return dispatch(ms, order);
}

ExactSchedule schedule_exact(const MissionSet& ms, const ScheduleLimits& limits, Minutes cutoff) {
  validate(ms);
  if (static_cast<int>(ms.missions.size()) > limits.max_missions || ms.missions.size() > 31)
    throw LimitError("schedule_exact: " + std::to_string(ms.missions.size()) + " missions exceeds the cap of " + std::to_string(limits.max_missions));

  ExactSchedule out;
  out.plan = schedule_greedy(ms);
  const Minutes lb0 = drone_lb(ms).bound;
  out.lower_bound = lb0;
  if (out.plan.makespan <= lb0) {
    out.proven = true;
    return out;
  }

  OrderSearch search(ms, limits.node_budget);
  const std::vector<Minutes> start(static_cast<std::size_t>(ms.m), 0);
  const Minutes work = drone_lb(ms).work;
  const Minutes limit = std::min(cutoff, out.plan.makespan);
  try {
    const Minutes v = search.search(search.full_mask(), start, work, limit);
    if (v < limit) {
      out.plan = dispatch(ms, search.reconstruct(search.full_mask(), start, work, v));
      out.proven = true;
      out.lower_bound = v;
    } else {
      out.lower_bound = std::max(lb0, v);
      out.proven = limit == out.plan.makespan;
    }
  } catch (const BudgetExhausted&) {
    if (search.incumbent() < out.plan.makespan) out.plan = dispatch(ms, search.incumbent_path());
    out.proven = false;
  }
  out.nodes = search.nodes();
  return out;
}

void apply_plan(Solution& sol, const DronePlan& plan) {
  sol.drones.clear();
  for (const auto& seq : plan.drones)
    if (!seq.empty()) sol.drones.push_back(seq);
}

}  // namespace pds
