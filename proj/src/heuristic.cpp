#include "pds/heuristic.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

#include "pds/scheduler.h"

namespace pds {

namespace {

constexpr int kInnerExactMissions = 8;
constexpr int kFinalExactMissions = 14;

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001B3ull;
    return h;
  }
};

struct Value {
  Minutes makespan = 0;
  Minutes total = 0;
  bool operator<(const Value& o) const {
    return makespan != o.makespan ? makespan < o.makespan : total < o.total;
  }
};

struct Plan {
  std::vector<Tour> tours;
  std::vector<Minutes> len;
  std::map<Vertex, int> missions;
  Minutes drone_ms = 0;
  Minutes work = 0;

  Minutes max_len() const { return len.empty() ? 0 : *std::max_element(len.begin(), len.end()); }
  Value value() const {
    return {std::max(max_len(), drone_ms), std::accumulate(len.begin(), len.end(), Minutes{0}) + work};
  }
};

class Engine {
 public:
  explicit Engine(const Instance& inst) : inst_(inst) {
    symmetric_ = true;
    for (int i = 0; i <= inst.n() && symmetric_; ++i)
      for (int j = 0; j < i; ++j)
        if (inst.truck_time(i, j) != inst.truck_time(j, i)) {
          symmetric_ = false;
          break;
        }
  }

  Plan empty_plan() const {
    Plan p;
    p.tours.assign(static_cast<std::size_t>(inst_.s()), {});
    p.len.assign(static_cast<std::size_t>(inst_.s()), 0);
    return p;
  }

  Plan from_solution(const Solution& sol) {
    Plan p = empty_plan();
    std::size_t slot = 0;
    for (const Tour& t : sol.tours) {
      if (t.empty()) continue;
      p.tours[slot] = t;
      p.len[slot] = tour_duration(inst_, t);
      ++slot;
    }
    p.missions = sol.missions;
    refresh_drones(p);
    return p;
  }

  Minutes drone_makespan(const std::map<Vertex, int>& missions) {
    if (missions.empty()) return 0;
    std::vector<int> key;
    key.reserve(missions.size() * 2);
    for (const auto& [j, k] : missions) {
      key.push_back(j);
      key.push_back(k);
    }
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    MissionSet ms;
    ms.m = inst_.m();
    for (const auto& [j, k] : missions) ms.missions.push_back({j, k, inst_.drone_time(j, k)});
    Minutes v = 0;
    if (static_cast<int>(missions.size()) <= kInnerExactMissions) {
      v = schedule_exact(ms, {.node_budget = 20'000, .max_missions = kInnerExactMissions}).plan.makespan;
    } else {
      v = schedule_greedy(ms).makespan;
    }
    if (cache_.size() > 200'000) cache_.clear();
    cache_.emplace(std::move(key), v);
    return v;
  }

  void refresh_drones(Plan& p) {
    p.drone_ms = drone_makespan(p.missions);
    p.work = 0;
    for (const auto& [j, k] : p.missions) p.work += k * inst_.drone_time(j, k);
  }

  // Inserts j where the makespan grows least.
  void insert(Plan& p, Vertex j) {
    struct Option {
      Value v;
      int tour = -1;
      std::size_t pos = 0;
      int k = 0;
    };
    Option best;
    best.v = {kInfinity, kInfinity};
    const Value base = p.value();

    bool tried_empty = false;
    for (std::size_t t = 0; t < p.tours.size(); ++t) {
      const Tour& tour = p.tours[t];
      if (tour.empty()) {
        if (tried_empty) continue;
        tried_empty = true;
      }
      Minutes other = p.drone_ms;
      for (std::size_t u = 0; u < p.len.size(); ++u)
        if (u != t) other = std::max(other, p.len[u]);
      for (std::size_t pos = 0; pos <= tour.size(); ++pos) {
        const Vertex a = pos == 0 ? kDepot : tour[pos - 1];
        const Vertex b = pos == tour.size() ? kDepot : tour[pos];
        const Minutes delta = inst_.truck_time(a, j) + inst_.truck_time(j, b) - inst_.truck_time(a, b);
        const Value v{std::max(other, p.len[t] + delta), base.total + delta};
        if (v < best.v) best = {v, static_cast<int>(t), pos, 0};
      }
    }
    if (!inst_.truck_only(j)) {
      const Minutes trucks = p.max_len();
      for (int k = inst_.q(j); k <= inst_.p(j); ++k) {
        p.missions[j] = k;
        const Minutes dm = drone_makespan(p.missions);
        p.missions.erase(j);
        const Value v{std::max(trucks, dm), base.total + k * inst_.drone_time(j, k)};
        if (v < best.v) best = {v, -1, 0, k};
      }
    }

    if (best.tour >= 0) {
      auto& tour = p.tours[static_cast<std::size_t>(best.tour)];
      tour.insert(tour.begin() + static_cast<std::ptrdiff_t>(best.pos), j);
      p.len[static_cast<std::size_t>(best.tour)] = tour_duration(inst_, tour);
    } else {
      p.missions[j] = best.k;
      refresh_drones(p);
    }
  }

  void remove(Plan& p, const std::vector<Vertex>& gone) {
    bool drones_changed = false;
    for (Vertex j : gone) {
      if (p.missions.erase(j) > 0) {
        drones_changed = true;
        continue;
      }
      for (std::size_t t = 0; t < p.tours.size(); ++t) {
        auto it = std::find(p.tours[t].begin(), p.tours[t].end(), j);
        if (it != p.tours[t].end()) {
          p.tours[t].erase(it);
          p.len[t] = tour_duration(inst_, p.tours[t]);
          break;
        }
      }
    }
    if (drones_changed) refresh_drones(p);
  }

  void two_opt(Plan& p) {
    for (std::size_t t = 0; t < p.tours.size(); ++t) {
      Tour& tour = p.tours[t];
      bool improved = true;
      while (improved) {
        improved = false;
        for (std::size_t a = 0; a + 1 < tour.size() && !improved; ++a) {
          for (std::size_t b = a + 1; b < tour.size() && !improved; ++b) {
            if (symmetric_) {
              const Vertex before = a == 0 ? kDepot : tour[a - 1];
              const Vertex after = b + 1 == tour.size() ? kDepot : tour[b + 1];
              const Minutes delta = inst_.truck_time(before, tour[b]) + inst_.truck_time(tour[a], after) -
                                    inst_.truck_time(before, tour[a]) - inst_.truck_time(tour[b], after);
              if (delta < 0) {
                std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(a), tour.begin() + static_cast<std::ptrdiff_t>(b) + 1);
                improved = true;
              }
            } else {
              std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(a), tour.begin() + static_cast<std::ptrdiff_t>(b) + 1);
              const Minutes len = tour_duration(inst_, tour);
              if (len < p.len[t]) {
                p.len[t] = len;
                improved = true;
              } else {
                std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(a), tour.begin() + static_cast<std::ptrdiff_t>(b) + 1);
              }
            }
          }
        }
      }
      p.len[t] = tour_duration(inst_, tour);
    }
  }

  Solution to_solution(const Plan& p) const {
    Solution sol;
    for (const Tour& t : p.tours)
      if (!t.empty()) sol.tours.push_back(t);
    sol.missions = p.missions;
    if (p.missions.empty()) return sol;
    MissionSet ms;
    ms.m = inst_.m();
    for (const auto& [j, k] : p.missions) ms.missions.push_back({j, k, inst_.drone_time(j, k)});
    if (static_cast<int>(ms.missions.size()) <= kFinalExactMissions) {
      apply_plan(sol, schedule_exact(ms, {.node_budget = 200'000, .max_missions = kFinalExactMissions}).plan);
    } else {
      apply_plan(sol, schedule_greedy(ms));
    }
    return sol;
  }

 private:
  const Instance& inst_;
  bool symmetric_ = true;
  std::unordered_map<std::vector<int>, Minutes, VecHash> cache_;
};

std::vector<Vertex> by_distance(const Instance& inst, bool truck_only) {
  std::vector<Vertex> out;
  for (const auto& c : inst.customers())
    if (c.truck_only == truck_only) out.push_back(c.id);
  std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
    return inst.truck_time(kDepot, a) + inst.truck_time(a, kDepot) > inst.truck_time(kDepot, b) + inst.truck_time(b, kDepot);
  });
  return out;
}

}  // namespace

void validate(const SearchConfig& cfg) {
  if (cfg.iterations < 0) throw InputError("search config: iterations must be >= 0");
  if (!(cfg.ruin_fraction > 0.0 && cfg.ruin_fraction < 1.0)) throw InputError("search config: ruin_fraction must lie in (0, 1)");
  if (cfg.time_limit_ms < 0) throw InputError("search config: time_limit_ms must be >= 0");
  if (cfg.sideways_tolerance < 0.0) throw InputError("search config: sideways_tolerance must be >= 0");
}

Solution construct(const Instance& inst) {
  Engine eng(inst);
  Plan p = eng.empty_plan();
  for (Vertex j : by_distance(inst, true)) eng.insert(p, j);
  for (Vertex j : by_distance(inst, false)) eng.insert(p, j);
  eng.two_opt(p);
  return eng.to_solution(p);
}

Solution ruin_recreate(const Instance& inst, const Solution& init, const SearchConfig& cfg, SearchTrace* trace) {
  validate(cfg);
  if (auto v = check(inst, init); !v.empty()) throw InfeasibleSolution(std::move(v));
  if (cfg.iterations == 0) return init;

  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  Engine eng(inst);
  std::mt19937_64 rng(cfg.seed);

  Plan cur = eng.from_solution(init);
  Plan best = cur;
  Value cur_v = cur.value();
  Value best_v = cur_v;
  const int n = inst.n();
  const int r = std::max(1, static_cast<int>(std::ceil(cfg.ruin_fraction * n - 1e-12)));

  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);

  for (int it = 0; it < cfg.iterations; ++it) {
    if (cfg.time_limit_ms > 0 &&
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count() >= cfg.time_limit_ms)
      break;

    // Customers on the resource that sets the makespan, largest share first.
    std::vector<std::pair<Minutes, Vertex>> critical;
    if (cur.max_len() >= cur.drone_ms && cur.max_len() > 0) {
      const auto t = static_cast<std::size_t>(std::max_element(cur.len.begin(), cur.len.end()) - cur.len.begin());
      const Tour& tour = cur.tours[t];
      for (std::size_t pos = 0; pos < tour.size(); ++pos) {
        const Vertex a = pos == 0 ? kDepot : tour[pos - 1];
        const Vertex b = pos + 1 == tour.size() ? kDepot : tour[pos + 1];
        critical.emplace_back(inst.truck_time(a, tour[pos]) + inst.truck_time(tour[pos], b) - inst.truck_time(a, b), tour[pos]);
      }
    } else {
      for (const auto& [j, k] : cur.missions) critical.emplace_back(k * inst.drone_time(j, k), j);
    }
    std::stable_sort(critical.begin(), critical.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    int n_crit = r / 2;
    if (r % 2 == 1 && std::uniform_int_distribution<int>(0, 1)(rng) == 1) ++n_crit;
    n_crit = std::min<int>(n_crit, static_cast<int>(critical.size()));
    const auto pool = std::min<std::size_t>(critical.size(), static_cast<std::size_t>(2 * n_crit));
    std::shuffle(critical.begin(), critical.begin() + static_cast<std::ptrdiff_t>(pool), rng);

    std::vector<Vertex> gone;
    std::vector<char> taken(static_cast<std::size_t>(n + 1), 0);
    for (int c = 0; c < n_crit; ++c) {
      gone.push_back(critical[static_cast<std::size_t>(c)].second);
      taken[static_cast<std::size_t>(gone.back())] = 1;
    }
    std::shuffle(all.begin(), all.end(), rng);
    for (Vertex j : all) {
      if (static_cast<int>(gone.size()) >= r) break;
      if (!taken[static_cast<std::size_t>(j)]) {
        gone.push_back(j);
        taken[static_cast<std::size_t>(j)] = 1;
      }
    }

    Plan cand = cur;
    eng.remove(cand, gone);
    std::shuffle(gone.begin(), gone.end(), rng);
    for (Vertex j : gone) eng.insert(cand, j);
    eng.two_opt(cand);

    const Value v = cand.value();
    const bool accept = v.makespan < cur_v.makespan ||
                        (v.makespan == cur_v.makespan &&
                         static_cast<double>(v.total) <= static_cast<double>(cur_v.total) * (1.0 + cfg.sideways_tolerance));
    if (accept) {
      cur = std::move(cand);
      cur_v = v;
      if (trace) ++trace->accepted;
      if (cur_v < best_v) {
        best = cur;
        best_v = cur_v;
      }
    }
    if (trace) {
      trace->current.push_back(cur_v.makespan);
      trace->best.push_back(best_v.makespan);
    }
  }

  Solution out = eng.to_solution(best);
  if (evaluate(inst, out).makespan > evaluate(inst, init).makespan) return init;
  return out;
}

Solution heuristic_solve(const Instance& inst, const SearchConfig& cfg) {
  return ruin_recreate(inst, construct(inst), cfg);
}

}  // namespace pds
