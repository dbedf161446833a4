#include <algorithm>
#include <set>
#include <string>

#include "pds/exact.h"

namespace pds {

namespace {

void validate_subset(const Instance& inst, const std::vector<Vertex>& subset, std::size_t cap, const char* op) {
  if (subset.size() > cap)
    throw LimitError(std::string(op) + ": subset of " + std::to_string(subset.size()) + " customers exceeds the cap of " + std::to_string(cap));
  std::set<Vertex> seen;
  for (Vertex j : subset) {
    if (j < 1 || j > inst.n()) throw InputError(std::string(op) + ": unknown customer " + std::to_string(j));
    if (!seen.insert(j).second) throw InputError(std::string(op) + ": customer " + std::to_string(j) + " listed twice");
  }
}

// dp[mask * c + last]: shortest depot -> ... -> customers[last] path visiting
// exactly the customers in mask.
std::vector<Minutes> path_table(const Instance& inst, const std::vector<Vertex>& cs) {
  const std::size_t c = cs.size();
  const std::size_t full = std::size_t{1} << c;
  std::vector<Minutes> dp(full * c, kInfinity);
  for (std::size_t b = 0; b < c; ++b) dp[(std::size_t{1} << b) * c + b] = inst.truck_time(kDepot, cs[b]);
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (std::size_t last = 0; last < c; ++last) {
      const Minutes cur = dp[mask * c + last];
      if (cur == kInfinity || !(mask & (std::size_t{1} << last))) continue;
      for (std::size_t nxt = 0; nxt < c; ++nxt) {
        if (mask & (std::size_t{1} << nxt)) continue;
        const std::size_t nm = mask | (std::size_t{1} << nxt);
        const Minutes v = cur + inst.truck_time(cs[last], cs[nxt]);
        if (v < dp[nm * c + nxt]) dp[nm * c + nxt] = v;
      }
    }
  }
  return dp;
}

Tour backtrack(const Instance& inst, const std::vector<Vertex>& cs, const std::vector<Minutes>& dp, std::size_t mask) {
  const std::size_t c = cs.size();
  Tour rev;
  if (mask == 0) return rev;
  std::size_t last = c;
  Minutes best = kInfinity;
  for (std::size_t b = 0; b < c; ++b) {
    if (!(mask & (std::size_t{1} << b))) continue;
    const Minutes v = dp[mask * c + b] + inst.truck_time(cs[b], kDepot);
    if (v < best) {
      best = v;
      last = b;
    }
  }
  while (true) {
    rev.push_back(cs[last]);
    const std::size_t prev_mask = mask & ~(std::size_t{1} << last);
    if (prev_mask == 0) break;
    const Minutes here = dp[mask * c + last];
    std::size_t prev = c;
    for (std::size_t b = 0; b < c; ++b) {
      if (!(prev_mask & (std::size_t{1} << b))) continue;
      if (dp[prev_mask * c + b] + inst.truck_time(cs[b], cs[last]) == here) {
        prev = b;
        break;
      }
    }
    mask = prev_mask;
    last = prev;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

std::pair<Tour, Minutes> held_karp_tour(const Instance& inst, const std::vector<Vertex>& subset) {
  validate_subset(inst, subset, 18, "held_karp");
  if (subset.empty()) return {{}, 0};
  const auto dp = path_table(inst, subset);
  const std::size_t full = (std::size_t{1} << subset.size()) - 1;
  Tour t = backtrack(inst, subset, dp, full);
  return {t, tour_duration(inst, t)};
}

Minutes held_karp(const Instance& inst, const std::vector<Vertex>& subset) {
  return held_karp_tour(inst, subset).second;
}

TourTable::TourTable(const Instance& inst, std::vector<Vertex> customers, int s)
    : inst_(&inst), customers_(std::move(customers)) {
  if (static_cast<int>(customers_.size()) > kMaxCustomers)
    throw LimitError("tour table: " + std::to_string(customers_.size()) + " customers exceeds the cap of " + std::to_string(kMaxCustomers));
  if (s < 1) throw InputError("tour table: s must be >= 1");
  validate_subset(inst, customers_, kMaxCustomers, "tour table");

  const std::size_t c = customers_.size();
  const std::size_t full = std::size_t{1} << c;
  path_.push_back(path_table(inst, customers_));
  const auto& dp = path_.front();
  single_.assign(full, 0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    Minutes best = kInfinity;
    for (std::size_t b = 0; b < c; ++b)
      if (mask & (std::size_t{1} << b)) best = std::min(best, dp[mask * c + b] + inst.truck_time(customers_[b], kDepot));
    single_[mask] = best;
  }

  // More trucks than customers never helps.
  const int levels = std::max(1, std::min<int>(s, static_cast<int>(c)));
  minmax_.push_back(single_);
  for (int t = 2; t <= levels; ++t) {
    const auto& prev = minmax_.back();
    std::vector<Minutes> cur(full, 0);
    for (std::size_t mask = 1; mask < full; ++mask) {
      const std::size_t low = mask & (~mask + 1);
      const std::size_t rest = mask ^ low;
      Minutes best = kInfinity;
      // Every split has a part containing the lowest customer.
      for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
        const std::size_t part = sub | low;
        const Minutes v = std::max(single_[part], prev[mask ^ part]);
        if (v < best) best = v;
        if (sub == 0) break;
      }
      cur[mask] = best;
    }
    minmax_.push_back(std::move(cur));
  }
}

std::uint32_t TourTable::bit(Vertex j) const {
  for (std::size_t b = 0; b < customers_.size(); ++b)
    if (customers_[b] == j) return 1u << b;
  throw InputError("tour table: customer " + std::to_string(j) + " not in table");
}

Tour TourTable::order(std::uint32_t mask) const { return backtrack(*inst_, customers_, path_.front(), mask); }

std::vector<Tour> TourTable::tours(std::uint32_t mask) const {
  std::vector<Tour> out;
  auto level = minmax_.size();
  while (mask != 0) {
    if (level == 1) {
      out.push_back(order(mask));
      break;
    }
    const auto& cur = minmax_[level - 1];
    const auto& prev = minmax_[level - 2];
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    std::uint32_t chosen = mask;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t part = sub | low;
      if (std::max(single_[part], prev[mask ^ part]) == cur[mask]) {
        chosen = part;
        break;
      }
      if (sub == 0) break;
    }
    out.push_back(order(chosen));
    mask ^= chosen;
    --level;
  }
  return out;
}

TourPartition minmax_tours(const Instance& inst, const std::vector<Vertex>& subset, int s) {
  if (s < 1) throw InputError("minmax_tours: s must be >= 1");
  TourPartition out;
  if (s == 1) {
    auto [tour, len] = held_karp_tour(inst, subset);
    if (!tour.empty()) out.tours.push_back(std::move(tour));
    out.makespan = len;
    return out;
  }
  validate_subset(inst, subset, 14, "minmax_tours");
  if (subset.empty()) return out;
  TourTable table(inst, subset, s);
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << subset.size()) - 1);
  out.tours = table.tours(full);
  out.makespan = table.minmax(full);
  return out;
}

}  // namespace pds
