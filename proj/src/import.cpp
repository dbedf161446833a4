#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "pds/emit.h"
#include "pds/exact.h"

namespace pds {

namespace {

constexpr double kIntTol = 1e-6;

std::string set_text(const std::vector<Vertex>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i]);
  return s + "}";
}

std::vector<int> split_ints(const std::string& rest) {
  std::vector<int> out;
  std::stringstream ss(rest);
  std::string part;
  while (std::getline(ss, part, '_')) {
    std::size_t used = 0;
    out.push_back(std::stoi(part, &used));
    if (used != part.size()) throw std::invalid_argument(part);
  }
  return out;
}

long integral(const std::string& name, double v) {
  const double r = std::round(v);
  if (std::abs(v - r) > kIntTol) throw InputError("fractional value " + std::to_string(v) + " for integer variable " + name);
  return static_cast<long>(r);
}

}  // namespace

SubtourError::SubtourError(int truck, std::vector<Vertex> set)
    : InputError("subtour " + set_text(set) + " in truck " + std::to_string(truck) + " avoids the depot"),
      truck_(truck),
      set_(std::move(set)) {}

Solution import_milp_solution(std::string_view text, const Instance& inst) {
  std::map<int, ArcSet> truck_arcs;
  std::map<std::pair<Vertex, Vertex>, long> flow;
  Solution sol;
  double alpha = -1.0;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name) || name[0] == '#' || name[0] == '\\') continue;
    double value = 0.0;
    if (!(ls >> value)) throw InputError("line " + std::to_string(line_no) + ": expected 'name value'");

    if (name == "alpha") {
      alpha = value;
      continue;
    }
    const auto us = name.find('_');
    if (us == std::string::npos) continue;
    const std::string kind = name.substr(0, us);
    std::vector<int> idx;
    try {
      idx = split_ints(name.substr(us + 1));
    } catch (const std::exception&) {
      continue;  // not one of ours
    }

    if (kind == "w" && idx.size() == 3) {
      if (integral(name, value) == 1) truck_arcs[idx[0]].arcs.emplace_back(idx[1], idx[2]);
    } else if (kind == "z" && idx.size() == 2) {
      if (integral(name, value) == 1) {
        if (!sol.missions.emplace(idx[0], idx[1]).second)
          throw InputError("customer " + std::to_string(idx[0]) + " has more than one drone group size selected");
      }
    } else if (kind == "f" && idx.size() == 2) {
      const long v = integral(name, value);
      if (v > 0) flow[{idx[0], idx[1]}] = v;
    } else if ((kind == "u" && idx.size() == 2) || (kind == "y" && idx.size() == 2)) {
      integral(name, value);
    }
  }

  for (auto& [k, arcs] : truck_arcs) {
    arcs.truck = k;
    const auto cycles = separate_subtours(arcs);
    if (!cycles.empty()) throw SubtourError(k, cycles.front());
    std::map<Vertex, Vertex> succ(arcs.arcs.begin(), arcs.arcs.end());
    Tour tour;
    for (Vertex v = succ.contains(kDepot) ? succ[kDepot] : kDepot; v != kDepot; v = succ.at(v)) tour.push_back(v);
    if (!tour.empty()) sol.tours.push_back(std::move(tour));
  }

  // Peel unit paths depot -> ... -> depot off the integer drone flow; each
  // path is one drone's sequence.
  long budget = 0;
  for (const auto& [_, v] : flow) budget += v;
  while (true) {
    auto start = flow.end();
    for (auto it = flow.begin(); it != flow.end(); ++it)
      if (it->first.first == kDepot && it->second > 0) {
        start = it;
        break;
      }
    if (start == flow.end()) break;
    std::vector<Vertex> seq;
    Vertex cur = kDepot;
    do {
      if (--budget < 0) throw InputError("drone flow does not decompose into depot-rooted paths");
      auto next = flow.end();
      for (auto it = flow.lower_bound({cur, std::numeric_limits<Vertex>::min()}); it != flow.end() && it->first.first == cur; ++it)
        if (it->second > 0) {
          next = it;
          break;
        }
      if (next == flow.end()) throw InputError("drone flow is not conserved at mission " + std::to_string(cur));
      --next->second;
      cur = next->first.second;
      if (cur != kDepot) seq.push_back(cur);
    } while (cur != kDepot);
    sol.drones.push_back(std::move(seq));
  }
  for (const auto& [arc, v] : flow)
    if (v > 0) throw InputError("drone flow on arc (" + std::to_string(arc.first) + "," + std::to_string(arc.second) + ") is not reachable from the depot");

  const Timeline tl = evaluate(inst, sol);
  if (alpha >= 0.0 && static_cast<double>(tl.makespan) > alpha + 1e-6)
    throw InputError("imported plan has makespan " + std::to_string(tl.makespan) + " above the reported alpha " + std::to_string(alpha));
  return sol;
}

}  // namespace pds
