#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pds/exact.h"

namespace pds {

std::vector<std::vector<Vertex>> separate_subtours(const ArcSet& arcs) {
  std::map<Vertex, Vertex> succ;
  std::map<Vertex, int> indeg;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [i, j] : arcs.arcs) {
    if (i == j) throw InputError("malformed arc set: loop on vertex " + std::to_string(i));
    if (!seen.insert({i, j}).second)
      throw InputError("malformed arc set: arc (" + std::to_string(i) + "," + std::to_string(j) + ") repeated");
    if (!succ.emplace(i, j).second) throw InputError("malformed arc set: vertex " + std::to_string(i) + " has out-degree > 1");
    if (++indeg[j] > 1) throw InputError("malformed arc set: vertex " + std::to_string(j) + " has in-degree > 1");
  }
  for (const auto& [v, _] : succ)
    if (!indeg.contains(v)) throw InputError("malformed arc set: vertex " + std::to_string(v) + " has in-degree 0 and out-degree 1");
  for (const auto& [v, _] : indeg)
    if (!succ.contains(v)) throw InputError("malformed arc set: vertex " + std::to_string(v) + " has in-degree 1 and out-degree 0");

  // Every vertex now lies on exactly one cycle.
  std::set<Vertex> visited;
  std::vector<std::vector<Vertex>> out;
  for (const auto& [start, _] : succ) {
    if (visited.contains(start)) continue;
    std::vector<Vertex> cycle;
    bool has_depot = false;
    Vertex v = start;
    do {
      visited.insert(v);
      cycle.push_back(v);
      has_depot = has_depot || v == kDepot;
      v = succ.at(v);
    } while (v != start);
    if (!has_depot) {
      std::sort(cycle.begin(), cycle.end());
      out.push_back(std::move(cycle));
    }
  }
  return out;
}

ArcSet tour_arcs(const Tour& tour, int truck) {
  ArcSet a;
  a.truck = truck;
  if (tour.empty()) return a;
  Vertex prev = kDepot;
  for (Vertex j : tour) {
    a.arcs.emplace_back(prev, j);
    prev = j;
  }
  a.arcs.emplace_back(prev, kDepot);
  return a;
}

}  // namespace pds
