#pragma once

#include <vector>

#include "pds/instance.h"

namespace fixtures {

struct Cust {
  double x = 0, y = 0;
  int q = 0, p = 0;  // q == 0: truck only
  std::vector<pds::Minutes> tau;
};

inline pds::Instance make(const std::vector<Cust>& cs, int m, int s, const char* name = "hand") {
  pds::Instance::Data d;
  d.name = name;
  d.m = m;
  d.s = s;
  pds::Vertex id = 1;
  for (const auto& c : cs) {
    pds::Customer cu;
    cu.id = id++;
    cu.xy = {c.x, c.y};
    cu.weight = 1.0;
    cu.truck_only = c.q == 0;
    cu.q = c.q;
    cu.p = c.p;
    cu.tau = c.tau;
    d.customers.push_back(cu);
  }
  return pds::Instance::build(d);
}

// Three drone-only-ish missions A(k=2,10), B(k=1,6), C(k=1,8) on 3 drones,
// customers far enough away that trucks are never attractive.
inline pds::Instance abc() {
  return make({{20, 0, 2, 2, {10}}, {0, 20, 1, 1, {6}}, {-20, 0, 1, 1, {8}}}, 3, 1, "abc");
}

}  // namespace fixtures
