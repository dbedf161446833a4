#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pds/instance.h"
#include "pds/solution.h"

namespace pds {

// Which subtour elimination rows are written up front. Anything not written
// has to be separated lazily by the solver reading the file.
enum class SecMode { none, pairs_and_triples, all_up_to };

struct EmitterConfig {
  bool include_va = true;
  SecMode sec_mode = SecMode::none;
  int sec_max = 0;   // subset size limit for all_up_to, at most 5
  Minutes big_m = 0; // 0 selects default_big_m()
  int s = 0;         // trucks; 0 uses the instance's s
};

// Sum over drone-eligible customers of their longest mission: no mission in
// a schedule without idle drones can finish later.
Minutes default_big_m(const Instance& inst);

// Writes the 3-index MILP in CPLEX LP format.
//
// Variables:
//   alpha        makespan
//   w_k_i_j      truck k drives arc (i, j)
//   u_k_j        truck k visits j (u_k_0: truck k is used)
//   z_j_g        customer j is served by a group of g drones
//   y_i_j        some drone flies mission j right after mission i
//   f_i_j        number of drones doing so (integer)
//   T_j          completion time of mission j (T_0: depot ready time)
//
// Row name prefixes: tour_, cmpl_, asg_, truck_, use_, deg_, bal_, sec_,
// flo_, fhi_, sync_, dout, dflow_, dcons_, va. bal_ rows balance arcs in and
// out of every vertex so that w describes directed circuits.
std::string emit_milp(const Instance& inst, const EmitterConfig& cfg);

// Subsets written as SEC rows for a given config, smallest first.
std::vector<std::vector<Vertex>> emitted_sec_sets(const Instance& inst, const EmitterConfig& cfg);

class SubtourError : public InputError {
 public:
  SubtourError(int truck, std::vector<Vertex> set);
  int truck() const { return truck_; }
  const std::vector<Vertex>& set() const { return set_; }

 private:
  int truck_;
  std::vector<Vertex> set_;
};

// Reads "name value" lines produced by a MILP solver for the model above and
// rebuilds the plan. Variables that are not listed are taken as zero.
// Throws SubtourError when a truck's arcs contain a cycle without the depot,
// InputError on fractional integer variables or broken flows, and
// InfeasibleSolution when the result does not pass check().
Solution import_milp_solution(std::string_view text, const Instance& inst);

}  // namespace pds
