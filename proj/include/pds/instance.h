#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pds/types.h"

namespace pds {

// Drone eligibility of one customer. For truck-only customers the tau table
// is empty; otherwise tau[k - q] is the round-trip time of a k-drone group
// for q <= k <= p.
struct Customer {
  Vertex id = 0;
  Point xy;
  double weight = 0.0;
  bool truck_only = false;
  int q = 0;
  int p = 0;
  std::vector<Minutes> tau;

  friend bool operator==(const Customer&, const Customer&) = default;
};

// A PDSTSP-c / PDSVRP-c instance. Immutable once built by one of the
// factories below; every factory validates all invariants.
class Instance {
 public:
  struct Data {
    std::string name;
    int m = 1;
    int s = 1;
    Point depot;
    std::vector<Customer> customers;  // ids 1..n, in id order
    // Row-major (n+1)^2 matrix. Empty means "derive from coordinates".
    std::vector<Minutes> truck_time;
    double speed_kmh = 30.0;
  };

  // Validates and takes ownership. Throws InputError naming the broken
  // invariant.
  static Instance build(Data data);

  const std::string& name() const { return d_.name; }
  int n() const { return static_cast<int>(d_.customers.size()); }
  int m() const { return d_.m; }
  int s() const { return d_.s; }
  const Point& depot() const { return d_.depot; }
  double speed_kmh() const { return d_.speed_kmh; }
  bool explicit_truck_time() const { return explicit_matrix_; }

  // Customers are addressed by id 1..n.
  const Customer& customer(Vertex j) const { return d_.customers.at(static_cast<std::size_t>(j - 1)); }
  std::span<const Customer> customers() const { return d_.customers; }
  Point coords(Vertex v) const { return v == kDepot ? d_.depot : customer(v).xy; }

  Minutes truck_time(Vertex i, Vertex j) const {
    return matrix_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n() + 1) +
                   static_cast<std::size_t>(j)];
  }

  bool truck_only(Vertex j) const { return customer(j).truck_only; }
  int q(Vertex j) const { return customer(j).q; }
  int p(Vertex j) const { return customer(j).p; }
  bool drone_feasible(Vertex j, int k) const;
  // kInfinity when (j, k) is not a feasible mission.
  Minutes drone_time(Vertex j, int k) const;

  // Customers that only a truck can serve (C_T) and the rest (C_F).
  std::vector<Vertex> truck_only_customers() const;
  std::vector<Vertex> drone_eligible_customers() const;

  // Copy with different fleet sizes; group-size ranges must still fit m.
  Instance with_fleet(int s, int m) const;

  const Data& data() const { return d_; }

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  Data d_;
  std::vector<Minutes> matrix_;
  bool explicit_matrix_ = false;
};

// Manhattan distance over speed, in (fractional) minutes.
double manhattan_minutes(Point a, Point b, double speed_kmh);

// Round half away from zero; inputs are non-negative here.
Minutes round_half_up(double minutes);

// manhattan_minutes rounded to whole minutes.
Minutes manhattan_truck_time(Point a, Point b, double speed_kmh);

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// Parameters of the synthetic instance generator.
//
// Coordinates are drawn on a half-kilometre grid so that Manhattan truck
// times at 30 km/h are whole minutes and the triangle inequality holds
// exactly. Drone times use a group-size speed curve
//
//   v(k) = drone_speed_kmh * (1 + speedup_per_drone * (k - 1))
//   tau_j^k = ceil(2 * euclid(0, j) / v(k) * 60) + (m - k + 1)
//
// where the last term is a handling overhead of at least one minute that
// shrinks with group size, so tau is strictly decreasing in k even for a
// customer sitting on the depot.
struct GeneratorConfig {
  int n = 10;
  int m = 3;
  int s = 1;
  double area_km = 10.0;
  double speed_kmh = 30.0;
  double drone_speed_kmh = 40.0;
  double speedup_per_drone = 0.25;
  double truck_only_fraction = 0.2;
  double max_weight_kg = 0.0;        // 0 means 0.8 * payload * m
  double payload_per_drone_kg = 2.5; // sets q_j = ceil(w_j / payload)
  int max_group = 0;                 // cap on p_j, 0 means m
  std::string name;                  // empty means "gen-<n>-<seed>"
};

Instance generate_instance(const GeneratorConfig& cfg, std::uint64_t seed);

}  // namespace pds
