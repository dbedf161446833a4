#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "pds/instance.h"

namespace pds {

namespace {

void check_config(const GeneratorConfig& cfg) {
  if (cfg.n < 1 || cfg.m < 1 || cfg.s < 1) throw InputError("generator: n, m and s must be >= 1");
  if (!(cfg.area_km > 0.0) || !(cfg.speed_kmh > 0.0) || !(cfg.drone_speed_kmh > 0.0))
    throw InputError("generator: area and speeds must be positive");
  if (cfg.speedup_per_drone < 0.0) throw InputError("generator: speedup_per_drone must be >= 0");
  if (cfg.truck_only_fraction < 0.0 || cfg.truck_only_fraction > 1.0)
    throw InputError("generator: truck_only_fraction must lie in [0, 1]");
  if (!(cfg.payload_per_drone_kg > 0.0)) throw InputError("generator: payload_per_drone_kg must be positive");
  if (cfg.max_group < 0 || cfg.max_group > cfg.m) throw InputError("generator: max_group must lie in [0, m]");
  if (cfg.max_weight_kg < 0.0) throw InputError("generator: max_weight_kg must be >= 0");
  const int cap = cfg.max_group == 0 ? cfg.m : cfg.max_group;
  const double max_w = cfg.max_weight_kg > 0.0 ? cfg.max_weight_kg : 0.8 * cfg.payload_per_drone_kg * cfg.m;
  // The heaviest parcel must still fit a permitted group, otherwise q > p.
  if (std::ceil(max_w / cfg.payload_per_drone_kg) > cap)
    throw InputError("generator: max_weight_kg needs more drones than max_group allows (q > p)");
}

}  // namespace

Instance generate_instance(const GeneratorConfig& cfg, std::uint64_t seed) {
  check_config(cfg);
  std::mt19937_64 rng(seed);
  const int cells = std::max(1, static_cast<int>(std::floor(cfg.area_km * 2.0)));
  std::uniform_int_distribution<int> cell(0, cells);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const int cap = cfg.max_group == 0 ? cfg.m : cfg.max_group;
  const double max_w = cfg.max_weight_kg > 0.0 ? cfg.max_weight_kg : 0.8 * cfg.payload_per_drone_kg * cfg.m;

  Instance::Data d;
  d.name = cfg.name.empty() ? "gen-" + std::to_string(cfg.n) + "-" + std::to_string(seed) : cfg.name;
  d.m = cfg.m;
  d.s = cfg.s;
  d.speed_kmh = cfg.speed_kmh;
  d.depot = {cells / 2 * 0.5, cells / 2 * 0.5};

  for (int id = 1; id <= cfg.n; ++id) {
    Customer c;
    c.id = id;
    c.xy = {cell(rng) * 0.5, cell(rng) * 0.5};
    // Two decimals keeps weights exactly reproducible through JSON.
    c.weight = std::round((0.1 + unit(rng) * (max_w - 0.1)) * 100.0) / 100.0;
    c.truck_only = unit(rng) < cfg.truck_only_fraction;
    if (!c.truck_only) {
      c.q = std::clamp(static_cast<int>(std::ceil(c.weight / cfg.payload_per_drone_kg)), 1, cap);
      c.p = cap;
      const double km = std::hypot(c.xy.x - d.depot.x, c.xy.y - d.depot.y);
      for (int k = c.q; k <= c.p; ++k) {
        const double v = cfg.drone_speed_kmh * (1.0 + cfg.speedup_per_drone * (k - 1));
        const auto flight = static_cast<Minutes>(std::ceil(2.0 * km / v * 60.0 - 1e-9));
        c.tau.push_back(flight + (cfg.m - k + 1));
      }
    }
    d.customers.push_back(std::move(c));
  }
  return Instance::build(std::move(d));
}

}  // namespace pds
