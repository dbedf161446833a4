#include "pds/instance.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace pds {

using json = nlohmann::json;

namespace {

[[noreturn]] void invariant_failure(const std::string& invariant, const std::string& detail) {
  throw InputError("invariant violated [" + invariant + "]: " + detail);
}

std::vector<Minutes> coordinate_matrix(const Instance::Data& d) {
  const std::size_t size = d.customers.size() + 1;
  std::vector<Point> pts;
  pts.reserve(size);
  pts.push_back(d.depot);
  for (const auto& c : d.customers) pts.push_back(c.xy);
  std::vector<Minutes> out(size * size, 0);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (i != j) out[i * size + j] = manhattan_truck_time(pts[i], pts[j], d.speed_kmh);
  return out;
}

}  // namespace

double manhattan_minutes(Point a, Point b, double speed_kmh) {
  if (!(speed_kmh > 0.0)) throw InputError("speed_kmh must be positive");
  const double km = std::abs(a.x - b.x) + std::abs(a.y - b.y);
  return km / speed_kmh * 60.0;
}

Minutes round_half_up(double minutes) {
  // Snap values within 1e-9 of an integer first so that 13.999999999 from
  // floating point noise does not end up as 14 or 13 depending on the path.
  const double nearest = std::round(minutes);
  if (std::abs(minutes - nearest) < 1e-9) return static_cast<Minutes>(nearest);
  return static_cast<Minutes>(std::floor(minutes + 0.5));
}

Minutes manhattan_truck_time(Point a, Point b, double speed_kmh) {
  return round_half_up(manhattan_minutes(a, b, speed_kmh));
}

Instance Instance::build(Data data) {
  Instance inst;
  if (data.m < 1) invariant_failure("fleet", "m must be a positive integer");
  if (data.s < 1) invariant_failure("fleet", "s must be a positive integer");
  if (data.customers.empty()) invariant_failure("customers", "at least one customer is required");
  if (!(data.speed_kmh > 0.0)) invariant_failure("speed", "speed_kmh must be positive");

  const int n = static_cast<int>(data.customers.size());
  for (int idx = 0; idx < n; ++idx) {
    const Customer& c = data.customers[static_cast<std::size_t>(idx)];
    const std::string who = "customer " + std::to_string(c.id);
    if (c.id != idx + 1) invariant_failure("ids", "customer ids must be exactly 1..n, found " + std::to_string(c.id) + " at position " + std::to_string(idx + 1));
    if (c.truck_only) {
      if (!c.tau.empty()) invariant_failure("truck_only", who + " is truck_only but has drone times");
      continue;
    }
    if (c.tau.empty()) invariant_failure("eligibility", who + " is drone-eligible but has no drone times");
    if (c.q < 1 || c.q > c.p || c.p > data.m)
      invariant_failure("group_range", who + " needs 1 <= q <= p <= m, got q=" + std::to_string(c.q) + " p=" + std::to_string(c.p) + " m=" + std::to_string(data.m));
    if (static_cast<int>(c.tau.size()) != c.p - c.q + 1) invariant_failure("k-range gap", who + " drone times do not cover [q, p]");
    for (Minutes t : c.tau)
      if (t < 1) invariant_failure("tau_positive", who + " has a non-positive drone time");
  }

  inst.explicit_matrix_ = !data.truck_time.empty();
  if (inst.explicit_matrix_) {
    const std::size_t want = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
    if (data.truck_time.size() != want) invariant_failure("truck_time", "matrix must be (n+1)x(n+1)");
    inst.matrix_ = data.truck_time;
  } else {
    inst.matrix_ = coordinate_matrix(data);
  }

  const std::size_t size = static_cast<std::size_t>(n + 1);
  const auto& t = inst.matrix_;
  for (std::size_t i = 0; i < size; ++i) {
    if (t[i * size + i] != 0) invariant_failure("zero_diagonal", "t_ii must be 0 for vertex " + std::to_string(i));
    for (std::size_t j = 0; j < size; ++j)
      if (t[i * size + j] < 0) invariant_failure("nonnegative", "negative truck time");
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      for (std::size_t k = 0; k < size; ++k)
        if (t[i * size + k] > t[i * size + j] + t[j * size + k])
          invariant_failure("triangle_inequality", "t(" + std::to_string(i) + "," + std::to_string(k) + ") > t(" + std::to_string(i) + "," + std::to_string(j) + ") + t(" + std::to_string(j) + "," + std::to_string(k) + ")");

  inst.d_ = std::move(data);
  return inst;
}

bool Instance::drone_feasible(Vertex j, int k) const {
  const Customer& c = customer(j);
  return !c.truck_only && k >= c.q && k <= c.p;
}

Minutes Instance::drone_time(Vertex j, int k) const {
  if (!drone_feasible(j, k)) return kInfinity;
  const Customer& c = customer(j);
  return c.tau[static_cast<std::size_t>(k - c.q)];
}

std::vector<Vertex> Instance::truck_only_customers() const {
  std::vector<Vertex> out;
  for (const auto& c : d_.customers)
    if (c.truck_only) out.push_back(c.id);
  return out;
}

std::vector<Vertex> Instance::drone_eligible_customers() const {
  std::vector<Vertex> out;
  for (const auto& c : d_.customers)
    if (!c.truck_only) out.push_back(c.id);
  return out;
}

Instance Instance::with_fleet(int s, int m) const {
  Data d = d_;
  d.s = s;
  d.m = m;
  if (explicit_matrix_) d.truck_time = matrix_;
  return build(std::move(d));
}

bool operator==(const Instance& a, const Instance& b) {
  return a.d_.name == b.d_.name && a.d_.m == b.d_.m && a.d_.s == b.d_.s && a.d_.depot == b.d_.depot &&
         a.d_.customers == b.d_.customers && a.d_.speed_kmh == b.d_.speed_kmh && a.matrix_ == b.matrix_ &&
         a.explicit_matrix_ == b.explicit_matrix_;
}

namespace {

Point parse_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError(where + ": expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Minutes parse_minutes(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<Minutes>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::floor(v) != v) throw InputError(where + ": times must be whole minutes, got " + std::to_string(v));
    return static_cast<Minutes>(v);
  }
  throw InputError(where + ": expected a number");
}

int parse_int(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) throw InputError(where + ": missing integer field '" + key + "'");
  return obj[key].get<int>();
}

Customer parse_customer(const json& j, std::size_t pos) {
  const std::string where = "customers[" + std::to_string(pos) + "]";
  if (!j.is_object()) throw InputError(where + ": expected an object");
  Customer c;
  c.id = parse_int(j, "id", where);
  if (!j.contains("xy")) throw InputError(where + ": missing 'xy'");
  c.xy = parse_point(j["xy"], where + ".xy");
  if (j.contains("w")) {
    if (!j["w"].is_number()) throw InputError(where + ".w: expected a number");
    c.weight = j["w"].get<double>();
  }
  if (j.contains("truck_only")) {
    if (!j["truck_only"].is_boolean()) throw InputError(where + ".truck_only: expected a boolean");
    c.truck_only = j["truck_only"].get<bool>();
  }

  std::vector<std::pair<int, Minutes>> entries;
  if (j.contains("drone_time")) {
    const json& dt = j["drone_time"];
    if (!dt.is_object()) throw InputError(where + ".drone_time: expected an object");
    for (const auto& [key, value] : dt.items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InputError(where + ".drone_time: group size key '" + key + "' is not an integer");
      }
      entries.emplace_back(k, parse_minutes(value, where + ".drone_time." + key));
    }
  }
  std::sort(entries.begin(), entries.end());
  if (c.truck_only) {
    if (!entries.empty()) invariant_failure("truck_only", "customer " + std::to_string(c.id) + " is truck_only but has drone times");
    return c;
  }
  if (entries.empty()) invariant_failure("eligibility", "customer " + std::to_string(c.id) + " is drone-eligible but has no drone times");

  c.q = j.contains("q") ? parse_int(j, "q", where) : entries.front().first;
  c.p = j.contains("p") ? parse_int(j, "p", where) : entries.back().first;
  const std::string who = "customer " + std::to_string(c.id);
  if (c.q > c.p) invariant_failure("group_range", who + " has q > p");
  // Keys must be exactly q..p with no holes.
  if (entries.front().first != c.q || entries.back().first != c.p ||
      static_cast<int>(entries.size()) != c.p - c.q + 1)
    invariant_failure("k-range gap", who + " drone times must be defined for every k in [" + std::to_string(c.q) + ", " + std::to_string(c.p) + "]");
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first) invariant_failure("k-range gap", who + " repeats a group size");
  for (const auto& e : entries) c.tau.push_back(e.second);
  return c;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) throw InputError("instance: expected a JSON object");

  Instance::Data d;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw InputError("name: expected a string");
    d.name = root["name"].get<std::string>();
  }
  d.m = parse_int(root, "m", "instance");
  d.s = parse_int(root, "s", "instance");
  if (!root.contains("depot")) throw InputError("instance: missing 'depot'");
  d.depot = parse_point(root["depot"], "depot");
  if (root.contains("speed_kmh")) {
    if (!root["speed_kmh"].is_number()) throw InputError("speed_kmh: expected a number");
    d.speed_kmh = root["speed_kmh"].get<double>();
  }
  if (root.contains("units")) {
    const json& u = root["units"];
    if (!u.is_object()) throw InputError("units: expected an object");
    if (u.contains("time") && u["time"] != "min") throw InputError("units.time: only \"min\" is supported");
    if (u.contains("dist") && u["dist"] != "km") throw InputError("units.dist: only \"km\" is supported");
  }

  if (!root.contains("customers") || !root["customers"].is_array()) throw InputError("instance: missing 'customers' array");
  const json& cs = root["customers"];
  for (std::size_t i = 0; i < cs.size(); ++i) d.customers.push_back(parse_customer(cs[i], i));
  std::sort(d.customers.begin(), d.customers.end(), [](const Customer& a, const Customer& b) { return a.id < b.id; });

  if (root.contains("n")) {
    const int n = parse_int(root, "n", "instance");
    if (n != static_cast<int>(d.customers.size()))
      invariant_failure("n", "n=" + std::to_string(n) + " but " + std::to_string(d.customers.size()) + " customers listed");
  }

  if (root.contains("truck_time") && !root["truck_time"].is_null()) {
    const json& tt = root["truck_time"];
    const std::size_t size = d.customers.size() + 1;
    if (!tt.is_array() || tt.size() != size) throw InputError("truck_time: expected an (n+1)x(n+1) matrix");
    for (std::size_t i = 0; i < size; ++i) {
      if (!tt[i].is_array() || tt[i].size() != size) throw InputError("truck_time: expected an (n+1)x(n+1) matrix");
      for (std::size_t j = 0; j < size; ++j)
        d.truck_time.push_back(parse_minutes(tt[i][j], "truck_time[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
  }
  return Instance::build(std::move(d));
}

std::string serialize_instance(const Instance& inst) {
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  json root;
  root["name"] = inst.name();
  root["n"] = inst.n();
  root["m"] = inst.m();
  root["s"] = inst.s();
  root["depot"] = {inst.depot().x, inst.depot().y};
  root["speed_kmh"] = inst.speed_kmh();
  root["units"] = {{"time", "min"}, {"dist", "km"}};
  json cs = json::array();
  for (const auto& c : inst.customers()) {
    json jc;
    jc["id"] = c.id;
    jc["xy"] = {c.xy.x, c.xy.y};
    jc["w"] = c.weight;
    jc["truck_only"] = c.truck_only;
    if (!c.truck_only) {
      json dt = json::object();
      for (int k = c.q; k <= c.p; ++k) dt[std::to_string(k)] = c.tau[static_cast<std::size_t>(k - c.q)];
      jc["drone_time"] = dt;
      jc["q"] = c.q;
      jc["p"] = c.p;
    }
    cs.push_back(std::move(jc));
  }
  root["customers"] = std::move(cs);
  if (inst.explicit_truck_time()) {
    json tt = json::array();
    for (int i = 0; i <= inst.n(); ++i) {
      json row = json::array();
      for (int j = 0; j <= inst.n(); ++j) row.push_back(inst.truck_time(i, j));
      tt.push_back(std::move(row));
    }
    root["truck_time"] = std::move(tt);
  }
  return root.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write instance file '" + path + "'");
  out << serialize_instance(inst);
}

}  // namespace pds
