#include "pds/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pds {

using json = nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": syntax error at byte " + std::to_string(e.byte));
  }
}

std::vector<std::vector<Vertex>> id_lists(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of arrays");
  std::vector<std::vector<Vertex>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError(std::string(what) + ": expected an array of arrays");
    std::vector<Vertex> ids;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InputError(std::string(what) + ": ids must be integers");
      ids.push_back(v.get<Vertex>());
    }
    out.push_back(std::move(ids));
  }
  return out;
}

Vertex key_id(const std::string& key, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string(what) + ": key '" + key + "' is not an integer id");
}

std::string opt_text(const std::optional<Minutes>& v) { return v ? std::to_string(*v) : std::string(); }

std::optional<Minutes> opt_parse(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return std::stoll(cell);
}

}  // namespace

std::string serialize_solution(const Solution& sol) {
  json root;
  root["tours"] = sol.tours;
  json missions = json::object();
  for (const auto& [j, k] : sol.missions) missions[std::to_string(j)] = k;
  root["missions"] = missions;
  root["drones"] = sol.drones;
  return root.dump() + "\n";
}

Solution parse_solution(std::string_view text) {
  const json root = parse_json(text, "solution");
  if (!root.is_object()) throw InputError("solution: expected a JSON object");
  Solution sol;
  if (root.contains("tours")) sol.tours = id_lists(root["tours"], "solution.tours");
  if (root.contains("drones")) sol.drones = id_lists(root["drones"], "solution.drones");
  if (root.contains("missions")) {
    if (!root["missions"].is_object()) throw InputError("solution.missions: expected an object");
    for (const auto& [key, value] : root["missions"].items()) {
      if (!value.is_number_integer()) throw InputError("solution.missions: group sizes must be integers");
      sol.missions[key_id(key, "solution.missions")] = value.get<int>();
    }
  }
  return sol;
}

std::string serialize_timeline(const Timeline& tl) {
  json root;
  json done = json::object();
  for (const auto& [j, t] : tl.mission_completion) done[std::to_string(j)] = t;
  root["mission_completion"] = done;
  root["truck_return"] = tl.truck_return;
  root["makespan"] = tl.makespan;
  return root.dump() + "\n";
}

Timeline parse_timeline(std::string_view text) {
  const json root = parse_json(text, "timeline");
  Timeline tl;
  try {
    for (const auto& [key, value] : root.at("mission_completion").items())
      tl.mission_completion[key_id(key, "timeline.mission_completion")] = value.get<Minutes>();
    tl.truck_return = root.at("truck_return").get<std::vector<Minutes>>();
    tl.makespan = root.at("makespan").get<Minutes>();
  } catch (const json::exception& e) {
    throw InputError(std::string("timeline: ") + e.what());
  }
  return tl;
}

RunRecord make_record(const Instance& inst, const std::string& solver, const SolveOutcome& out, std::uint64_t seed) {
  RunRecord r;
  r.instance = inst.name();
  r.s = inst.s();
  r.m = inst.m();
  r.solver = solver;
  r.status = to_string(out.status);
  if (out.incumbent) r.ub = out.ub;
  r.lb = out.lb;
  r.wall_ms = out.stats.time_ms;
  r.seed = seed;
  return r;
}

std::string serialize_result(const RunRecord& rec, std::uint64_t nodes) {
  json root;
  root["instance"] = rec.instance;
  root["s"] = rec.s;
  root["m"] = rec.m;
  root["solver"] = rec.solver;
  root["status"] = rec.status;
  root["lb"] = rec.lb ? json(*rec.lb) : json(nullptr);
  root["ub"] = rec.ub ? json(*rec.ub) : json(nullptr);
  root["time_ms"] = rec.wall_ms;
  root["nodes"] = nodes;
  root["seed"] = rec.seed;
  return root.dump() + "\n";
}

std::string gap_text(const RunRecord& rec) {
  if (!rec.lb || !rec.ub || *rec.ub <= 0) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * static_cast<double>(*rec.ub - *rec.lb) / static_cast<double>(*rec.ub));
  return buf;
}

std::string csv_row(const RunRecord& rec) {
  std::ostringstream out;
  out << rec.instance << ',' << rec.s << ',' << rec.m << ',' << rec.solver << ',' << rec.status << ','
      << opt_text(rec.lb) << ',' << opt_text(rec.ub) << ',' << rec.wall_ms << ',' << rec.seed << ',' << gap_text(rec);
  return out.str();
}

std::vector<RunRecord> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<RunRecord> out;
  if (!std::getline(in, line) || line != kCsvHeader) throw InputError("csv: unexpected header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 10) throw InputError("csv: expected 10 columns in '" + line + "'");
    RunRecord r;
    try {
      r.instance = cells[0];
      r.s = std::stoi(cells[1]);
      r.m = std::stoi(cells[2]);
      r.solver = cells[3];
      r.status = cells[4];
      r.lb = opt_parse(cells[5]);
      r.ub = opt_parse(cells[6]);
      r.wall_ms = std::stoll(cells[7]);
      r.seed = std::stoull(cells[8]);
    } catch (const std::exception&) {
      throw InputError("csv: malformed row '" + line + "'");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string table_row(const RunRecord& rec, std::int64_t time_best_ms) {
  auto secs = [](std::int64_t ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", static_cast<double>(ms) / 1000.0);
    return std::string(buf);
  };
  std::string bounds = "\"[" + (rec.lb ? std::to_string(*rec.lb) : std::string("-")) + ", " +
                       (rec.ub ? std::to_string(*rec.ub) : std::string("-")) + "]\"";
  const bool proven = rec.status == "optimal";
  return rec.instance + "," + bounds + "," + (proven ? secs(rec.wall_ms) : std::string()) + "," +
         (rec.ub ? secs(time_best_ms) : std::string());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace pds
