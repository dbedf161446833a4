#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pds/exact.h"
#include "pds/solution.h"

namespace pds {

// { "tours": [[ids]...], "missions": {"j": k, ...}, "drones": [[ids]...] }
std::string serialize_solution(const Solution& sol);
Solution parse_solution(std::string_view text);

std::string serialize_timeline(const Timeline& tl);
Timeline parse_timeline(std::string_view text);

// One result row. Missing bounds are written as empty cells.
struct RunRecord {
  std::string instance;
  int s = 1;
  int m = 1;
  std::string solver;
  std::string status;
  std::optional<Minutes> lb;
  std::optional<Minutes> ub;
  std::int64_t wall_ms = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

RunRecord make_record(const Instance& inst, const std::string& solver, const SolveOutcome& out, std::uint64_t seed);

// {instance, s, m, status, lb, ub, time_ms, nodes}
std::string serialize_result(const RunRecord& rec, std::uint64_t nodes);

inline constexpr std::string_view kCsvHeader = "instance,s,m,solver,status,lb,ub,wall_ms,seed,gap";

// 100 * (ub - lb) / ub with two decimals, empty when a bound is missing.
std::string gap_text(const RunRecord& rec);

std::string csv_row(const RunRecord& rec);
std::vector<RunRecord> parse_csv(std::string_view text);

// Table layout: instance,[LB, UB],Sec_tot,Sec_bst. Sec_tot is empty unless
// optimality was proven.
inline constexpr std::string_view kTableHeader = "instance,bounds,sec_tot,sec_bst";
std::string table_row(const RunRecord& rec, std::int64_t time_best_ms);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace pds
