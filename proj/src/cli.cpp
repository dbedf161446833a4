#include "pds/cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pds/emit.h"
#include "pds/exact.h"
#include "pds/heuristic.h"
#include "pds/instance.h"
#include "pds/io.h"
#include "pds/scheduler.h"

namespace pds::cli {

namespace {

struct SolveArgs {
  std::string solver = "exact";
  int s = 0;
  int m = 0;
  std::int64_t time_limit_ms = 0;
  std::uint64_t seed = 1;
  std::uint64_t nodes = 50'000'000;
  int iters = 1000;
  double ruin = 0.3;
};

void add_solve_flags(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--solver", a.solver, "exact or heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
  cmd->add_option("--s", a.s, "override the number of trucks");
  cmd->add_option("--m", a.m, "override the number of drones");
  cmd->add_option("--time-limit-ms", a.time_limit_ms, "wall-clock limit, 0 = none");
  cmd->add_option("--seed", a.seed, "random seed");
  cmd->add_option("--nodes", a.nodes, "branch-and-bound node budget");
  cmd->add_option("--iters", a.iters, "ruin & recreate iterations");
  cmd->add_option("--ruin", a.ruin, "fraction of customers removed per iteration");
}

Instance with_overrides(const Instance& inst, const SolveArgs& a) {
  if (a.s == 0 && a.m == 0) return inst;
  return inst.with_fleet(a.s == 0 ? inst.s() : a.s, a.m == 0 ? inst.m() : a.m);
}

SolveOutcome run_solver(const Instance& inst, const SolveArgs& a) {
  if (a.solver == "heuristic") {
    const auto t0 = std::chrono::steady_clock::now();
    SearchConfig cfg;
    cfg.iterations = a.iters;
    cfg.ruin_fraction = a.ruin;
    cfg.seed = a.seed;
    cfg.time_limit_ms = a.time_limit_ms;
    SolveOutcome out;
    out.incumbent = heuristic_solve(inst, cfg);
    out.ub = evaluate(inst, *out.incumbent).makespan;
    out.lb = root_bound(inst, out.ub).lb;
    out.status = out.lb == out.ub ? SolveStatus::optimal : SolveStatus::feasible;
    out.stats.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    out.stats.time_best_ms = out.stats.time_ms;
    return out;
  }
  SolveBudget b;
  b.nodes = a.nodes;
  b.time_ms = a.time_limit_ms;
  b.seed = a.seed;
  b.heuristic_iterations = std::min(a.iters, 500);
  return solve_exact(inst, b);
}

void emit_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

int cmd_solve(const std::string& file, const SolveArgs& a, const std::string& format, const std::string& out_path,
              const std::string& solution_path, std::ostream& out) {
  const Instance inst = with_overrides(load_instance(file), a);
  const SolveOutcome res = run_solver(inst, a);
  const RunRecord rec = make_record(inst, a.solver, res, a.seed);
  std::string text = format == "csv" ? std::string(kCsvHeader) + "\n" + csv_row(rec) + "\n" : serialize_result(rec, res.stats.nodes);
  emit_text(out_path, text, out);
  if (!solution_path.empty() && res.incumbent) write_file(solution_path, serialize_solution(*res.incumbent));
  return res.status == SolveStatus::budget_exhausted ? kLimit : kOk;
}

int cmd_check(const std::string& inst_file, const std::string& sol_file, const std::string& timeline_path,
              std::ostream& out) {
  const Instance inst = load_instance(inst_file);
  const Solution sol = parse_solution(read_file(sol_file));
  const auto violations = check(inst, sol);
  if (!violations.empty()) {
    out << "infeasible, " << violations.size() << " violation(s)\n";
    for (const auto& v : violations) out << to_string(v.kind) << "\t" << v.subject << "\t" << v.detail << "\n";
    return kInfeasible;
  }
  const Timeline tl = evaluate(inst, sol);
  out << "feasible, makespan=" << tl.makespan << "\n";
  if (!timeline_path.empty()) write_file(timeline_path, serialize_timeline(tl));
  return kOk;
}

int cmd_bound(const std::string& inst_file, const std::string& sol_file, std::ostream& out) {
  const Instance inst = load_instance(inst_file);
  nlohmann::json j;
  j["instance"] = inst.name();
  j["m"] = inst.m();
  if (!sol_file.empty()) {
    const Solution sol = parse_solution(read_file(sol_file));
    if (auto v = check(inst, sol); !v.empty()) throw InfeasibleSolution(std::move(v));
    const DroneBound b = drone_lb(mission_set(inst, sol));
    j["sum_k_tau"] = b.work;
    j["ceil_share"] = b.work_share;
    j["max_tau"] = b.max_tau;
    j["bound"] = b.bound;
  } else {
    const Solution seed = construct(inst);
    const Minutes ub = evaluate(inst, seed).makespan;
    const BoundReport r = root_bound(inst, ub);
    j["ub"] = ub;
    j["truck_bound"] = r.truck_bound;
    j["drone_forced"] = r.drone_forced;
    j["sum_k_tau"] = r.forced_drone.work;
    j["ceil_share"] = r.forced_drone.work_share;
    j["max_tau"] = r.forced_drone.max_tau;
    j["drone_bound"] = r.drone_bound;
    j["bound"] = r.lb;
  }
  out << j.dump() << "\n";
  return kOk;
}

int cmd_import(const std::string& inst_file, const std::string& values_file, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(inst_file);
  try {
    const Solution sol = import_milp_solution(read_file(values_file), inst);
    emit_text(out_path, serialize_solution(sol), out);
    return kOk;
  } catch (const SubtourError& e) {
    err << e.what() << "\n";
    return kInfeasible;
  }
}

int cmd_bench(const std::string& dir, const SolveArgs& a, const std::string& format, const std::string& out_path,
              bool no_timing, std::ostream& out, std::ostream& err) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::ostringstream text;
  text << (format == "table" ? kTableHeader : kCsvHeader) << "\n";
  for (const auto& f : files) {
    const Instance inst = with_overrides(load_instance(f.string()), a);
    const SolveOutcome res = run_solver(inst, a);
    RunRecord rec = make_record(inst, a.solver, res, a.seed);
    std::int64_t best_ms = res.stats.time_best_ms;
    if (no_timing) {
      rec.wall_ms = 0;
      best_ms = 0;
    }
    text << (format == "table" ? table_row(rec, best_ms) : csv_row(rec)) << "\n";
    err << inst.name() << ": " << rec.status << " [" << (rec.lb ? std::to_string(*rec.lb) : "-") << ", "
        << (rec.ub ? std::to_string(*rec.ub) : "-") << "]\n";
  }
  emit_text(out_path, text.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallel drone scheduling with collective drones: solvers and tools", "pds"};
  app.require_subcommand(1);

  SolveArgs sa;
  std::string instance_file, second_file, out_path, format = "json", solution_path, timeline_path;
  bool no_timing = false;

  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("instance", instance_file)->required();
  add_solve_flags(solve, sa);
  solve->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--out", out_path, "write the result here instead of stdout");
  solve->add_option("--solution", solution_path, "also write the best solution to this file");

  auto* chk = app.add_subcommand("check", "check a solution and report its makespan");
  chk->add_option("instance", instance_file)->required();
  chk->add_option("solution", second_file)->required();
  chk->add_option("--timeline", timeline_path, "write the timeline JSON here");

  auto* bound = app.add_subcommand("bound", "print the drone-work lower bound");
  bound->add_option("instance", instance_file)->required();
  bound->add_option("--solution", second_file, "bound the missions of this solution");

  GeneratorConfig gc;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
  gen->add_option("--n", gc.n)->required();
  gen->add_option("--m", gc.m);
  gen->add_option("--s", gc.s);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--truck-only-fraction", gc.truck_only_fraction);
  gen->add_option("--area-km", gc.area_km);
  gen->add_option("--max-group", gc.max_group);
  gen->add_option("--name", gc.name);
  gen->add_option("--out", out_path);

  EmitterConfig ec;
  std::string sec = "none";
  bool no_va = false;
  auto* emit = app.add_subcommand("emit", "write the MILP in LP format");
  emit->add_option("instance", instance_file)->required();
  emit->add_option("--sec", sec, "none, pairs (sizes 2-3) or upto")->check(CLI::IsMember({"none", "pairs", "upto"}));
  emit->add_option("--sec-max", ec.sec_max, "largest subset size for --sec upto (<= 5)");
  emit->add_flag("--no-va", no_va, "leave out the drone-work inequality");
  emit->add_option("--big-m", ec.big_m, "big-M for the synchronization rows");
  emit->add_option("--s", ec.s, "number of trucks (default: instance)");
  emit->add_option("--out", out_path);

  auto* imp = app.add_subcommand("import", "turn MILP variable values into a solution");
  imp->add_option("instance", instance_file)->required();
  imp->add_option("values", second_file, "file of 'name value' lines")->required();
  imp->add_option("--out", out_path);

  std::string bench_dir;
  auto* bench = app.add_subcommand("bench", "solve every *.json instance in a directory");
  bench->add_option("dir", bench_dir)->required()->check(CLI::ExistingDirectory);
  add_solve_flags(bench, sa);
  bench->add_option("--format", format, "csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  bench->add_option("--out", out_path);
  bench->add_flag("--no-timing", no_timing, "write 0 for all timings so reruns are byte-identical");

  std::vector<std::string> storage{"pds"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(instance_file, sa, format, out_path, solution_path, out);
    if (*chk) return cmd_check(instance_file, second_file, timeline_path, out);
    if (*bound) return cmd_bound(instance_file, second_file, out);
    if (*gen) {
      emit_text(out_path, serialize_instance(generate_instance(gc, gen_seed)), out);
      return kOk;
    }
    if (*emit) {
      ec.include_va = !no_va;
      ec.sec_mode = sec == "none" ? SecMode::none : sec == "pairs" ? SecMode::pairs_and_triples : SecMode::all_up_to;
      emit_text(out_path, emit_milp(load_instance(instance_file), ec), out);
      return kOk;
    }
    if (*imp) return cmd_import(instance_file, second_file, out_path, out, err);
    if (*bench) return cmd_bench(bench_dir, sa, format == "json" ? "csv" : format, out_path, no_timing, out, err);
  } catch (const InfeasibleSolution& e) {
    err << e.what() << "\n";
    return kInfeasible;
  } catch (const LimitError& e) {
    err << e.what() << "\n";
    return kLimit;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pds::cli
