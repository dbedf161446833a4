#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pds/emit.h"
#include "pds/exact.h"
#include "pds/heuristic.h"
#include "pds/instance.h"
#include "pds/io.h"
#include "pds/scheduler.h"

namespace py = pybind11;
using namespace pds;

namespace {

py::dict to_dict(const Solution& sol) {
  py::dict d;
  d["tours"] = sol.tours;
  d["missions"] = sol.missions;
  d["drones"] = sol.drones;
  return d;
}

Solution from_dict(const py::dict& d) {
  Solution sol;
  if (d.contains("tours")) sol.tours = d["tours"].cast<std::vector<Tour>>();
  if (d.contains("missions")) {
    for (auto [k, v] : d["missions"].cast<py::dict>()) sol.missions[py::int_(py::reinterpret_borrow<py::object>(k)).cast<Vertex>()] = v.cast<int>();
  }
  if (d.contains("drones")) sol.drones = d["drones"].cast<std::vector<std::vector<Vertex>>>();
  return sol;
}

py::object bound_or_none(Minutes v) { return is_infinite(v) ? py::none() : py::object(py::int_(v)); }

py::dict outcome(const SolveOutcome& out) {
  py::dict d;
  d["status"] = to_string(out.status);
  d["lb"] = out.lb;
  d["ub"] = bound_or_none(out.ub);
  d["solution"] = out.incumbent ? py::object(to_dict(*out.incumbent)) : py::none();
  d["nodes"] = out.stats.nodes;
  d["time_ms"] = out.stats.time_ms;
  return d;
}

MissionSet missions_of(const std::vector<std::tuple<Vertex, int, Minutes>>& ms, int m) {
  MissionSet set{{}, m};
  for (auto [j, k, tau] : ms) set.missions.push_back({j, k, tau});
  return set;
}

py::dict plan_dict(const DronePlan& plan) {
  py::dict d;
  d["drones"] = plan.drones;
  d["makespan"] = plan.makespan;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parallel drone scheduling with collective drones";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);
  py::register_exception<InfeasibleSolution>(m, "InfeasibleSolution", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def_static("from_json", [](const std::string& text) { return parse_instance(text); }, py::arg("text"))
      .def_static("load", &load_instance, py::arg("path"))
      .def("to_json", [](const Instance& i) { return serialize_instance(i); })
      .def_property_readonly("name", &Instance::name)
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("m", &Instance::m)
      .def_property_readonly("s", &Instance::s)
      .def("truck_time", &Instance::truck_time, py::arg("i"), py::arg("j"))
      .def("drone_time", [](const Instance& i, Vertex j, int k) { return bound_or_none(i.drone_time(j, k)); },
           py::arg("j"), py::arg("k"), "None when k drones cannot serve j")
      .def("truck_only_customers", &Instance::truck_only_customers)
      .def("drone_eligible_customers", &Instance::drone_eligible_customers)
      .def("with_fleet", &Instance::with_fleet, py::arg("s"), py::arg("m"))
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance " + i.name() + " n=" + std::to_string(i.n()) + " m=" + std::to_string(i.m()) + " s=" + std::to_string(i.s()) + ">";
      });

  m.def("generate", [](int n, int drones, int trucks, std::uint64_t seed, double truck_only_fraction, double area_km) {
        GeneratorConfig cfg;
        cfg.n = n;
        cfg.m = drones;
        cfg.s = trucks;
        cfg.truck_only_fraction = truck_only_fraction;
        cfg.area_km = area_km;
        return generate_instance(cfg, seed);
      },
      py::arg("n"), py::arg("m") = 3, py::arg("s") = 1, py::arg("seed") = 1, py::arg("truck_only_fraction") = 0.2,
      py::arg("area_km") = 10.0);

  m.def("manhattan_truck_time", [](std::pair<double, double> a, std::pair<double, double> b, double speed_kmh) {
        return manhattan_truck_time({a.first, a.second}, {b.first, b.second}, speed_kmh);
      },
      py::arg("a"), py::arg("b"), py::arg("speed_kmh") = 30.0);

  m.def("check", [](const Instance& inst, const py::dict& sol) {
        py::list out;
        for (const auto& v : check(inst, from_dict(sol))) out.append(py::make_tuple(to_string(v.kind), v.subject, v.detail));
        return out;
      },
      py::arg("instance"), py::arg("solution"), "List of (kind, subject, detail); empty when feasible.");

  m.def("evaluate", [](const Instance& inst, const py::dict& sol) {
        const Timeline tl = evaluate(inst, from_dict(sol));
        py::dict d;
        d["mission_completion"] = tl.mission_completion;
        d["truck_return"] = tl.truck_return;
        d["makespan"] = tl.makespan;
        return d;
      },
      py::arg("instance"), py::arg("solution"));

  m.def("drone_lb", [](const std::vector<std::tuple<Vertex, int, Minutes>>& ms, int drones) {
        const DroneBound b = drone_lb(missions_of(ms, drones));
        py::dict d;
        d["work"] = b.work;
        d["work_share"] = b.work_share;
        d["max_tau"] = b.max_tau;
        d["bound"] = b.bound;
        return d;
      },
      py::arg("missions"), py::arg("m"), "missions: list of (customer, k, tau)");

  m.def("schedule_greedy", [](const std::vector<std::tuple<Vertex, int, Minutes>>& ms, int drones) {
        return plan_dict(schedule_greedy(missions_of(ms, drones)));
      },
      py::arg("missions"), py::arg("m"));

  m.def("schedule_exact", [](const std::vector<std::tuple<Vertex, int, Minutes>>& ms, int drones, std::uint64_t node_budget) {
        const ExactSchedule r = schedule_exact(missions_of(ms, drones), {.node_budget = node_budget});
        py::dict d = plan_dict(r.plan);
        d["proven"] = r.proven;
        return d;
      },
      py::arg("missions"), py::arg("m"), py::arg("node_budget") = 2'000'000);

  m.def("solve_exact", [](const Instance& inst, std::uint64_t nodes, std::int64_t time_limit_ms, std::uint64_t seed) {
        SolveBudget b;
        b.nodes = nodes;
        b.time_ms = time_limit_ms;
        b.seed = seed;
        SolveOutcome out;
        {
          py::gil_scoped_release release;
          out = solve_exact(inst, b);
        }
        return outcome(out);
      },
      py::arg("instance"), py::arg("nodes") = 50'000'000, py::arg("time_limit_ms") = 0, py::arg("seed") = 1);

  m.def("solve_heuristic", [](const Instance& inst, int iterations, std::uint64_t seed, double ruin_fraction, std::int64_t time_limit_ms) {
        SearchConfig cfg;
        cfg.iterations = iterations;
        cfg.seed = seed;
        cfg.ruin_fraction = ruin_fraction;
        cfg.time_limit_ms = time_limit_ms;
        Solution sol;
        {
          py::gil_scoped_release release;
          sol = heuristic_solve(inst, cfg);
        }
        return to_dict(sol);
      },
      py::arg("instance"), py::arg("iterations") = 1000, py::arg("seed") = 1, py::arg("ruin_fraction") = 0.3,
      py::arg("time_limit_ms") = 0);

  m.def("held_karp", &held_karp, py::arg("instance"), py::arg("subset"));

  m.def("separate_subtours", [](const std::vector<std::pair<Vertex, Vertex>>& arcs) { return separate_subtours({0, arcs}); },
        py::arg("arcs"));

  m.def("emit_milp", [](const Instance& inst, bool include_va, const std::string& sec, int sec_max) {
        EmitterConfig cfg;
        cfg.include_va = include_va;
        if (sec == "none") cfg.sec_mode = SecMode::none;
        else if (sec == "pairs") cfg.sec_mode = SecMode::pairs_and_triples;
        else if (sec == "upto") cfg.sec_mode = SecMode::all_up_to;
        else throw InputError("sec must be one of none, pairs, upto");
        cfg.sec_max = sec_max;
        return emit_milp(inst, cfg);
      },
      py::arg("instance"), py::arg("include_va") = true, py::arg("sec") = "none", py::arg("sec_max") = 0);

  m.def("import_milp_solution", [](const std::string& text, const Instance& inst) { return to_dict(import_milp_solution(text, inst)); },
        py::arg("text"), py::arg("instance"));
}
