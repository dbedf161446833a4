"""Solvers and tools for parallel drone scheduling with collective drones."""

from ._core import (
    InfeasibleSolution,
    InputError,
    Instance,
    LimitError,
    check,
    drone_lb,
    emit_milp,
    evaluate,
    generate,
    held_karp,
    import_milp_solution,
    manhattan_truck_time,
    schedule_exact,
    schedule_greedy,
    separate_subtours,
    solve_exact,
    solve_heuristic,
)

__all__ = [
    "InfeasibleSolution",
    "InputError",
    "Instance",
    "LimitError",
    "check",
    "drone_lb",
    "emit_milp",
    "evaluate",
    "generate",
    "held_karp",
    "import_milp_solution",
    "manhattan_truck_time",
    "schedule_exact",
    "schedule_greedy",
    "separate_subtours",
    "solve_exact",
    "solve_heuristic",
]
