#!/usr/bin/env python3
"""Solve an LP-format MILP with HiGHS and print the result as 'name value' lines.

The first two lines are comments, "# status <model status>" and
"# objective <value>", followed by one line per variable. Exit code 0 on an optimal solve,
2 when HiGHS does not report optimality, 3 when highspy is missing.
"""
import argparse
import sys


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("lp", help="model in LP format")
    ap.add_argument("--time-limit", type=float, default=600.0)
    ap.add_argument("--check", action="store_true", help="only report whether highspy is importable")
    args = ap.parse_args()
    try:
        import highspy
    except ImportError:
        print("highspy is not installed", file=sys.stderr)
        return 3
    if args.check:
        return 0

    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("time_limit", args.time_limit)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    h.setOptionValue("threads", 1)
    if h.readModel(args.lp) != highspy.HighsStatus.kOk:
        print(f"cannot read {args.lp}", file=sys.stderr)
        return 1
    h.run()
    status = h.getModelStatus()
    print(f"# status {h.modelStatusToString(status)}")
    if status != highspy.HighsModelStatus.kOptimal:
        return 2
    print(f"# objective {h.getInfo().objective_function_value:.9g}")
    lp = h.getLp()
    values = h.getSolution().col_value
    for name, value in zip(lp.col_names_, values):
        print(f"{name} {value:.9g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
