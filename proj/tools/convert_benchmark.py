#!/usr/bin/env python3
"""Convert benchmark instances from whitespace tables to the JSON instance format.

The layout of the public benchmark files is not documented, so this converter
assumes the following and fails loudly on anything else:

  coordinates file   one line per vertex: ``id x y [w]``; id 0 is the depot,
                     coordinates in km, w the parcel weight in kg (default 0).
                     Lines starting with '#' and blank lines are ignored.
  drone-time file    one line per feasible mission: ``id k tau`` with tau in
                     minutes (non-integers are rounded up). Customers with no
                     line are truck-only.

The instance name defaults to the coordinates file's stem (e.g. ``15-r-e``).
Truck times are left to the solver (Manhattan distance at --speed km/h,
rounded half up) unless --integer-matrix is given, in which case the rounded
matrix is written explicitly.
"""
import argparse
import json
import math
import pathlib
import sys


def rows(path):
    for lineno, line in enumerate(pathlib.Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def main() -> int:
    ap = argparse.ArgumentParser(description="Convert a benchmark instance to JSON.")
    ap.add_argument("coords")
    ap.add_argument("drone_times")
    ap.add_argument("--m", type=int, required=True, help="number of drones")
    ap.add_argument("--s", type=int, default=1, help="number of trucks")
    ap.add_argument("--name")
    ap.add_argument("--speed", type=float, default=30.0)
    ap.add_argument("--integer-matrix", action="store_true")
    ap.add_argument("-o", "--out", help="output file (default: stdout)")
    args = ap.parse_args()

    vertices = {}
    for lineno, cells in rows(args.coords):
        if len(cells) not in (3, 4):
            sys.exit(f"{args.coords}:{lineno}: expected 'id x y [w]'")
        vid = int(cells[0])
        vertices[vid] = (float(cells[1]), float(cells[2]), float(cells[3]) if len(cells) == 4 else 0.0)
    if 0 not in vertices:
        sys.exit(f"{args.coords}: no depot (id 0)")
    ids = sorted(v for v in vertices if v != 0)
    if ids != list(range(1, len(ids) + 1)):
        sys.exit(f"{args.coords}: customer ids must be 1..n")

    tau = {}
    for lineno, cells in rows(args.drone_times):
        if len(cells) != 3:
            sys.exit(f"{args.drone_times}:{lineno}: expected 'id k tau'")
        tau.setdefault(int(cells[0]), {})[int(cells[1])] = math.ceil(float(cells[2]) - 1e-9)

    customers = []
    for j in ids:
        x, y, w = vertices[j]
        c = {"id": j, "xy": [x, y], "w": w, "truck_only": j not in tau}
        if j in tau:
            c["drone_time"] = {str(k): t for k, t in sorted(tau[j].items())}
        customers.append(c)

    inst = {
        "name": args.name or pathlib.Path(args.coords).stem,
        "n": len(ids),
        "m": args.m,
        "s": args.s,
        "depot": list(vertices[0][:2]),
        "customers": customers,
        "speed_kmh": args.speed,
    }
    if args.integer_matrix:
        pts = [vertices[v][:2] for v in [0] + ids]

        def minutes(a, b):
            return math.floor((abs(a[0] - b[0]) + abs(a[1] - b[1])) / args.speed * 60.0 + 0.5 + 1e-9)

        inst["truck_time"] = [[minutes(a, b) for b in pts] for a in pts]

    text = json.dumps(inst, indent=2, sort_keys=True) + "\n"
    if args.out:
        pathlib.Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
