"""Command-line interface.

Subcommands map onto the library operations:

    golden   golden tent report at a parameter
    deform   deformed tent report
    solve    Newton-corrected flat tent report
    sweep    flatten a parameter grid, JSON-lines output
    probe    flattening diagnostics over a t-list
    modulus  recover the modulus of a (flat) tent
    verify   run the invariant suite (exit nonzero on failure)
    export   write a mesh as OBJ or JSON
    serve    start the HTTP JSON API

Exit codes: 0 success, 1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .errors import PupTentError
from . import report as report_mod
from .flatten import convergence_probe, sweep, sweep_summary, write_jsonl
from .golden import classify
from .report import to_obj, torus_report
from .service import serve


def _add_param_args(p, with_t=True):
    p.add_argument("--x", type=float, required=True, help="real part of the parameter")
    p.add_argument("--y", type=float, required=True, help="imaginary part (y > 0)")
    if with_t:
        p.add_argument("--t", type=float, default=0.0, help="deformation parameter")
    p.add_argument("--json", action="store_true", help="print the full JSON report")


def _emit_report(rep, args):
    if args.json:
        print(report_mod.dumps(rep))
        return
    z = rep["z"]
    print(f"parameter: {z['x']} + {z['y']}i  region: {z['region']}  t: {rep['t']}  mode: {rep['mode']}")
    if rep["theta_defect"] is None:
        print("flatness defect: n/a (collapsed boundary tent)")
    else:
        print(f"flatness defect: {rep['theta_defect']:.6e}")
    print(f"embedding: {rep['embedding']['verdict']}   sign list matches reference: {rep['signs_match_reference']}")
    print(f"hull triangles: {rep['hull_triangles']}")
    if rep.get("coincident_vertices"):
        print(f"coincident vertices: {rep['coincident_vertices']}")
    if rep.get("modulus"):
        m = rep["modulus"]
        print(
            f"modulus: {m['tau_re']:.12g} + {m['tau_im']:.12g}i"
            f"  (layout residual {m['residual']:.2e},"
            f" distance to parameter {m['distance_to_parameter']:.2e})"
        )


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="puptent",
        description="Eight-vertex polyhedral flat tori: construction, certification, diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("golden", help="golden tent at a parameter")
    _add_param_args(p, with_t=False)

    p = sub.add_parser("deform", help="special deformation at (z, t)")
    _add_param_args(p)

    p = sub.add_parser("solve", help="Newton-corrected flat tent at (z, t)")
    _add_param_args(p)

    p = sub.add_parser("sweep", help="flatten a parameter grid")
    p.add_argument("--nx", type=int, default=10)
    p.add_argument("--ny", type=int, default=10)
    p.add_argument("--x-min", type=float, default=0.05)
    p.add_argument("--x-max", type=float, default=0.45)
    p.add_argument("--y-min", type=float, default=math.sqrt(3) / 2 + 0.05)
    p.add_argument("--y-max", type=float, default=2.0)
    p.add_argument("--t", type=float, default=None, help="constant t (default: decaying schedule)")
    p.add_argument("--out", type=str, default="-", help="JSON-lines output path")

    p = sub.add_parser("probe", help="flattening diagnostics over a t-list")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--ts", type=str, default="0.125,0.0625,0.03125,0.015625")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("modulus", help="modulus of the (flat) tent at a parameter")
    _add_param_args(p)
    p.add_argument("--solve", action="store_true", help="flatten before measuring")

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--fast", action="store_true", help="smaller sample sizes")

    p = sub.add_parser("export", help="write the mesh to a file")
    _add_param_args(p)
    p.add_argument("--mode", choices=["golden", "deformed", "solved"], default=None)
    p.add_argument("--format", choices=["obj", "json"], default="obj")
    p.add_argument("--out", type=str, required=True)

    p = sub.add_parser("serve", help="start the HTTP JSON API")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--static", type=str, default=None, help="directory of UI files to serve")

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except PupTentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args):
    if args.command == "golden":
        z = classify(args.x, args.y)
        _emit_report(torus_report(z, 0.0, mode="golden"), args)
        return 0
    if args.command == "deform":
        z = classify(args.x, args.y)
        _emit_report(torus_report(z, args.t, mode="deformed"), args)
        return 0
    if args.command == "solve":
        z = classify(args.x, args.y)
        _emit_report(torus_report(z, args.t, mode="solved"), args)
        return 0
    if args.command == "sweep":
        grid = []
        for x in np.linspace(args.x_min, args.x_max, args.nx):
            for y in np.linspace(args.y_min, args.y_max, args.ny):
                grid.append(classify(float(x), float(y)))
        schedule = args.t if args.t is not None else None
        results = sweep(grid) if schedule is None else sweep(grid, schedule)
        if args.out == "-":
            write_jsonl(results, sys.stdout)
        else:
            with open(args.out, "w") as f:
                write_jsonl(results, f)
        summary = sweep_summary(results)
        print(json.dumps({"summary": summary}), file=sys.stderr)
        ok = summary["converged"] == summary["points"]
        return 0 if ok else 1
    if args.command == "probe":
        z = classify(args.x, args.y)
        ts = [float(v) for v in args.ts.split(",")]
        table = convergence_probe(z, ts)
        if args.json:
            print(report_mod.dumps(table.as_dict()))
        else:
            print(f"{'t':>12} {'defect':>12} {'correction':>12} {'iters':>6} {'embedded':>10}")
            for r in table.rows:
                print(
                    f"{r.t:>12.6g} {r.theta_before:>12.4e} {r.correction_norm:>12.4e}"
                    f" {r.iterations:>6} {r.embedded:>10}"
                )
            print(
                f"log-log slopes: defect {table.slope_theta:.3f},"
                f" correction {table.slope_correction:.3f}"
            )
        return 0
    if args.command == "modulus":
        z = classify(args.x, args.y)
        mode = "solved" if args.solve else None
        rep = torus_report(z, args.t, mode=mode)
        if rep["modulus"] is None:
            print("error: torus is not flat enough for the modulus map", file=sys.stderr)
            return 1
        if args.json:
            print(report_mod.dumps(rep["modulus"]))
        else:
            m = rep["modulus"]
            print(f"tau = {m['tau_re']:.15g} + {m['tau_im']:.15g}i")
            print(f"layout residual: {m['residual']:.3e}")
            print(f"distance to parameter: {m['distance_to_parameter']:.6e}")
        return 0
    if args.command == "verify":
        from .verify import run

        failures = run(fast=args.fast)
        return 0 if failures == 0 else 1
    if args.command == "export":
        z = classify(args.x, args.y)
        rep = torus_report(z, args.t, mode=args.mode)
        if args.format == "obj":
            text = to_obj(
                np.array(rep["vertices"]),
                comment=f"tent at x={args.x} y={args.y} t={args.t} mode={rep['mode']}",
            )
        else:
            text = report_mod.dumps(rep) + "\n"
        with open(args.out, "w") as f:
            f.write(text)
        print(f"wrote {args.out}")
        return 0
    if args.command == "serve":
        serve(port=args.port, static_dir=args.static)
        return 0
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
