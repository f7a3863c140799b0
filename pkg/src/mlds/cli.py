"""Command line front end: ``mlds gen|solve|verify|reduce|bench``.

Exit codes: 0 success, 2 invalid solution, 3 infeasible instance, 4 oracle
limits (size cap or time budget), 1 for bad input files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Sequence

from . import harness
from .domination import check_lds
from .errors import (
    InfeasibleInstance,
    InfeasibleTarget,
    MldsError,
    OracleTooLarge,
)
from .geometry import build_udg, format_points, parse_points

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_ORACLE = 0, 1, 2, 3, 4
SOLVERS = ("exact", "approx71", "ptas", "bb")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.counterexample:
        from .prior_art import gen_counterexample

        pts = gen_counterexample(args.gadgets)
        header = f"counterexample, {args.gadgets} gadget(s)"
    else:
        spec = harness.GenSpec(n=args.n, box_side=args.box, seed=args.seed,
                               min_component=args.min_component)
        pts = harness.gen_random(spec)
        header = f"random n={args.n} box={args.box} seed={args.seed}"
    _emit(format_points(pts, header), args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    pts = parse_points(_read(args.points))
    g = build_udg(pts)
    start = time.perf_counter()
    if args.solver == "exact":
        from .exact import exact_mlds

        res = exact_mlds(g, max_vertices=args.max_vertices, time_budget=args.time_budget)
        if res.infeasible:
            raise InfeasibleInstance("graph has a component with fewer than 3 vertices")
        sol, extra = res.solution, {"subsets_examined": res.subsets_examined}
    else:
        sol, extra = harness.run_solver(g, args.solver, Fraction(args.epsilon))
    millis = (time.perf_counter() - start) * 1000
    valid = check_lds(g, sol).valid
    report = harness.SolveReport(args.instance_id or args.points, args.solver, len(sol),
                                 valid, millis=millis)
    if args.solution_out:
        with open(args.solution_out, "w", encoding="utf-8") as fh:
            fh.write("".join(f"{v}\n" for v in sol))
    if args.format == "csv":
        _emit(harness.reports_to_csv([report]), args.output)
    else:
        record = report.to_json() | {"solution": list(sol), "extra": extra}
        _emit(json.dumps(record, indent=2) + "\n", args.output)
    return EXIT_OK if valid else EXIT_INVALID


def _parse_solution(text: str) -> list[int]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(int(line))
        except ValueError:
            raise ValueError(f"solution line {lineno}: not a vertex index: {line!r}") from None
    return out


def cmd_verify(args) -> int:
    pts = parse_points(_read(args.points))
    g = build_udg(pts)
    sol = _parse_solution(_read(args.solution))
    cert = check_lds(g, sol)
    coincident = len(set(pts)) != len(pts)
    if args.format == "json":
        record = {"valid": cert.valid, "condition1_ok": cert.condition1_ok,
                  "condition2_ok": cert.condition2_ok,
                  "witness_vertex": cert.witness_vertex,
                  "witness_pair": None if cert.witness_pair is None else list(cert.witness_pair),
                  "size": len(set(sol)), "coincident_points": coincident}
        print(json.dumps(record, indent=2))
    else:
        print(cert.describe())
        print(f"size: {len(set(sol))}")
        if coincident:
            print("note: instance has coincident points")
    return EXIT_OK if cert.valid else EXIT_INVALID


def cmd_reduce(args) -> int:
    from .reduction import build_reduction, check_correspondence, parse_embedding

    emb = parse_embedding(_read(args.embedding))
    inst = build_reduction(emb)
    header = f"reduction n={inst.n} ell={inst.ell} k_offset={inst.k_offset}"
    _emit(format_points(inst.points, header), args.output)
    if args.check:
        c = check_correspondence(emb, max_vertices=args.max_vertices)
        print(json.dumps({"vertex_cover": c.vc_opt, "lds": c.lds_opt,
                          "k_offset": c.k_offset, "equal": c.equal}), file=sys.stderr)
        return EXIT_OK if c.equal else EXIT_INVALID
    return EXIT_OK


def cmd_bench(args) -> int:
    instances = harness.feasible_instances(args.count, n_range=(args.n_min, args.n_max),
                                           seed=args.seed)
    named = [(f"seed{args.seed}-{i}", pts) for i, pts in enumerate(instances)]
    reports = harness.run_experiment(named, args.solvers, epsilon=Fraction(args.epsilon),
                                     with_optimum=not args.no_optimum, jobs=args.jobs)
    text = (harness.reports_to_csv(reports) if args.format == "csv"
            else harness.reports_to_json(reports) + "\n")
    _emit(text, args.output)
    bad = [r for r in reports if r.solver in harness.CERTIFIED_SOLVERS
           and r.error is None and not r.valid]
    return EXIT_INVALID if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mlds", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a point set")
    gen.add_argument("--n", type=int, default=12)
    gen.add_argument("--box", type=int, default=30, help="box side in tenths")
    gen.add_argument("--seed", type=int, default=1)
    gen.add_argument("--min-component", type=int, default=3)
    gen.add_argument("--counterexample", action="store_true",
                     help="emit the sweep counterexample instead of random points")
    gen.add_argument("--gadgets", type=int, default=3)
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_gen)

    solve = sub.add_parser("solve", help="run one solver on a point-set file")
    solve.add_argument("points")
    which = solve.add_mutually_exclusive_group(required=True)
    for name in SOLVERS:
        which.add_argument(f"--{name}", dest="solver", action="store_const", const=name)
    solve.add_argument("--epsilon", default="1", help="PTAS epsilon, e.g. 1/2 or 0.5")
    solve.add_argument("--max-vertices", type=int, default=24)
    solve.add_argument("--time-budget", type=float)
    solve.add_argument("--instance-id")
    solve.add_argument("--solution-out", help="also write solution indices, one per line")
    solve.add_argument("--format", choices=("csv", "json"), default="json")
    solve.add_argument("-o", "--output")
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser("verify", help="check a solution file against a point set")
    verify.add_argument("points")
    verify.add_argument("solution")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    reduce_ = sub.add_parser("reduce", help="build the reduction instance of an embedding")
    reduce_.add_argument("embedding")
    reduce_.add_argument("--check", action="store_true",
                         help="also compare exact LDS with vertex cover plus offset")
    reduce_.add_argument("--max-vertices", type=int, default=64)
    reduce_.add_argument("-o", "--output")
    reduce_.set_defaults(func=cmd_reduce)

    bench = sub.add_parser("bench", help="ratio study on seeded random instances")
    bench.add_argument("--count", type=int, default=20)
    bench.add_argument("--n-min", type=int, default=3)
    bench.add_argument("--n-max", type=int, default=14)
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--solvers", nargs="+", choices=SOLVERS,
                       default=["exact", "approx71", "ptas", "bb"])
    bench.add_argument("--epsilon", default="1")
    bench.add_argument("--jobs", type=int, default=1)
    bench.add_argument("--no-optimum", action="store_true")
    bench.add_argument("--format", choices=("csv", "json"), default="csv")
    bench.add_argument("-o", "--output")
    bench.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InfeasibleInstance, InfeasibleTarget) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OracleTooLarge as exc:
        print(f"oracle limit: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (MldsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
