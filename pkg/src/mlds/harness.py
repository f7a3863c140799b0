"""Random instances, batch experiments and flat-file reports."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .domination import check_lds
from .errors import GenExhausted, MldsError
from .geometry import Point, UnitDiskGraph, build_udg

MASK64 = (1 << 64) - 1
CSV_COLUMNS = ("instance_id", "solver", "size", "valid", "optimum", "ratio", "millis")
# solvers whose output is certified; an invalid row from one of them is a bug
CERTIFIED_SOLVERS = ("exact", "approx71", "ptas")


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014): ``state += 0x9E3779B97F4A7C15``,
    then two xor-shift-multiply rounds.  Chosen because it is a few lines in
    any language, so seeded instances can be regenerated elsewhere."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


@dataclass(frozen=True)
class GenSpec:
    n: int
    box_side: int  # tenths
    seed: int
    min_component: int = 3
    max_attempts: int = 1000

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.box_side < 10:
            raise ValueError("box_side must be at least 10 tenths")


def gen_random(spec: GenSpec) -> list[Point]:
    """Uniform integer-tenth points in ``[0, box_side]^2``, redrawn until every
    component of the unit disk graph has ``min_component`` vertices."""
    rng = SplitMix64(spec.seed)
    side = spec.box_side + 1
    for _ in range(spec.max_attempts):
        pts = [Point(rng.below(side), rng.below(side)) for _ in range(spec.n)]
        g = build_udg(pts)
        if _components_at_least(g, spec.min_component):
            return pts
    raise GenExhausted(
        f"no instance with components >= {spec.min_component} after {spec.max_attempts} draws")


def _components_at_least(g: UnitDiskGraph, size: int) -> bool:
    from .geometry import connected_components

    return all(len(c) >= size for c in connected_components(g))


@dataclass(frozen=True)
class SolveReport:
    instance_id: str
    solver: str
    size: int | None
    valid: bool
    optimum: int | None = None
    ratio: Fraction | None = None
    millis: float = 0.0
    error: str | None = None

    def row(self) -> dict[str, str]:
        return {
            "instance_id": self.instance_id,
            "solver": self.solver,
            "size": "" if self.size is None else str(self.size),
            "valid": "true" if self.valid else "false",
            "optimum": "" if self.optimum is None else str(self.optimum),
            "ratio": "" if self.ratio is None else str(self.ratio),
            "millis": repr(self.millis),
        }

    @classmethod
    def from_row(cls, row: dict[str, str]) -> SolveReport:
        return cls(
            instance_id=row["instance_id"],
            solver=row["solver"],
            size=int(row["size"]) if row["size"] else None,
            valid=row["valid"] == "true",
            optimum=int(row["optimum"]) if row["optimum"] else None,
            ratio=Fraction(row["ratio"]) if row["ratio"] else None,
            millis=float(row["millis"]),
        )

    def to_json(self) -> dict:
        out = asdict(self)
        out["ratio"] = None if self.ratio is None else str(self.ratio)
        return out


def run_solver(g: UnitDiskGraph, solver: str, epsilon: Fraction = Fraction(1)):
    """Dispatch by name; returns ``(solution, extra)`` where ``extra`` is the
    solver-specific part of the JSON record."""
    from .approx import mis_layers, approx_lds
    from .exact import exact_mlds
    from .prior_art import bb_solve
    from .ptas import PtasConfig, ptas_lds

    if solver == "exact":
        res = exact_mlds(g)
        if res.infeasible:
            from .errors import InfeasibleInstance

            raise InfeasibleInstance("graph has no liar's dominating set")
        return res.solution, {"subsets_examined": res.subsets_examined}
    if solver == "approx71":
        sol = approx_lds(g)
        layers = mis_layers(g)
        return sol, {"i1": len(layers.i1), "i2": len(layers.i2), "i3": len(layers.i3),
                     "patch_count": len(layers.patches)}
    if solver == "ptas":
        cfg = PtasConfig(epsilon=epsilon)
        sol, dec = ptas_lds(g, cfg)
        return sol, {"k_iterations": dec.k, "radii": dec.radii,
                     "local_solver": cfg.local_solver, "epsilon": str(cfg.epsilon)}
    if solver == "bb":
        sol, trace = bb_solve(g.points)
        return sol, {"iterations": len(trace.iterations)}
    raise ValueError(f"unknown solver {solver!r}")


def _run_cell(args) -> SolveReport:
    instance_id, points, solver, epsilon, optimum = args
    g = build_udg(points)
    start = time.perf_counter()
    try:
        sol, _ = run_solver(g, solver, epsilon)
    except MldsError as exc:
        millis = (time.perf_counter() - start) * 1000
        return SolveReport(instance_id, solver, None, False, optimum, None, millis,
                           f"{type(exc).__name__}: {exc}")
    millis = (time.perf_counter() - start) * 1000
    valid = check_lds(g, sol).valid
    ratio = None if optimum is None else Fraction(len(sol), optimum)
    return SolveReport(instance_id, solver, len(sol), valid, optimum, ratio, millis)


def run_experiment(instances: Sequence[tuple[str, Sequence[Point]]] | Sequence[Sequence[Point]],
                   solvers: Iterable[str], *, epsilon: Fraction = Fraction(1),
                   with_optimum: bool = True, jobs: int = 1) -> list[SolveReport]:
    """One report per (instance, solver), in input order.

    Ratios are taken against the exact optimum whenever the oracle finishes;
    a failing solver produces a row with ``error`` set instead of aborting.
    """
    from .exact import exact_mlds

    named = [item if isinstance(item, tuple) and isinstance(item[0], str)
             else (f"inst{i}", item) for i, item in enumerate(instances)]
    solvers = list(solvers)
    cells = []
    for instance_id, points in named:
        optimum = None
        if with_optimum:
            try:
                res = exact_mlds(build_udg(points))
                optimum = None if res.infeasible else res.optimum_size
            except MldsError:
                optimum = None
        for solver in solvers:
            cells.append((instance_id, list(points), solver, Fraction(epsilon), optimum))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_cell, cells))
    return [_run_cell(c) for c in cells]


def reports_to_csv(reports: Iterable[SolveReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.row())
    return buf.getvalue()


def reports_from_csv(text: str) -> list[SolveReport]:
    return [SolveReport.from_row(row) for row in csv.DictReader(io.StringIO(text))]


def reports_to_json(reports: Iterable[SolveReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)


def feasible_instances(count: int, *, n_range: tuple[int, int] = (3, 14),
                       box_range: tuple[int, int] = (10, 40), seed: int = 1) -> list[list[Point]]:
    """A reproducible batch of feasible instances with varied size and density."""
    rng = SplitMix64(seed)
    out = []
    while len(out) < count:
        n = n_range[0] + rng.below(n_range[1] - n_range[0] + 1)
        box = box_range[0] + rng.below(box_range[1] - box_range[0] + 1)
        try:
            out.append(gen_random(GenSpec(n=n, box_side=box, seed=rng.next_u64())))
        except GenExhausted:
            continue  # too sparse for this n; draw another shape
    return out
