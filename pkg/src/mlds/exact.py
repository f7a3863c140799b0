"""Certified-minimum liar's dominating sets by exhaustive search.

The search is a depth-first include/exclude walk over candidate vertices in
ascending index order, pruned by a disjoint-deficit lower bound.  Taking the
include branch first makes the first minimum-size set reached the
lexicographically smallest one, which is the set a size-by-size
enumeration in lexicographic order would return.

Connected components are solved independently; the union of per-component
lexicographically first optima is the global lexicographically first
optimum.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable

from .domination import lds_feasible
from .errors import InfeasibleTarget, OracleTimeout, OracleTooLarge
from .geometry import (
    UnitDiskGraph,
    VertexSet,
    connected_components,
    mask_to_set,
    set_ball,
    vertex_set,
)

DEFAULT_MAX_VERTICES = 24


@dataclass(frozen=True)
class ExactResult:
    solution: VertexSet | None
    optimum_size: int | None
    infeasible: bool
    subsets_examined: int


Constraint = tuple[int, int]  # (mask of allowed dominators, required count)


def liar_constraints(g: UnitDiskGraph, target: Iterable[int]) -> list[Constraint]:
    """Covering constraints equivalent to the liar's conditions on ``target``.

    Pairs with disjoint closed neighbourhoods are implied by the single-vertex
    constraints (2 + 2 >= 3), so only pairs within two hops are emitted.
    """
    masks = g.closed_masks
    tgt = vertex_set(g, target)
    out: dict[int, int] = {}
    for v in tgt:
        out[masks[v]] = max(out.get(masks[v], 0), 2)
    for u, v in itertools.combinations(tgt, 2):
        if masks[u] & masks[v]:
            joint = masks[u] | masks[v]
            out[joint] = max(out.get(joint, 0), 3)
    # drop constraints implied by a tighter one on a subset mask
    items = sorted(out.items(), key=lambda kv: kv[0].bit_count())
    kept: list[Constraint] = []
    for mask, k in items:
        if any(k2 >= k and (m2 & mask) == m2 for m2, k2 in kept):
            continue
        kept.append((mask, k))
    return kept


class _Search:
    def __init__(self, universe: VertexSet, constraints: list[Constraint],
                 deadline: float | None):
        self.universe = universe
        self.deadline = deadline
        local = {v: i for i, v in enumerate(universe)}
        cons = []
        for mask, k in constraints:
            lm = 0
            for v in mask_to_set(mask):
                if v in local:
                    lm |= 1 << local[v]
            cons.append((lm, k))
        # tight constraints first: they dominate the packing bound
        cons.sort(key=lambda c: (c[0].bit_count() - c[1], c[0].bit_count()))
        self.constraints = cons
        self.m = len(universe)
        self.nodes = 0
        self.best = self.m + 1
        self.best_mask: int | None = None

    def run(self) -> int | None:
        for mask, k in self.constraints:
            if mask.bit_count() < k:
                return None
        self._dfs(0, 0, 0)
        return self.best_mask

    def _dfs(self, i: int, chosen: int, count: int) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0:
            if time.monotonic() > self.deadline:
                raise OracleTimeout("exact search exceeded its time budget")
        rest = ((1 << self.m) - 1) >> i << i
        lb = 0
        used = 0
        satisfied = True
        for mask, k in self.constraints:
            need = k - (mask & chosen).bit_count()
            if need <= 0:
                continue
            satisfied = False
            avail = mask & rest
            if avail.bit_count() < need:
                return
            if not avail & used:
                lb += need
                used |= avail
        if count + lb >= self.best:
            return
        if satisfied:
            self.best = count
            self.best_mask = chosen
            return
        if i == self.m:
            return
        self._dfs(i + 1, chosen | (1 << i), count + 1)
        self._dfs(i + 1, chosen, count)


def _solve(g: UnitDiskGraph, target: VertexSet, universe: VertexSet,
           max_vertices: int, time_budget: float | None) -> ExactResult:
    if len(universe) > max_vertices:
        raise OracleTooLarge(
            f"{len(universe)} candidate vertices exceeds the cap of {max_vertices}")
    deadline = None if time_budget is None else time.monotonic() + time_budget
    target_set = set(target)
    solution: list[int] = []
    nodes = 0
    for comp in connected_components(g, universe):
        comp_target = [v for v in comp if v in target_set]
        if not comp_target:
            continue
        search = _Search(comp, liar_constraints(g, comp_target), deadline)
        found = search.run()
        nodes += search.nodes
        if found is None:
            return ExactResult(None, None, True, nodes)
        solution.extend(comp[b] for b in mask_to_set(found))
    solution.sort()
    return ExactResult(tuple(solution), len(solution), False, nodes)


def exact_mlds(g: UnitDiskGraph, *, max_vertices: int = DEFAULT_MAX_VERTICES,
               time_budget: float | None = None) -> ExactResult:
    """Minimum liar's dominating set of ``g``; ``infeasible`` when none exists."""
    if not lds_feasible(g):
        return ExactResult(None, None, True, 0)
    everything = tuple(range(g.n))
    return _solve(g, everything, everything, max_vertices, time_budget)


def exact_mlds_restricted(g: UnitDiskGraph, target: Iterable[int], *,
                          max_vertices: int = DEFAULT_MAX_VERTICES,
                          time_budget: float | None = None) -> ExactResult:
    """Minimum D with the liar's conditions required only on ``target``.

    Closed neighbourhoods are taken in ``g``; a dominator must lie within one
    hop of the target, so the candidate universe is the 1-ball of ``target``.
    """
    tgt = vertex_set(g, target)
    if not tgt:
        raise ValueError("target must be nonempty")
    masks = g.closed_masks
    for v in tgt:
        if masks[v].bit_count() < 2:
            raise InfeasibleTarget(f"target vertex {v} has fewer than two dominators")
    for u, v in itertools.combinations(tgt, 2):
        if masks[u] & masks[v] and (masks[u] | masks[v]).bit_count() < 3:
            raise InfeasibleTarget(f"target pair ({u}, {v}) sees fewer than three vertices")
    universe = set_ball(g, tgt, 1)
    result = _solve(g, tgt, universe, max_vertices, time_budget)
    if result.infeasible:  # pragma: no cover - ruled out by the checks above
        raise InfeasibleTarget("restricted instance has no solution")
    return result


def milp_mlds(g: UnitDiskGraph, *, time_budget: float | None = None) -> ExactResult:
    """Minimum LDS size through an integer program solved by HiGHS.

    For instances beyond the reach of the enumeration.  The size is certified
    twice: the rounded solution must pass ``check_lds`` and the solver's dual
    bound must exceed ``size - 1``.  The returned set is an optimum but not
    necessarily the lexicographically first one.
    """
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp
    from scipy.sparse import lil_array

    from .domination import check_lds

    if not lds_feasible(g):
        return ExactResult(None, None, True, 0)
    cons = liar_constraints(g, range(g.n))
    a = lil_array((len(cons), g.n))
    for row, (mask, _) in enumerate(cons):
        for v in mask_to_set(mask):
            a[row, v] = 1
    need = np.array([k for _, k in cons], dtype=float)
    options = {"mip_rel_gap": 0.0}
    if time_budget is not None:
        options["time_limit"] = time_budget
    res = milp(np.ones(g.n), constraints=LinearConstraint(a.tocsr(), lb=need, ub=np.inf),
               integrality=np.ones(g.n), bounds=Bounds(0, 1), options=options)
    if res.status == 1:
        raise OracleTimeout("integer program exceeded its time budget")
    if res.x is None:
        raise OracleTooLarge(f"integer program failed: {res.message}")
    solution = tuple(i for i, x in enumerate(res.x) if x > 0.5)
    dual = getattr(res, "mip_dual_bound", None)
    if not check_lds(g, solution).valid or dual is None or dual <= len(solution) - 1 + 1e-6:
        raise OracleTooLarge("integer program returned an uncertified optimum")
    return ExactResult(solution, len(solution), False, int(getattr(res, "mip_node_count", 0)))
