"""Approximation scheme built on a 4-separated collection of hop balls.

Each round seeds at the lowest-index remaining vertex ``v`` and grows ``r``
from 2 while ``|D(B(v, r + 4))| > (1 + eps) |D(B(v, r))|``, where ``B`` is a
hop ball (hop distances in the whole graph, restricted to the vertices not
yet assigned) and ``D`` is the local solver.  The outer ball, minus the
vertices lent to stranded components of size one or two, becomes the
neighbourhood ``N_i``; the inner ball is ``S_i``.  The answer is the union
of minimum liar's dominating sets of the ``N_i``.

A lent vertex sits exactly four hops from ``S_i``, so it is kept out of every
later inner ball (it may still join a later ``N_j``); otherwise a later
``S_j`` could pick it up and the collection would stop being 4-separated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .approx import mis_layers
from .domination import check_lds, lds_feasible
from .errors import InfeasibleInstance, PatchNotFound, RadiusCapExceeded
from .exact import DEFAULT_MAX_VERTICES, exact_mlds_restricted, liar_constraints
from .geometry import (
    UnitDiskGraph,
    VertexSet,
    connected_components,
    hop_distances,
    mask_to_set,
    set_ball,
    set_distance,
    vertex_set,
)

SEPARATION = 4
LOCAL_SOLVERS = ("exact", "heuristic")


@dataclass(frozen=True)
class PtasConfig:
    epsilon: Fraction = Fraction(1)
    local_solver: str = "exact"
    r_cap: int = 50
    max_vertices: int = DEFAULT_MAX_VERTICES

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.r_cap < 2:
            raise ValueError("r_cap must be at least 2")
        if self.local_solver not in LOCAL_SOLVERS:
            raise ValueError(f"local_solver must be one of {LOCAL_SOLVERS}")

    @property
    def rho(self) -> Fraction:
        return 1 + self.epsilon


@dataclass
class SeparatedDecomposition:
    seeds: list[int] = field(default_factory=list)
    radii: list[int] = field(default_factory=list)
    s_sets: list[VertexSet] = field(default_factory=list)
    n_sets: list[VertexSet] = field(default_factory=list)
    local_solutions: list[VertexSet] = field(default_factory=list)
    # vertices added after the union to fix cross-neighbourhood pairs
    repairs: list[int] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.seeds)


def heuristic_lds_of(g: UnitDiskGraph, target: Iterable[int]) -> VertexSet:
    """Layered-MIS solution on the 1-ball of ``target``, topped up until every
    liar's constraint of the target holds."""
    tgt = vertex_set(g, target)
    sub, back = g.induced(set_ball(g, tgt, 1))
    chosen = {back[v] for v in mis_layers(sub).solution}
    for mask, k in liar_constraints(g, tgt):
        members = mask_to_set(mask)
        missing = k - sum(1 for v in members if v in chosen)
        for v in members:
            if missing <= 0:
                break
            if v not in chosen:
                chosen.add(v)
                missing -= 1
    return tuple(sorted(chosen))


def _local_solver(cfg: PtasConfig) -> Callable[[UnitDiskGraph, VertexSet], VertexSet]:
    if cfg.local_solver == "heuristic":
        return heuristic_lds_of

    def solve(g: UnitDiskGraph, target: VertexSet) -> VertexSet:
        return exact_mlds_restricted(g, target, max_vertices=cfg.max_vertices).solution

    return solve


def grow_radius(g: UnitDiskGraph, v: int, cfg: PtasConfig,
                remaining: Iterable[int] | None = None,
                _cache: dict | None = None,
                excluded: Iterable[int] = ()) -> tuple[int, VertexSet, VertexSet]:
    """Smallest ``r >= 2`` with ``|D(B(v, r+4))| <= rho |D(B(v, r))|``.

    Returns ``(r, B(v, r), B(v, r + 4))``.  Vertices in ``excluded`` are left
    out of the inner ball only.  If the balls stop changing before the
    condition is met (possible only when ``excluded`` is nonempty) the
    saturated radius is returned and the caller must notice.
    """
    g.check_vertex(v)
    dist = hop_distances(g, v)
    allowed = None if remaining is None else set(remaining)
    skip = set(excluded)
    solve = _local_solver(cfg)
    cache = {} if _cache is None else _cache
    reach = [d for u, d in dist.items() if allowed is None or u in allowed]
    saturated_at = max(reach, default=0)

    def ball(r: int, drop: set[int]) -> VertexSet:
        return tuple(sorted(u for u, d in dist.items()
                            if d <= r and (allowed is None or u in allowed)
                            and u not in drop))

    def size(target: VertexSet) -> int:
        if target not in cache:
            cache[target] = solve(g, target)
        return len(cache[target])

    r = 2
    while True:
        if r > cfg.r_cap:
            raise RadiusCapExceeded(f"radius passed the cap {cfg.r_cap} at seed {v}")
        inner, outer = ball(r, skip), ball(r + SEPARATION, set())
        if not inner or r >= saturated_at:
            return r, inner, outer
        if inner == outer or size(outer) <= cfg.rho * size(inner):
            return r, inner, outer
        r += 1


def _connected(g: UnitDiskGraph, vertices: tuple[int, ...]) -> bool:
    return len(connected_components(g, vertices)) == 1


def patch_small_components(g: UnitDiskGraph, u_i: Iterable[int],
                           remaining: Iterable[int]) -> VertexSet:
    """Hand vertices of ``u_i`` back to components of ``remaining - u_i`` with
    one or two vertices, so that no such component is stranded."""
    u = set(vertex_set(g, u_i))
    rem = set(vertex_set(g, remaining))
    while True:
        small = [c for c in connected_components(g, rem - u) if len(c) <= 2]
        if not small:
            return tuple(sorted(u))
        comp = small[0]
        near = sorted(set(set_ball(g, comp, 2)) & u)
        if len(comp) == 1:
            pick = next((xy for xy in itertools.combinations(near, 2)
                         if _connected(g, comp + xy)), None)
        else:
            pick = next(((x,) for x in near if _connected(g, comp + (x,))), None)
        if pick is None:
            raise PatchNotFound(f"no vertices of U can join stranded component {comp}")
        u.difference_update(pick)


def ptas_lds(g: UnitDiskGraph, cfg: PtasConfig | None = None
             ) -> tuple[VertexSet, SeparatedDecomposition]:
    cfg = cfg or PtasConfig()
    if not lds_feasible(g):
        raise InfeasibleInstance("graph has a component with fewer than 3 vertices")
    solve = _local_solver(cfg)
    cache: dict = {}

    def local(target: VertexSet) -> VertexSet:
        if target not in cache:
            cache[target] = solve(g, target)
        return cache[target]

    dec = SeparatedDecomposition()
    remaining = set(range(g.n))
    lent: set[int] = set()
    while remaining:
        v = min(remaining - lent, default=min(remaining))
        r_hat, s_i, u_i = grow_radius(g, v, cfg, remaining, cache, excluded=lent)
        certified = bool(s_i) and (s_i == u_i or len(local(u_i)) <= cfg.rho * len(local(s_i)))
        if not certified:
            # take v's whole component; trivially within ratio of itself
            s_i = n_i = next(c for c in connected_components(g, remaining) if v in c)
        else:
            n_i = patch_small_components(g, u_i, remaining)
            lent.update(set(u_i) - set(n_i))
        dec.seeds.append(v)
        dec.radii.append(r_hat)
        dec.s_sets.append(s_i)
        dec.n_sets.append(n_i)
        remaining.difference_update(n_i)
        lent.intersection_update(remaining)
    dec.local_solutions = [local(n_i) for n_i in dec.n_sets]
    union, dec.repairs = repair_union(g, set().union(*dec.local_solutions))
    return union, dec


def repair_union(g: UnitDiskGraph, d: Iterable[int]) -> tuple[VertexSet, list[int]]:
    """Add vertices until ``d`` is a liar's dominating set of ``g``.

    The union of the local solutions double-dominates every vertex, but an
    adjacent pair split across two neighbourhoods can see the same two
    dominators.  Each repair adds the lowest-index vertex of ``N[u] | N[v]``
    outside ``d`` for the first such pair.
    """
    chosen = set(d)
    added = []
    masks = g.closed_masks
    while True:
        cert = check_lds(g, chosen)
        if cert.valid:
            return tuple(sorted(chosen)), added
        if cert.witness_vertex is not None:
            u, v = cert.witness_vertex, cert.witness_vertex
        else:
            u, v = cert.witness_pair
        w = next(x for x in mask_to_set(masks[u] | masks[v]) if x not in chosen)
        chosen.add(w)
        added.append(w)


def decomposition_violations(g: UnitDiskGraph, dec: SeparatedDecomposition,
                             separation: int = SEPARATION) -> list[str]:
    """Human-readable list of broken decomposition invariants (empty if none)."""
    problems = []
    for i, (s, n) in enumerate(zip(dec.s_sets, dec.n_sets)):
        if not set(s) <= set(n):
            problems.append(f"S_{i} is not contained in N_{i}")
    covered: list[int] = [v for n in dec.n_sets for v in n]
    if len(covered) != len(set(covered)):
        problems.append("neighbourhoods overlap")
    if set(covered) != set(range(g.n)):
        problems.append("neighbourhoods do not cover V")
    for i, j in itertools.combinations(range(dec.k), 2):
        d = set_distance(g, dec.s_sets[i], dec.s_sets[j])
        if d <= separation:
            problems.append(f"S_{i} and S_{j} are only {d} hops apart")
    return problems


def closed_neighbourhoods_disjoint(g: UnitDiskGraph, dec: SeparatedDecomposition) -> bool:
    balls = [set(set_ball(g, s, 1)) for s in dec.s_sets]
    return all(not (a & b) for a, b in itertools.combinations(balls, 2))
