"""Three sequential maximal independent sets plus patch vertices.

``approx_lds`` returns a liar's dominating set of size at most
``|I1| + |I2| + |I3| + |I1|``; with the packing bound on independent sets in
unit disk graphs this is within a factor ``4 * sqrt(10/3) < 7.31`` of optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .domination import lds_feasible
from .errors import InfeasibleInstance
from .exact import exact_mlds
from .geometry import UnitDiskGraph, VertexSet, vertex_set

# 4 * sqrt(10/3) = 7.3029...; the published constant rounds it up
APPROX_RATIO = Fraction(731, 100)
# |I| <= sqrt(10/3) |D_opt|, compared exactly as 3 |I|^2 <= 10 |D_opt|^2
MIS_BOUND_SQ = Fraction(10, 3)


@dataclass(frozen=True)
class MisLayers:
    i1: VertexSet
    i2: VertexSet
    i3: VertexSet
    patches: VertexSet

    @property
    def solution(self) -> VertexSet:
        return tuple(sorted(set(self.i1) | set(self.i2) | set(self.i3) | set(self.patches)))


def greedy_mis(g: UnitDiskGraph, active: Iterable[int] | None = None) -> VertexSet:
    """Lowest-index-first maximal independent set of the subgraph on ``active``."""
    candidates = range(g.n) if active is None else vertex_set(g, active)
    blocked: set[int] = set()
    chosen = []
    for v in candidates:
        if v in blocked:
            continue
        chosen.append(v)
        blocked.add(v)
        blocked.update(g.adjacency[v])
    return tuple(chosen)


def mis_layers(g: UnitDiskGraph, leaf_fallback: bool = True) -> MisLayers:
    """Run the layering and patch loop; does not check feasibility.

    With ``leaf_fallback=False`` the patch loop is the literal one, which
    leaves the pair (u, v) short when v's only neighbour is u.
    """
    remaining = set(range(g.n))
    layers: list[VertexSet] = []
    for _ in range(3):
        layer = greedy_mis(g, remaining) if remaining else ()
        remaining.difference_update(layer)
        layers.append(layer)
    i1, i2, i3 = layers
    i23 = set(i2) | set(i3)
    patches: set[int] = set()
    for u in i1:
        nbrs = g.adjacency[u]
        hits = [x for x in nbrs if x in i23]
        if not hits:
            if nbrs:
                patches.add(nbrs[0])
        elif len(hits) == 1:
            v = hits[0]
            others = [w for w in g.adjacency[v] if w != u]
            if others:
                patches.add(others[0])
            elif leaf_fallback:
                # v hangs off u alone; a second neighbour of u gives the pair
                # (u, v) its third dominator instead
                alt = [w for w in nbrs if w != v]
                if alt:
                    patches.add(alt[0])
    return MisLayers(i1, i2, i3, tuple(sorted(patches)))


def approx_lds(g: UnitDiskGraph) -> VertexSet:
    if not lds_feasible(g):
        raise InfeasibleInstance("graph has a component with fewer than 3 vertices")
    return mis_layers(g).solution


def mis_vs_opt_ratio(g: UnitDiskGraph, **oracle_kwargs) -> Fraction:
    """``|greedy MIS| / |minimum LDS|`` as an exact fraction."""
    result = exact_mlds(g, **oracle_kwargs)
    if result.infeasible:
        raise InfeasibleInstance("graph has no liar's dominating set")
    return Fraction(len(greedy_mis(g)), result.optimum_size)


def within_mis_bound(ratio: Fraction) -> bool:
    return ratio * ratio <= MIS_BOUND_SQ
