"""Domination predicates and the liar's domination certificate."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .geometry import UnitDiskGraph, connected_components, set_to_mask, vertex_set


@dataclass(frozen=True)
class LdsCertificate:
    condition1_ok: bool
    condition2_ok: bool
    # lowest-index vertex with |N[v] & D| < 2
    witness_vertex: int | None = None
    # lexicographically first pair with |(N[u] | N[v]) & D| < 3, and that count
    witness_pair: tuple[int, int] | None = None
    witness_count: int | None = None

    @property
    def valid(self) -> bool:
        return self.condition1_ok and self.condition2_ok

    @property
    def witness(self) -> int | tuple[int, int] | None:
        if self.witness_vertex is not None:
            return self.witness_vertex
        return self.witness_pair

    def describe(self) -> str:
        lines = [
            f"valid: {str(self.valid).lower()}",
            f"condition1_ok: {str(self.condition1_ok).lower()}",
            f"condition2_ok: {str(self.condition2_ok).lower()}",
        ]
        if self.witness_vertex is not None:
            lines.append(f"condition1_witness: {self.witness_vertex}")
        if self.witness_pair is not None:
            u, v = self.witness_pair
            lines.append(f"condition2_witness: {u} {v} (sees {self.witness_count})")
        return "\n".join(lines)


def _counts(g: UnitDiskGraph, dmask: int) -> list[int]:
    return [(m & dmask).bit_count() for m in g.closed_masks]


def is_dominating(g: UnitDiskGraph, d: Iterable[int]) -> bool:
    return is_ktuple_dominating(g, d, 1)


def is_ktuple_dominating(g: UnitDiskGraph, d: Iterable[int], k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    dmask = set_to_mask(vertex_set(g, d))
    return all(c >= k for c in _counts(g, dmask))


def check_lds(g: UnitDiskGraph, d: Iterable[int]) -> LdsCertificate:
    """Evaluate both liar's conditions for ``d`` on ``g``.

    Only vertices seeing at most two members of ``d`` can take part in a
    violating pair, so the pair scan is restricted to them.
    """
    dmask = set_to_mask(vertex_set(g, d))
    masks = g.closed_masks
    counts = _counts(g, dmask)

    witness_vertex = next((v for v, c in enumerate(counts) if c < 2), None)

    low = [v for v, c in enumerate(counts) if c <= 2]
    witness_pair = None
    witness_count = None
    for i, u in enumerate(low):
        seen_u = masks[u] & dmask
        for v in low[i + 1:]:
            joint = (seen_u | (masks[v] & dmask)).bit_count()
            if joint < 3:
                witness_pair, witness_count = (u, v), joint
                break
        if witness_pair is not None:
            break

    return LdsCertificate(
        condition1_ok=witness_vertex is None,
        condition2_ok=witness_pair is None,
        witness_vertex=witness_vertex,
        witness_pair=witness_pair,
        witness_count=witness_count,
    )


def is_lds(g: UnitDiskGraph, d: Iterable[int]) -> bool:
    return check_lds(g, d).valid


def check_lds_of(g: UnitDiskGraph, d: Iterable[int], target: Iterable[int]) -> bool:
    """Liar's conditions demanded only for vertices and pairs of ``target``
    (dominators may be any vertex of ``g``)."""
    dmask = set_to_mask(vertex_set(g, d))
    masks = g.closed_masks
    tgt = vertex_set(g, target)
    seen = [masks[v] & dmask for v in tgt]
    if any(s.bit_count() < 2 for s in seen):
        return False
    low = [s for s in seen if s.bit_count() == 2]
    # two vertices each seeing >= 2 fail jointly only when they see the same pair
    return len(set(low)) == len(low)


def lds_feasible(g: UnitDiskGraph) -> bool:
    """Some LDS exists iff every connected component has >= 3 vertices."""
    return all(len(c) >= 3 for c in connected_components(g))
