"""Exact planar geometry and unit disk graphs.

Coordinates are integers counting tenths of a unit, so the unit-distance
test ``dx*dx + dy*dy <= 100`` is exact.  Vertex sets are sorted tuples of
vertex indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import EmptyInstance, EmptySet, InvalidVertex, ParseError

UNIT = 10
UNIT_SQ = UNIT * UNIT

VertexSet = tuple[int, ...]


class Point(NamedTuple):
    x: int
    y: int

    def dist_sq(self, other: Point) -> int:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy


def within(a: Point, b: Point, radius_tenths: int) -> bool:
    """Closed-disk membership: is ``b`` at distance <= radius from ``a``?"""
    return a.dist_sq(b) <= radius_tenths * radius_tenths


def unit_adjacent(a: Point, b: Point) -> bool:
    return a.dist_sq(b) <= UNIT_SQ


@dataclass(frozen=True, eq=False)
class UnitDiskGraph:
    points: tuple[Point, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Bitmask of N[v] for every vertex v."""
        return tuple(
            sum(1 << u for u in nbrs) | (1 << v)
            for v, nbrs in enumerate(self.adjacency)
        )

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < len(self.points):
            raise InvalidVertex(f"vertex {v!r} not in [0, {len(self.points)})")
        return v

    def has_duplicate_points(self) -> bool:
        return len(set(self.points)) != len(self.points)

    def induced(self, vertices: Iterable[int]) -> tuple[UnitDiskGraph, VertexSet]:
        """Subgraph on ``vertices``; also returns the local-to-global index map."""
        keep = vertex_set(self, vertices)
        local = {v: i for i, v in enumerate(keep)}
        adjacency = tuple(
            tuple(local[u] for u in self.adjacency[v] if u in local) for v in keep
        )
        return UnitDiskGraph(tuple(self.points[v] for v in keep), adjacency), keep


def vertex_set(g: UnitDiskGraph, members: Iterable[int]) -> VertexSet:
    """Validate and normalise an iterable of indices into a sorted tuple."""
    out = sorted(set(members))
    for v in out:
        g.check_vertex(v)
    return tuple(out)


def mask_to_set(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def set_to_mask(members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def build_udg(points: Sequence[Point | tuple[int, int]]) -> UnitDiskGraph:
    """Unit disk graph on ``points`` (closed threshold, exact integers).

    Pairs are found by bucketing into unit cells, so only the nine
    surrounding cells are scanned per point.
    """
    if len(points) == 0:
        raise EmptyInstance("a unit disk graph needs at least one point")
    pts = tuple(Point(int(p[0]), int(p[1])) for p in points)
    cells: dict[tuple[int, int], list[int]] = {}
    for i, p in enumerate(pts):
        cells.setdefault((p.x // UNIT, p.y // UNIT), []).append(i)
    adjacency: list[list[int]] = [[] for _ in pts]
    for (cx, cy), members in cells.items():
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                other = cells.get((cx + dx, cy + dy))
                if other is None:
                    continue
                for i in members:
                    pi = pts[i]
                    for j in other:
                        if j > i and pi.dist_sq(pts[j]) <= UNIT_SQ:
                            adjacency[i].append(j)
                            adjacency[j].append(i)
    return UnitDiskGraph(pts, tuple(tuple(sorted(a)) for a in adjacency))


def closed_neighborhood(g: UnitDiskGraph, v: int) -> VertexSet:
    g.check_vertex(v)
    return tuple(sorted(g.adjacency[v] + (v,)))


def _bfs(g: UnitDiskGraph, sources: Iterable[int], limit: int | None,
         within_set: set[int] | None = None) -> dict[int, int]:
    dist: dict[int, int] = {}
    queue: deque[int] = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in g.adjacency[u]:
            if w not in dist and (within_set is None or w in within_set):
                dist[w] = d + 1
                queue.append(w)
    return dist


def bfs_ball(g: UnitDiskGraph, v: int, r: int) -> VertexSet:
    """All vertices within ``r`` hops of ``v``."""
    g.check_vertex(v)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return tuple(sorted(_bfs(g, (v,), r)))


def set_ball(g: UnitDiskGraph, sources: Iterable[int], r: int) -> VertexSet:
    """All vertices within ``r`` hops of some vertex of ``sources``."""
    src = vertex_set(g, sources)
    return tuple(sorted(_bfs(g, src, r)))


def hop_distances(g: UnitDiskGraph, v: int) -> dict[int, int]:
    g.check_vertex(v)
    return _bfs(g, (v,), None)


def connected_components(g: UnitDiskGraph,
                         within: Iterable[int] | None = None) -> list[VertexSet]:
    """Components of ``g`` (or of the subgraph induced by ``within``),
    ordered by smallest member."""
    allowed = set(range(g.n)) if within is None else set(vertex_set(g, within))
    seen: set[int] = set()
    comps = []
    for v in sorted(allowed):
        if v in seen:
            continue
        comp = _bfs(g, (v,), None, allowed)
        seen.update(comp)
        comps.append(tuple(sorted(comp)))
    return comps


def set_distance(g: UnitDiskGraph, a: Iterable[int], b: Iterable[int]) -> float | int:
    """Minimum hop distance between two vertex sets; ``inf`` if unreachable."""
    a = vertex_set(g, a)
    b = set(vertex_set(g, b))
    if not a or not b:
        raise EmptySet("set_distance needs two nonempty sets")
    dist = _bfs(g, a, None)
    best = min((dist[v] for v in b if v in dist), default=None)
    return float("inf") if best is None else best


# ----------------------------------------------------------------------
# point-set files: one "x y" pair per line, at most one fractional digit
# ----------------------------------------------------------------------

def parse_tenths(token: str) -> int:
    try:
        value = Fraction(token) * UNIT
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a decimal number: {token!r}") from exc
    if value.denominator != 1 or "/" in token:
        raise ParseError(f"{token!r} has more than one fractional digit")
    return int(value)


def format_tenths(value: int) -> str:
    sign = "-" if value < 0 else ""
    whole, frac = divmod(abs(value), UNIT)
    return f"{sign}{whole}.{frac}"


def parse_points(text: str) -> list[Point]:
    points = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two coordinates, got {line!r}")
        points.append(Point(parse_tenths(parts[0]), parse_tenths(parts[1])))
    return points


def format_points(points: Iterable[Point], header: str | None = None) -> str:
    lines = [f"# {row}" for row in header.splitlines()] if header else []
    lines += [f"{format_tenths(p.x)} {format_tenths(p.y)}" for p in points]
    return "\n".join(lines) + "\n"


def read_points(path) -> list[Point]:
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh.read())


def write_points(path, points: Iterable[Point], header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_points(points, header))
