"""Vertex cover on planar max-degree-3 graphs to liar's domination on UDGs.

Input is a planar graph already drawn on the grid: nodes at multiples of 4
units, each edge an axis-parallel chain of length-4 segments.  The output
point set has a node point per vertex, four joint points per segment and a
three-point support stub per node.  A minimum vertex cover of size ``c``
should correspond to a minimum liar's dominating set of size
``c + 3 * ell + 3 * n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import EmbeddingInvalid, StubPlacementFailed
from .exact import exact_mlds
from .geometry import UNIT, Point, build_udg

SEGMENT = 4  # grid units
# stub directions in the order they are tried
STUB_DIRECTIONS = ((1, 0), (-1, 0), (0, 1), (0, -1))
# joint offsets along one segment, in tenths, from the segment's start
SINGLE_SEGMENT_OFFSETS = (10, 15, 25, 30)
IMPROPER_OFFSETS = (10, 15, 25, 35)  # measured from the node end
PROPER_OFFSETS = (5, 15, 25, 35)
STUB_OFFSETS = (2, 12, 14)

GridPoint = tuple[int, int]


@dataclass(frozen=True)
class EmbeddedPlanarGraph:
    """Labelled nodes at grid positions plus one chain of grid points per edge.

    ``edges[k] = (u, v, chain)`` where ``chain`` runs from the position of
    node ``u`` to that of node ``v``.
    """

    labels: tuple[str, ...]
    positions: tuple[GridPoint, ...]
    edges: tuple[tuple[int, int, tuple[GridPoint, ...]], ...]

    def __post_init__(self):
        _validate(self)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def ell(self) -> int:
        return sum(len(chain) - 1 for _, _, chain in self.edges)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b, _ in self.edges)

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b, _ in self.edges]


def _direction(a: GridPoint, b: GridPoint) -> GridPoint:
    dx, dy = b[0] - a[0], b[1] - a[1]
    return ((dx > 0) - (dx < 0), (dy > 0) - (dy < 0))


def _validate(g: EmbeddedPlanarGraph) -> None:
    if len(g.labels) != len(g.positions):
        raise EmbeddingInvalid("labels and positions differ in length")
    if len(set(g.labels)) != len(g.labels):
        raise EmbeddingInvalid("duplicate vertex label")
    if len(set(g.positions)) != len(g.positions):
        raise EmbeddingInvalid("two vertices share a grid position")
    for x, y in g.positions:
        if x % SEGMENT or y % SEGMENT:
            raise EmbeddingInvalid(f"vertex at ({x}, {y}) is not on the (4i, 4j) grid")
    if not g.edges:
        raise EmbeddingInvalid("graph has no edges")
    seen_pairs = set()
    lattice_owner: dict[GridPoint, int] = {}
    node_at = {p: i for i, p in enumerate(g.positions)}
    for k, (u, v, chain) in enumerate(g.edges):
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise EmbeddingInvalid(f"edge {k} has bad endpoints ({u}, {v})")
        pair = (min(u, v), max(u, v))
        if pair in seen_pairs:
            raise EmbeddingInvalid(f"parallel edge between {u} and {v}")
        seen_pairs.add(pair)
        if len(chain) < 2 or chain[0] != g.positions[u] or chain[-1] != g.positions[v]:
            raise EmbeddingInvalid(f"edge {k} chain must run from node {u} to node {v}")
        for a, b in zip(chain, chain[1:]):
            dx, dy = abs(a[0] - b[0]), abs(a[1] - b[1])
            if sorted((dx, dy)) != [0, SEGMENT]:
                raise EmbeddingInvalid(f"edge {k} segment {a}->{b} is not axis-parallel of length 4")
        for p in chain[1:-1]:
            if p in node_at:
                raise EmbeddingInvalid(f"edge {k} passes through a node at {p}")
            if p in lattice_owner:
                raise EmbeddingInvalid(f"edges {lattice_owner[p]} and {k} meet at {p}")
            lattice_owner[p] = k
        if len(set(chain)) != len(chain):
            raise EmbeddingInvalid(f"edge {k} revisits a grid point")
    for v in range(g.n):
        if g.degree(v) > 3:
            raise EmbeddingInvalid(f"vertex {g.labels[v]} has degree above 3")
        dirs = _used_directions(g, v)
        if len(dirs) != len(set(dirs)):
            raise EmbeddingInvalid(f"two edges leave vertex {g.labels[v]} in the same direction")


def _used_directions(g: EmbeddedPlanarGraph, v: int) -> list[GridPoint]:
    out = []
    for a, b, chain in g.edges:
        if a == v:
            out.append(_direction(chain[0], chain[1]))
        if b == v:
            out.append(_direction(chain[-1], chain[-2]))
    return out


@dataclass(frozen=True)
class ReductionInstance:
    points: tuple[Point, ...]
    tags: tuple[str, ...]  # "node", "joint" or "support"
    n: int
    ell: int
    # joint point indices, one 4-tuple per segment in edge/chain order
    segment_joints: tuple[tuple[int, ...], ...]
    # (p, x, y, z) per source vertex
    support_triples: tuple[tuple[int, int, int, int], ...]

    @property
    def k_offset(self) -> int:
        return 3 * self.ell + 3 * self.n

    def indices(self, tag: str) -> list[int]:
        return [i for i, t in enumerate(self.tags) if t == tag]


def _along(start: GridPoint, end: GridPoint, offset: int) -> Point:
    """Point ``offset`` tenths from ``start`` towards ``end`` (grid units in)."""
    dx, dy = _direction(start, end)
    return Point(start[0] * UNIT + dx * offset, start[1] * UNIT + dy * offset)


def build_reduction(g: EmbeddedPlanarGraph) -> ReductionInstance:
    points: list[Point] = [Point(x * UNIT, y * UNIT) for x, y in g.positions]
    tags = ["node"] * g.n
    segments = []
    for _, _, chain in g.edges:
        m = len(chain) - 1
        for s, (a, b) in enumerate(zip(chain, chain[1:])):
            if m == 1:
                placed = [_along(a, b, off) for off in SINGLE_SEGMENT_OFFSETS]
            elif s == 0:
                placed = [_along(a, b, off) for off in IMPROPER_OFFSETS]
            elif s == m - 1:
                placed = [_along(b, a, off) for off in reversed(IMPROPER_OFFSETS)]
            else:
                placed = [_along(a, b, off) for off in PROPER_OFFSETS]
            start = len(points)
            points.extend(placed)
            tags.extend(["joint"] * 4)
            segments.append(tuple(range(start, start + 4)))
    triples = []
    for v in range(g.n):
        used = set(_used_directions(g, v))
        free = next((d for d in STUB_DIRECTIONS if d not in used), None)
        if free is None:
            raise StubPlacementFailed(f"no free direction at vertex {g.labels[v]}")
        px, py = g.positions[v]
        tip = (px + free[0], py + free[1])
        start = len(points)
        points.extend(_along((px, py), tip, off) for off in STUB_OFFSETS)
        tags.extend(["support"] * 3)
        triples.append((v, start, start + 1, start + 2))
    return ReductionInstance(tuple(points), tuple(tags), g.n, g.ell,
                             tuple(segments), tuple(triples))


def min_vertex_cover(n: int, edges: list[tuple[int, int]]) -> tuple[int, ...]:
    """Lexicographically first minimum vertex cover by size-increasing enumeration."""
    for size in range(n + 1):
        for cover in itertools.combinations(range(n), size):
            s = set(cover)
            if all(a in s or b in s for a, b in edges):
                return cover
    raise AssertionError("V is always a cover")  # pragma: no cover


@dataclass(frozen=True)
class Correspondence:
    vc_opt: int
    lds_opt: int
    k_offset: int

    @property
    def equal(self) -> bool:
        return self.lds_opt == self.vc_opt + self.k_offset


def check_correspondence(g: EmbeddedPlanarGraph, *, max_vertices: int = 64,
                         time_budget: float | None = None) -> Correspondence:
    if len(g.edges) < 2:
        raise EmbeddingInvalid("the correspondence needs at least two edges")
    inst = build_reduction(g)
    res = exact_mlds(build_udg(list(inst.points)), max_vertices=max_vertices,
                     time_budget=time_budget)
    vc = min_vertex_cover(g.n, g.edge_pairs())
    return Correspondence(len(vc), res.optimum_size, inst.k_offset)


def parse_embedding(text: str) -> EmbeddedPlanarGraph:
    """Header ``n ell``; ``n`` lines ``label x y``; then one line per edge
    ``u v x0 y0 x1 y1 ... xm ym`` (labels, then the chain in grid units).
    Blank lines and lines starting with ``#`` are skipped."""
    lines = [ln.split() for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise EmbeddingInvalid("empty embedding file")
    try:
        n, ell = (int(t) for t in lines[0])
        labels, positions = [], []
        for row in lines[1:1 + n]:
            label, x, y = row
            labels.append(label)
            positions.append((int(x), int(y)))
        index = {lab: i for i, lab in enumerate(labels)}
        edges = []
        for row in lines[1 + n:]:
            coords = [int(t) for t in row[2:]]
            if len(coords) % 2:
                raise EmbeddingInvalid(f"odd coordinate count on edge line {' '.join(row)}")
            chain = tuple(zip(coords[::2], coords[1::2]))
            edges.append((index[row[0]], index[row[1]], chain))
    except (ValueError, KeyError) as exc:
        raise EmbeddingInvalid(f"malformed embedding file: {exc}") from exc
    if len(labels) != n:
        raise EmbeddingInvalid(f"header promises {n} vertices, file has {len(labels)}")
    g = EmbeddedPlanarGraph(tuple(labels), tuple(positions), tuple(edges))
    if g.ell != ell:
        raise EmbeddingInvalid(f"header promises {ell} segments, chains have {g.ell}")
    return g


def read_embedding(path: str | Path) -> EmbeddedPlanarGraph:
    return parse_embedding(Path(path).read_text())


CORPUS = ("path2", "star3", "cycle4", "bend2")


def load_corpus(name: str) -> EmbeddedPlanarGraph:
    text = resources.files("mlds").joinpath("corpus").joinpath(f"{name}.emb").read_text()
    return parse_embedding(text)
